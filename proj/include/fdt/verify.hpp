#pragma once

// Closed form vs. oracle checks behind `fdt verify`.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fdt {

/// Deliberate defects for exercising the harness.
enum class Fault {
  None,
  GHilbertSign,  // g_hilbert replaced by -g_hilbert in the checks that use it
};

std::optional<Fault> parse_fault(std::string_view name);

struct CheckResult {
  std::string name;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct VerifyReport {
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool passed() const;
  /// Fixed-width table, byte-identical for identical seeds.
  std::string format() const;
};

inline constexpr std::uint64_t kDefaultSeed = 20100603;

VerifyReport run_verification(std::uint64_t seed = kDefaultSeed, Fault fault = Fault::None);

}  // namespace fdt
