#pragma once

// Tabulated curves for the command-line front end and their CSV form.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fdt/fermi.hpp"
#include "fdt/quadrature.hpp"
#include "fdt/transport.hpp"

namespace fdt {

struct CurveTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<std::pair<std::string, double>> metadata;  // kept in insertion order

  /// Throws DomainError if a row's arity differs from the column count.
  void validate() const;
  /// Throws std::out_of_range for an unknown key.
  double meta(std::string_view key) const;
};

/// '#'-prefixed key=value metadata lines, a header line, then one row per
/// line; numbers use 17 significant digits so every double round-trips.
std::string to_csv(const CurveTable& table);

/// Inverse of to_csv. Throws DomainError on malformed input.
CurveTable parse_csv(std::string_view text);

/// Uniform grid with `points` nodes; node i is ((points-1-i) min + i max)/(points-1),
/// so a grid with 2n - 1 points contains every node of the n-point grid exactly
/// and a grid over [-a, a] is exactly antisymmetric.
struct GridSpec {
  double min = 0.0;
  double max = 1.0;
  long points = 2;

  void validate() const;
  double step() const { return (max - min) / static_cast<double>(points - 1); }
  double at(long i) const;
};

/// Columns y, g, g_H, dg_H/dy. The derivative is the centred three-point
/// difference (g_H(y + h) - g_H(y - h)) / 2h at the grid step h.
CurveTable ghilbert_table(const DoubleFermi& d, const GridSpec& grid,
                          Execution exec = Execution::Parallel);

/// Columns lambda, Re g_F, Im g_F.
CurveTable gfourier_table(const DoubleFermi& d, const GridSpec& grid,
                          Execution exec = Execution::Parallel);

/// key=value report of I_exact, I_lowT, I_highT and optionally K(lambda).
/// At V = omega the I_lowT entry is replaced by a `note` entry.
std::vector<std::pair<std::string, std::string>> transport_report(
    const TransportParams& tp, std::optional<double> lambda);

/// 17-significant-digit formatting used by every emitted number.
std::string format_real(double v);

}  // namespace fdt
