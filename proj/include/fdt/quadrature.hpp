#pragma once

// Adaptive Gauss-Kronrod (7/15) quadrature over a list of panels.
//
// Each panel is refined independently by bisection; the panel results are
// summed in panel order, so the serial and OpenMP paths return bitwise
// identical values.

#include <functional>
#include <span>
#include <vector>

#include "fdt/specfun.hpp"

namespace fdt {

enum class Execution { Serial, Parallel };

struct Interval {
  double a = 0.0;
  double b = 0.0;
};

template <class T>
struct QuadResult {
  T value{};
  double error = 0.0;  // sum over accepted sub-panels of max(|Kronrod - Gauss|, roundoff floor)
  long evaluations = 0;
};

struct AdaptiveCfg {
  double rel_tol = 1e-12;
  double abs_tol = 1e-14;
  int max_depth = 40;
};

/// Integrates f over the union of `panels` with 15-point Gauss-Kronrod rules,
/// bisecting the worst subintervals (32 per round) until the summed error is
/// within max(abs_tol, rel_tol |value|). Subintervals whose error is at the
/// roundoff floor are never split. Throws ConvergenceError if a subinterval
/// that must be split is already at max_depth. Serial and parallel execution
/// give bitwise identical results.
template <class T>
QuadResult<T> integrate_panels(const std::function<T(double)>& f, std::span<const Interval> panels,
                               const AdaptiveCfg& cfg, Execution exec = Execution::Parallel);

/// `count` equal panels covering [a, b].
std::vector<Interval> split_uniform(double a, double b, int count);

extern template QuadResult<double> integrate_panels<double>(const std::function<double(double)>&,
                                                            std::span<const Interval>,
                                                            const AdaptiveCfg&, Execution);
extern template QuadResult<Complex> integrate_panels<Complex>(
    const std::function<Complex(double)>&, std::span<const Interval>, const AdaptiveCfg&,
    Execution);

}  // namespace fdt
