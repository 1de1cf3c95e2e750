#include "fdt/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <string>

#include "fdt/error.hpp"

namespace fdt {
namespace {

// Kronrod abscissae on [0, 1); odd indices are the 7-point Gauss nodes.
constexpr double kXk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
constexpr double kWk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

template <class T>
struct Rule {
  T kronrod{};
  double error = 0.0;
  double abs_mass = 0.0;  // integral of |f|, for the roundoff floor
};

template <class T>
Rule<T> gk15(const std::function<T(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double hw = 0.5 * (b - a);
  const T fc = f(c);
  T k = fc * kWk[7];
  T gs = fc * kWg[3];
  double mass = std::abs(fc) * kWk[7];
  for (int j = 0; j < 7; ++j) {
    const double dx = hw * kXk[j];
    const T f1 = f(c - dx);
    const T f2 = f(c + dx);
    k += (f1 + f2) * kWk[j];
    mass += (std::abs(f1) + std::abs(f2)) * kWk[j];
    if (j % 2 == 1) gs += (f1 + f2) * kWg[j / 2];
  }
  Rule<T> r;
  r.kronrod = k * hw;
  r.error = std::abs((k - gs) * hw);
  r.abs_mass = mass * std::abs(hw);
  return r;
}

template <class T>
struct Segment {
  double a = 0.0;
  double b = 0.0;
  int depth = 0;
  Rule<T> rule;

  double floor() const { return 50.0 * std::numeric_limits<double>::epsilon() * rule.abs_mass; }
  double reported_error() const { return std::max(rule.error, floor()); }
  bool refinable() const { return rule.error > floor(); }
};

// Subintervals bisected per round. Fixed, so the sequence of refinements
// (and hence the result) does not depend on the thread count.
constexpr std::size_t kBatch = 32;
constexpr std::size_t kMaxSegments = 1u << 20;

}  // namespace

std::vector<Interval> split_uniform(double a, double b, int count) {
  std::vector<Interval> out;
  out.reserve(static_cast<std::size_t>(count));
  const double w = (b - a) / count;
  for (int i = 0; i < count; ++i) {
    const double lo = a + w * i;
    const double hi = i + 1 == count ? b : a + w * (i + 1);
    out.push_back({lo, hi});
  }
  return out;
}

template <class T>
QuadResult<T> integrate_panels(const std::function<T(double)>& f, std::span<const Interval> panels,
                               const AdaptiveCfg& cfg, Execution exec) {
  const bool parallel = exec == Execution::Parallel;
  std::vector<Segment<T>> segs(panels.size());
  std::vector<std::exception_ptr> failures(2 * std::max(panels.size(), kBatch));
  auto rethrow = [&failures] {
    for (auto& e : failures) {
      if (e) std::rethrow_exception(e);
    }
  };

  const auto n0 = static_cast<long>(panels.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long i = 0; i < n0; ++i) {
    try {
      segs[i] = {panels[i].a, panels[i].b, 0, gk15(f, panels[i].a, panels[i].b)};
    } catch (...) {
      failures[i] = std::current_exception();
    }
  }
  rethrow();
  long evaluations = 15 * n0;

  // Global strategy: bisect the subintervals with the largest error until the
  // summed error meets the tolerance. Roundoff-limited pieces are never split.
  std::vector<std::size_t> order;
  while (true) {
    T value{};
    double error = 0.0;
    for (const auto& sg : segs) {
      value += sg.rule.kronrod;
      error += sg.reported_error();
    }
    const double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(value));
    if (error <= tol) break;

    order.clear();
    for (std::size_t i = 0; i < segs.size(); ++i) {
      if (segs[i].refinable()) order.push_back(i);
    }
    if (order.empty()) break;
    const std::size_t take = std::min(kBatch, order.size());
    std::partial_sort(order.begin(), order.begin() + static_cast<long>(take), order.end(),
                      [&segs](std::size_t x, std::size_t y) {
                        if (segs[x].rule.error != segs[y].rule.error) {
                          return segs[x].rule.error > segs[y].rule.error;
                        }
                        return x < y;
                      });
    order.resize(take);
    for (const std::size_t i : order) {
      const Segment<T>& sg = segs[i];
      const double m = 0.5 * (sg.a + sg.b);
      if (sg.depth >= cfg.max_depth || !(m > sg.a && m < sg.b) || segs.size() >= kMaxSegments) {
        throw ConvergenceError("adaptive quadrature: max_depth exhausted on [" +
                               std::to_string(sg.a) + ", " + std::to_string(sg.b) + "]");
      }
    }

    std::vector<Segment<T>> halves(2 * take);
    const auto nb = static_cast<long>(2 * take);
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long k = 0; k < nb; ++k) {
      const Segment<T>& parent = segs[order[static_cast<std::size_t>(k / 2)]];
      const double m = 0.5 * (parent.a + parent.b);
      const double lo = k % 2 == 0 ? parent.a : m;
      const double hi = k % 2 == 0 ? m : parent.b;
      try {
        halves[k] = {lo, hi, parent.depth + 1, gk15(f, lo, hi)};
      } catch (...) {
        failures[k] = std::current_exception();
      }
    }
    rethrow();
    evaluations += 15 * nb;
    for (std::size_t j = 0; j < take; ++j) {
      segs[order[j]] = halves[2 * j];
      segs.push_back(halves[2 * j + 1]);
    }
  }

  // Sum in position order so the result is independent of refinement history.
  std::sort(segs.begin(), segs.end(),
            [](const Segment<T>& x, const Segment<T>& y) { return x.a < y.a; });
  QuadResult<T> total;
  total.evaluations = evaluations;
  for (const auto& sg : segs) {
    total.value += sg.rule.kronrod;
    total.error += sg.reported_error();
  }
  return total;
}

template QuadResult<double> integrate_panels<double>(const std::function<double(double)>&,
                                                     std::span<const Interval>, const AdaptiveCfg&,
                                                     Execution);
template QuadResult<Complex> integrate_panels<Complex>(const std::function<Complex(double)>&,
                                                       std::span<const Interval>,
                                                       const AdaptiveCfg&, Execution);

}  // namespace fdt
