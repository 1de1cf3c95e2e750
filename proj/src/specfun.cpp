#include "fdt/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "fdt/error.hpp"

namespace fdt {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// B_{2k} / (2k), k = 1..7.
constexpr double kStirling[] = {
    1.0 / 12.0,       -1.0 / 120.0, 1.0 / 252.0, -1.0 / 240.0,
    1.0 / 132.0,      -691.0 / 32760.0, 1.0 / 12.0,
};

bool is_nonpositive_integer(Complex z) {
  if (z.imag() != 0.0 || z.real() > 0.0) return false;
  const double x = z.real();
  return std::abs(x - std::round(x)) <= 4.0 * kEps * std::max(1.0, std::abs(x));
}

void require_finite(Complex z, const char* what) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError(std::string(what) + ": non-finite argument");
  }
}

// Re z >= 0, z != 0.
Complex digamma_right_half(Complex z) {
  Complex shift{0.0, 0.0};
  while (std::abs(z) < 10.0) {
    shift += 1.0 / z;
    z += 1.0;
  }
  const Complex inv = 1.0 / z;
  const Complex inv2 = inv * inv;
  Complex series{kStirling[6], 0.0};
  for (int k = 5; k >= 0; --k) series = kStirling[k] + inv2 * series;
  series *= inv2;
  return std::log(z) - 0.5 * inv - series - shift;
}

// Im z >= 0 (including +0).
Complex digamma_upper(Complex z) {
  if (is_nonpositive_integer(z)) {
    throw PoleError("digamma: pole at z = " + std::to_string(z.real()));
  }
  if (z.real() < 0.0) {
    // Psi(z) = Psi(1 - z) - pi cot(pi z)
    return digamma(1.0 - z) - kPi * cot_pi(z);
  }
  return digamma_right_half(z);
}

void require_w_regular(Complex w, const char* what) {
  require_finite(w, what);
  if (is_nonpositive_integer(w)) {
    throw PoleError(std::string(what) + ": w is a non-positive integer");
  }
}

void require_unit_disc(Complex z, const char* what) {
  require_finite(z, what);
  if (!(std::abs(z) < 1.0)) {
    throw DomainError(std::string(what) + ": requires |z| < 1");
  }
}

// Stops once `bound` (an estimate of the remaining tail) has been below
// rel_tol * |sum| for three consecutive terms.
class TailMonitor {
 public:
  explicit TailMonitor(double rel_tol) : rel_tol_(rel_tol) {}

  bool done(double bound, Complex sum) {
    if (bound <= rel_tol_ * std::abs(sum)) {
      ++hits_;
    } else {
      hits_ = 0;
    }
    return hits_ >= 3;
  }

 private:
  double rel_tol_;
  int hits_ = 0;
};

}  // namespace

void SeriesCfg::validate() const {
  if (!(rel_tol > 0.0 && rel_tol < 1.0)) {
    throw DomainError("SeriesCfg: rel_tol must lie in (0, 1)");
  }
  if (max_terms < 16) throw DomainError("SeriesCfg: max_terms must be >= 16");
}

Complex digamma(Complex z) {
  require_finite(z, "digamma");
  if (std::signbit(z.imag())) return std::conj(digamma_upper(std::conj(z)));
  return digamma_upper(z);
}

double digamma(double x) { return digamma(Complex{x, 0.0}).real(); }

Complex cot_pi(Complex z) {
  require_finite(z, "cot_pi");
  const double x = z.real() - std::round(z.real());
  const double y = z.imag();
  if (x == 0.0 && y == 0.0) throw PoleError("cot_pi: pole at real integer");
  const double a = 2.0 * kPi * x;
  const double b = 2.0 * kPi * y;
  if (std::abs(b) > 40.0) {
    const double ch = std::cosh(b);  // may overflow to inf; ratios then vanish
    return Complex{std::sin(a) / ch, -std::tanh(b)} / (1.0 - std::cos(a) / ch);
  }
  // cosh b - cos a = 2 [sinh^2(b/2) + sin^2(a/2)], free of cancellation near poles
  const double sh = std::sinh(0.5 * b);
  const double sn = std::sin(0.5 * a);
  const double den = 2.0 * (sh * sh + sn * sn);
  return Complex{std::sin(a) / den, -std::sinh(b) / den};
}

double im_psi_imag_axis(double x) {
  if (x == 0.0 || !std::isfinite(x)) {
    throw DomainError("im_psi_imag_axis: requires finite x != 0");
  }
  return 0.5 / x + 0.5 * kPi / std::tanh(kPi * x);
}

Complex lerch_phi_direct(Complex z, Complex w, const SeriesCfg& cfg) {
  cfg.validate();
  require_unit_disc(z, "lerch_phi");
  require_w_regular(w, "lerch_phi");

  const double r = std::abs(z);
  long budget = cfg.max_terms;
  if (r > 0.5) {
    // geometric tail r^n / (1 - r) must fall below rel_tol
    const double need = std::log(cfg.rel_tol * (1.0 - r)) / std::log(r);
    budget = std::max<long>(budget, static_cast<long>(std::min(need, 1e8)) + 64);
  }

  TailMonitor monitor(cfg.rel_tol);
  Complex sum{0.0, 0.0};
  Complex zn{1.0, 0.0};
  for (long n = 0; n < budget; ++n) {
    const Complex term = zn / (static_cast<double>(n) + w);
    sum += term;
    const bool settled = static_cast<double>(n) + w.real() > 0.0;
    if (monitor.done(settled ? std::abs(term) / (1.0 - r) : HUGE_VAL, sum)) return sum;
    zn *= z;
  }
  throw ConvergenceError("lerch_phi: direct series did not converge");
}

Complex lerch_phi_near_unity(Complex z, Complex w, const SeriesCfg& cfg) {
  cfg.validate();
  require_unit_disc(z, "lerch_phi");
  require_w_regular(w, "lerch_phi");
  const Complex u = 1.0 - z;
  const double au = std::abs(u);
  if (!(au < 1.0)) throw DomainError("lerch_phi: expansion about 1 requires |1 - z| < 1");

  const Complex log_u = std::log(u);
  const double aw = std::abs(w);
  Complex coef{1.0, 0.0};     // (w)_n / n! u^n
  double psi_n1 = -kEulerGamma;  // Psi(n + 1)
  Complex psi_wn = digamma(w);   // Psi(w + n)
  Complex sum{0.0, 0.0};
  TailMonitor monitor(cfg.rel_tol);
  for (int n = 0; n < cfg.max_terms; ++n) {
    const Complex term = coef * (psi_n1 - psi_wn - log_u);
    sum += term;
    const double dn = static_cast<double>(n);
    // every later term ratio is bounded by q
    const double q = au * std::max(1.0, (dn + aw) / (dn + 1.0));
    const double bound = q < 1.0 ? std::abs(term) / (1.0 - q) : HUGE_VAL;
    if (monitor.done(bound, sum)) return sum;
    coef *= (w + dn) / (dn + 1.0) * u;
    psi_n1 += 1.0 / (dn + 1.0);
    psi_wn += 1.0 / (w + dn);
  }
  throw ConvergenceError("lerch_phi: expansion about z = 1 did not converge");
}

Complex lerch_phi(Complex z, Complex w, const SeriesCfg& cfg) {
  require_unit_disc(z, "lerch_phi");
  if (std::abs(z) <= 0.5) return lerch_phi_direct(z, w, cfg);
  if (std::abs(1.0 - z) <= 0.5) return lerch_phi_near_unity(z, w, cfg);
  return lerch_phi_direct(z, w, cfg);
}

Complex s_plus(Complex w, Complex z, const SeriesCfg& cfg) {
  const Complex phi = lerch_phi(z, w, cfg);
  return (digamma(w) + phi) / (1.0 - z);
}

Complex s_minus_sum(Complex w, Complex z, const SeriesCfg& cfg) {
  const Complex cot = cot_pi(w);
  return s_plus(-w, z, cfg) - kPi * cot / (1.0 - z);
}

Complex s_plus_near_one(Complex w, double z) {
  if (!(z >= 0.9 && z < 1.0)) {
    throw DomainError("s_plus_near_one: requires real 0.9 <= z < 1");
  }
  require_finite(w, "s_plus_near_one");
  const double log_u = std::log1p(-z);
  const double psi1 = -kEulerGamma;
  const double psi2 = 1.0 - kEulerGamma;
  const Complex lead = (psi1 - log_u) / (1.0 - z);
  if (w == Complex{0.0, 0.0}) return lead;
  return lead + w * (psi2 - digamma(w + 1.0)) - w * log_u;
}

double h(double x) {
  if (x == 0.0) return x;
  if (!std::isfinite(x)) throw DomainError("h: non-finite argument");
  const double ax = std::abs(x);
  const double v = ax * digamma(Complex{1.0, ax}).real();
  return x < 0.0 ? -v : v;
}

}  // namespace fdt
