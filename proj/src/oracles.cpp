#include "fdt/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "fdt/error.hpp"

namespace fdt {
namespace {

AdaptiveCfg adaptive(const QuadCfg& cfg) { return {cfg.rel_tol, cfg.abs_tol, cfg.max_depth}; }

int panel_count(double length, double max_width) {
  const double n = std::ceil(length / max_width);
  return static_cast<int>(std::clamp(n, 64.0, 1.0e6));
}

// int over [-T, T] in panels of width <= max_width, plus the two tails
// mapped through x = +-T/u onto u in (0, 1].
template <class T>
QuadResult<T> integrate_line(const std::function<T(double)>& f, double cut, double max_width,
                             const QuadCfg& cfg) {
  const auto body = split_uniform(-cut, cut, panel_count(2.0 * cut, max_width));
  const auto unit = split_uniform(0.0, 1.0, 8);
  const std::function<T(double)> tails = [&f, cut](double u) {
    const double x = cut / u;
    return (f(-x) + f(x)) * (x / u);
  };
  QuadResult<T> a = integrate_panels<T>(f, body, adaptive(cfg), cfg.exec);
  const QuadResult<T> b = integrate_panels<T>(tails, unit, adaptive(cfg), cfg.exec);
  a.value += b.value;
  a.error += b.error;
  a.evaluations += b.evaluations;
  return a;
}

}  // namespace

void QuadCfg::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0) || max_depth <= 0 || !(tail_cut > 0.0) ||
      !std::isfinite(tail_cut)) {
    throw DomainError("QuadCfg: tolerances, max_depth and tail_cut must be positive");
  }
}

QuadResult<double> pv_hilbert(const RealFn& fn, double y, const QuadCfg& cfg) {
  cfg.validate();
  const double cut = cfg.tail_cut;
  const std::function<double(double)> sym = [&fn, y](double t) {
    return (fn(y - t) - fn(y + t)) / t;
  };
  const std::function<double(double)> tail = [&sym, cut](double u) {
    const double t = cut / u;
    return sym(t) * (t / u);
  };
  const auto near = split_uniform(0.0, cut, panel_count(cut, 0.25));
  const auto unit = split_uniform(0.0, 1.0, 8);
  const QuadResult<double> a = integrate_panels<double>(sym, near, adaptive(cfg), cfg.exec);
  const QuadResult<double> b = integrate_panels<double>(tail, unit, adaptive(cfg), cfg.exec);
  return {(a.value + b.value) / kPi, (a.error + b.error) / kPi, a.evaluations + b.evaluations};
}

QuadResult<Complex> fourier_integral(const RealFn& fn, double lambda, const QuadCfg& cfg) {
  cfg.validate();
  const std::function<Complex(double)> f = [&fn, lambda](double x) {
    const double v = fn(x);
    if (v == 0.0) return Complex{0.0, 0.0};
    return Complex{std::cos(lambda * x) * v, std::sin(lambda * x) * v};
  };
  const double width = lambda == 0.0 ? 0.25 : std::min(0.25, 0.25 * 2.0 * kPi / std::abs(lambda));
  return integrate_line<Complex>(f, cfg.tail_cut, width, cfg);
}

double tail_cut_for(const DoubleFermi& d, double y) {
  return std::max(std::abs(y - d.p1.mu) + 40.0 / d.p1.beta, std::abs(y - d.p2.mu) + 40.0 / d.p2.beta);
}

Complex matsubara_g_hilbert_complex(double y, const DoubleFermi& d, long n_poles) {
  if (n_poles < 1) throw DomainError("matsubara_g_hilbert: n_poles must be >= 1");
  const double bmin = std::min(d.p1.beta, d.p2.beta);
  auto count = [&](const FermiParams& p) {
    return std::max(1L, std::lround(static_cast<double>(n_poles) * p.beta / bmin));
  };
  auto partial = [](const FermiParams& p, double at, long terms) {
    const Complex w{0.5, p.beta * (at - p.mu) / (2.0 * kPi)};
    Complex s{0.0, 0.0};
    for (long n = terms - 1; n >= 0; --n) s += 1.0 / (static_cast<double>(n) + w);
    return s;
  };
  const Complex poles = (partial(d.p1, y, count(d.p1)) - partial(d.p2, y, count(d.p2))) / kPi;
  return poles - Complex{0.0, g(y, d)};
}

double matsubara_g_hilbert(double y, const DoubleFermi& d, long n_poles) {
  return matsubara_g_hilbert_complex(y, d, n_poles).real();
}

RichardsonResult richardson_limit(std::span<const RichardsonSample> samples) {
  if (samples.size() < 3) throw DomainError("richardson_limit: need at least 3 samples");
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (!(samples[i].lambda > 0.0)) throw DomainError("richardson_limit: lambda must be > 0");
    if (i > 0 && !(samples[i].lambda < samples[i - 1].lambda)) {
      throw DomainError("richardson_limit: lambda must decrease strictly");
    }
  }

  auto neville = [&](std::size_t first) {
    std::vector<Complex> p;
    std::vector<double> x;
    for (std::size_t i = first; i < samples.size(); ++i) {
      p.push_back(samples[i].value);
      x.push_back(samples[i].lambda);
    }
    for (std::size_t m = 1; m < p.size(); ++m) {
      for (std::size_t i = 0; i + m < p.size(); ++i) {
        p[i] = p[i + 1] + (p[i + 1] - p[i]) * (x[i + m] / (x[i] - x[i + m]));
      }
    }
    return p[0];
  };

  RichardsonResult out;
  out.value = neville(0);
  out.error = std::abs(out.value - neville(1));
  const double scale = std::max(1.0, std::abs(out.value));
  double prev = HUGE_VAL;
  for (std::size_t i = 1; i < samples.size(); ++i) {
    const double diff = std::abs(samples[i].value - samples[i - 1].value);
    if (diff > prev + 1e-12 * scale) out.ill_conditioned = true;
    prev = diff;
  }
  return out;
}

ResidueSums direct_residue_sums(double lambda, const TransportParams& tp) {
  const double x = 2.0 * kPi * lambda / tp.beta;
  const double one_minus_z = -std::expm1(-x);
  ResidueSums s;
  int quiet = 0;
  for (long n = 0; n < 50'000'000; ++n) {
    const ResidueTerms t = residue_terms(n, lambda, tp);
    s.omega += t.plus_omega + t.minus_omega;
    s.zero += t.zero;
    s.bias += t.bias;
    s.terms = n + 1;
    const double term = std::abs(t.plus_omega) + std::abs(t.minus_omega) + std::abs(t.zero) +
                        std::abs(t.bias);
    const double running = std::abs(s.omega) + std::abs(s.zero) + std::abs(s.bias);
    // geometric tail: remaining sum <= term / (1 - z)
    quiet = term < 1e-16 * one_minus_z * running ? quiet + 1 : 0;
    if (quiet >= 3) return s;
  }
  throw ConvergenceError("direct_residue_sums: no convergence");
}

namespace {

template <class Term>
Complex power_series(Complex z, Term term, const char* what) {
  if (!(std::abs(z) < 1.0)) throw DomainError(std::string(what) + ": requires |z| < 1");
  const double tail = 1.0 / (1.0 - std::abs(z));
  Complex sum{0.0, 0.0};
  int quiet = 0;
  for (long n = 0; n < 10'000'000; ++n) {
    const Complex t = term(n);
    sum += t;
    quiet = std::abs(t) * tail <= 1e-17 * std::abs(sum) ? quiet + 1 : 0;
    if (quiet >= 3) return sum;
  }
  throw ConvergenceError(std::string(what) + ": no convergence");
}

}  // namespace

Complex s_plus_series(Complex w, Complex z) {
  Complex zn{1.0, 0.0};
  return power_series(
      z,
      [&](long n) {
        const Complex t = digamma(w + static_cast<double>(n) + 1.0) * zn;
        zn *= z;
        return t;
      },
      "s_plus_series");
}

Complex s_minus_series(Complex w, Complex z) {
  Complex zn{1.0, 0.0};
  return power_series(
      z,
      [&](long n) {
        const Complex t = digamma(w - static_cast<double>(n)) * zn;
        zn *= z;
        return t;
      },
      "s_minus_series");
}

Complex hyp2f1_series(Complex a, Complex b, Complex c, Complex z) {
  Complex coef{1.0, 0.0};
  return power_series(
      z,
      [&](long n) {
        const Complex t = coef;
        const double dn = static_cast<double>(n);
        coef *= (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * z;
        return t;
      },
      "hyp2f1_series");
}

QuadResult<Complex> K_quadrature(double lambda, const TransportParams& tp, QuadCfg cfg) {
  tp.validate();
  cfg.tail_cut = std::max(cfg.tail_cut, tail_cut_for(bias_window(tp), 0.0));
  return fourier_integral([tp](double x) { return kernel_integrand(x, tp); }, lambda, cfg);
}

QuadResult<double> I_quadrature(const TransportParams& tp, QuadCfg cfg) {
  tp.validate();
  cfg.validate();
  cfg.tail_cut = std::max(cfg.tail_cut, tail_cut_for(bias_window(tp), 0.0));
  const std::function<double(double)> f = [tp](double x) { return kernel_integrand(x, tp); };
  return integrate_line<double>(f, cfg.tail_cut, 0.25, cfg);
}

}  // namespace fdt
