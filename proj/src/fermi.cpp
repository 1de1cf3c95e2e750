#include "fdt/fermi.hpp"

#include <algorithm>
#include <cmath>

#include "fdt/error.hpp"

namespace fdt {
namespace {

constexpr double kSaturation = 700.0;

Complex w_arg(double y, const FermiParams& p) {
  return {0.5, p.beta * (y - p.mu) / (2.0 * kPi)};
}

// e^{i lambda mu} / (beta sinh(pi lambda / beta)), lambda != 0
Complex pole_term(double lambda, const FermiParams& p) {
  const double scale = 1.0 / (p.beta * std::sinh(kPi * lambda / p.beta));
  const double phase = lambda * p.mu;
  return {std::cos(phase) * scale, std::sin(phase) * scale};
}

Complex times_i_pi(Complex a) { return {-kPi * a.imag(), kPi * a.real()}; }

// 1 / (e^t + 1), saturating to exact 0 and 1.
double occupation(double t) {
  if (t > kSaturation) return 0.0;
  if (t < -kSaturation) return 1.0;
  if (t > 0.0) {
    const double e = std::exp(-t);
    return e / (1.0 + e);
  }
  return 1.0 / (std::exp(t) + 1.0);
}

}  // namespace

void FermiParams::validate() const {
  if (!std::isfinite(mu) || !std::isfinite(beta) || !(beta > 0.0)) {
    throw DomainError("FermiParams: need finite mu and finite beta > 0");
  }
}

void DoubleFermi::validate() const {
  p1.validate();
  p2.validate();
}

double fermi(double x, const FermiParams& p) { return occupation(p.beta * (x - p.mu)); }

double fermi_via_digamma(double z) {
  return 0.5 + digamma(Complex{0.5, -z / (2.0 * kPi)}).imag() / kPi;
}

double g(double x, const DoubleFermi& d) {
  const double t1 = d.p1.beta * (x - d.p1.mu);
  const double t2 = d.p2.beta * (x - d.p2.mu);
  // Both states nearly filled: difference the holes, 1 - f(t) = f(-t).
  if (t1 < 0.0 && t2 < 0.0) return occupation(-t2) - occupation(-t1);
  return occupation(t1) - occupation(t2);
}

double g_hilbert(double y, const DoubleFermi& d) {
  const double re2 = digamma(w_arg(y, d.p2)).real();
  const double re1 = digamma(w_arg(y, d.p1)).real();
  const double offset = std::log(d.p1.beta) - std::log(d.p2.beta);
  return ((re2 - re1) + offset) / kPi;
}

double g_hilbert_asymptotic(double y, const DoubleFermi& d) {
  if (y == 0.0) throw DomainError("g_hilbert_asymptotic: y must be nonzero");
  return (d.p1.mu - d.p2.mu) / (kPi * y);
}

double g_hilbert_lowT(double y, double mu1, double mu2) {
  if (y == mu1 || y == mu2) {
    throw DomainError("g_hilbert_lowT: logarithmic singularity at y = mu");
  }
  return (std::log(std::abs(y - mu2)) - std::log(std::abs(y - mu1))) / kPi;
}

Complex g_fourier_direct(double lambda, const DoubleFermi& d) {
  if (lambda == 0.0) throw DomainError("g_fourier_direct: lambda must be nonzero");
  return times_i_pi(pole_term(lambda, d.p2) - pole_term(lambda, d.p1));
}

Complex g_fourier_small(double lambda, const DoubleFermi& d) {
  const double delta = d.p1.mu - d.p2.mu;
  if (lambda == 0.0) return {delta, 0.0};

  // 1/sinh(x) = 1/x - x/6 + 7x^3/360 - ...; the 1/x parts of the two
  // terms combine into (2/lambda) sin(lambda delta/2) e^{i lambda c}.
  const double centre = 0.5 * (d.p1.mu + d.p2.mu);
  const double amp = 2.0 * std::sin(0.5 * lambda * delta) / lambda;
  const Complex pole{amp * std::cos(lambda * centre), amp * std::sin(lambda * centre)};

  auto rest = [lambda](const FermiParams& p) {
    const double b2 = p.beta * p.beta;
    const double x = kPi * lambda;
    const double r = -x / (6.0 * b2) + 7.0 * x * x * x / (360.0 * b2 * b2);
    const double phase = lambda * p.mu;
    return Complex{std::cos(phase) * r, std::sin(phase) * r};
  };
  return pole + times_i_pi(rest(d.p2) - rest(d.p1));
}

Complex g_fourier(double lambda, const DoubleFermi& d) {
  const double bmin = std::min(d.p1.beta, d.p2.beta);
  if (std::abs(kPi * lambda / bmin) < kFourierSeriesSwitch) return g_fourier_small(lambda, d);
  return g_fourier_direct(lambda, d);
}

Complex gH_fourier(double lambda, const DoubleFermi& d) {
  if (lambda == 0.0) throw DomainError("gH_fourier: sign(lambda) undefined at lambda = 0");
  const Complex gf = g_fourier(lambda, d);
  // i sign(lambda) (a + ib)
  return lambda > 0.0 ? Complex{-gf.imag(), gf.real()} : Complex{gf.imag(), -gf.real()};
}

}  // namespace fdt
