#include "fdt/transport.hpp"

#include <cmath>
#include <string>

#include "fdt/error.hpp"

namespace fdt {
namespace {

constexpr Complex kI{0.0, 1.0};

struct Scaled {
  double v0, v_plus, v_minus;
};

Scaled scaled(const TransportParams& tp) {
  const double s = tp.beta / (2.0 * kPi);
  return {s * tp.omega, s * (tp.V + tp.omega), s * (tp.V - tp.omega)};
}

double coth_pi(double v, const char* name) {
  if (v == 0.0) throw DomainError(std::string("derive: ") + name + " = 0 (coth pole)");
  return 1.0 / std::tanh(kPi * v);
}

Complex unit_phase(double phase) { return {std::cos(phase), std::sin(phase)}; }

void require_positive_lambda(double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw DomainError("transport kernel requires finite lambda > 0");
  }
}

}  // namespace

void TransportParams::validate() const {
  if (!std::isfinite(omega) || !std::isfinite(V) || !std::isfinite(beta) || !(beta > 0.0)) {
    throw DomainError("TransportParams: need finite omega, V and finite beta > 0");
  }
}

DerivedQuantities derive(const TransportParams& tp) {
  tp.validate();
  const Scaled v = scaled(tp);
  DerivedQuantities d;
  d.v0 = v.v0;
  d.v_plus = v.v_plus;
  d.v_minus = v.v_minus;
  d.c0 = coth_pi(v.v0, "v0");
  d.c_plus = coth_pi(v.v_plus, "v+");
  d.c_minus = coth_pi(v.v_minus, "v-");
  d.eta_plus = -(d.c0 + d.c_minus) / 2.0;
  d.eta_minus = -(-d.c0 + d.c_plus) / 2.0;
  return d;
}

DoubleFermi bias_window(const TransportParams& tp) {
  return {{0.0, tp.beta}, {tp.V, tp.beta}};
}

DoubleFermi phonon_window(const TransportParams& tp) {
  return {{-tp.omega, tp.beta}, {tp.omega, tp.beta}};
}

double kernel_integrand(double x, const TransportParams& tp) {
  const double gx = g(x, bias_window(tp));
  if (gx == 0.0) return 0.0;
  return gx * g_hilbert(x, phonon_window(tp));
}

ResidueTerms residue_terms(long n, double lambda, const TransportParams& tp) {
  require_positive_lambda(lambda);
  if (n < 0) throw DomainError("residue_terms: n must be >= 0");
  const DerivedQuantities d = derive(tp);
  const double b = tp.beta;
  const double dn = static_cast<double>(n);
  const double zpow = std::exp(-2.0 * kPi * lambda / b * (dn + 0.5));  // z^{n+1/2}

  ResidueTerms r;
  r.plus_omega = kI / b * unit_phase(lambda * tp.omega) * zpow * d.eta_plus;
  r.minus_omega = -kI / b * unit_phase(-lambda * tp.omega) * zpow * d.eta_minus;

  const double im0 =
      (digamma(Complex{1.0 + dn, d.v0}) + digamma(Complex{-dn, -d.v0})).imag();
  r.zero = -kI / (kPi * b) * zpow * im0;

  const Complex bracket = digamma(Complex{-dn, d.v_minus}) + digamma(Complex{dn + 1.0, -d.v_minus}) -
                          digamma(Complex{-dn, d.v_plus}) - digamma(Complex{dn + 1.0, -d.v_plus});
  r.bias = unit_phase(lambda * tp.V) / (2.0 * kPi * b) * zpow * bracket;
  return r;
}

Complex R_omega(double lambda, const TransportParams& tp) {
  require_positive_lambda(lambda);
  const DerivedQuantities d = derive(tp);
  const double pref = 1.0 / (2.0 * tp.beta * std::sinh(kPi * lambda / tp.beta));
  const Complex bracket = d.eta_plus * unit_phase(lambda * tp.omega) -
                          d.eta_minus * unit_phase(-lambda * tp.omega);
  return kI * pref * bracket;
}

Complex R_zero(double lambda, const TransportParams& tp, const SeriesCfg& cfg) {
  require_positive_lambda(lambda);
  const DerivedQuantities d = derive(tp);
  const double x = 2.0 * kPi * lambda / tp.beta;
  const double z = std::exp(-x);
  const double one_minus_z = -std::expm1(-x);
  const double z_half = std::exp(-0.5 * x);
  const Complex sp = s_plus(Complex{0.0, d.v0}, Complex{z, 0.0}, cfg);
  const double brace = 2.0 * sp.imag() - kPi * d.c0 / one_minus_z;
  return {0.0, -z_half / (kPi * tp.beta) * brace};
}

Complex R_V(double lambda, const TransportParams& tp, const SeriesCfg& cfg) {
  require_positive_lambda(lambda);
  const DerivedQuantities d = derive(tp);
  const double x = 2.0 * kPi * lambda / tp.beta;
  const Complex z{std::exp(-x), 0.0};
  const double one_minus_z = -std::expm1(-x);
  const double z_half = std::exp(-0.5 * x);
  const Complex brace = s_plus(Complex{0.0, -d.v_minus}, z, cfg) -
                        s_plus(Complex{0.0, -d.v_plus}, z, cfg) +
                        kI * (0.5 * kPi * (d.c_minus - d.c_plus) / one_minus_z);
  return unit_phase(lambda * tp.V) * (z_half / (kPi * tp.beta)) * brace;
}

Complex K(double lambda, const TransportParams& tp, const SeriesCfg& cfg) {
  const Complex sum = R_omega(lambda, tp) + R_zero(lambda, tp, cfg) + R_V(lambda, tp, cfg);
  return 2.0 * kPi * kI * sum;
}

double I_exact(const TransportParams& tp) {
  tp.validate();
  const Scaled v = scaled(tp);
  return 2.0 / tp.beta * (h(v.v_plus) - h(v.v_minus) - 2.0 * h(v.v0));
}

LowTExpansion I_lowT(const TransportParams& tp) {
  tp.validate();
  const double w = tp.omega;
  const double V = tp.V;
  if (!(w > 0.0) || !(V > 0.0)) throw DomainError("I_lowT: requires omega > 0 and V > 0");
  if (V == w) throw DomainError("I_lowT: expansion singular at V = omega");
  auto xlogx = [](double e) { return e == 0.0 ? 0.0 : e * std::log(std::abs(e)); };
  LowTExpansion out;
  out.leading = (xlogx(V + w) - xlogx(V - w) - 2.0 * xlogx(w)) / kPi;
  out.correction = -2.0 * kPi * V * V / (3.0 * w * (V * V - w * w)) / (tp.beta * tp.beta);
  return out;
}

double I_highT(const TransportParams& tp) {
  tp.validate();
  const double two_pi = 2.0 * kPi;
  return 12.0 * kZeta3Printed * tp.omega * tp.V * tp.V * tp.beta * tp.beta /
         (two_pi * two_pi * two_pi);
}

}  // namespace fdt
