#pragma once

// The transport kernel K(lambda) and the integral I = K(0+).
//
//   K(lambda) = int e^{i lambda x} g(x; 0, V, beta, beta) g_H(x; -omega, omega, beta, beta) dx
//
// evaluated by summing the residues of the integrand's four pole families
// in the upper half plane, and I in closed form through h(x) = x Re Psi(i x):
//
//   I = (2/beta) [h(v+) - h(v-) - 2 h(v0)],  v0 = beta omega/2pi,  v+- = beta (V +- omega)/2pi.
//
// The integrand is written with mu = +V in g and (mu1, mu2) = (-omega, +omega)
// in g_H. It is the exact negative of g(x; 0, -V) g_H(x; omega, -omega), so
// I from that other parametrisation carries the opposite sign.

#include "fdt/fermi.hpp"
#include "fdt/specfun.hpp"

namespace fdt {

struct TransportParams {
  double omega = 1.0;
  double V = 2.0;
  double beta = 1.0;

  /// Throws DomainError unless all fields are finite and beta > 0.
  void validate() const;
};

struct DerivedQuantities {
  double v0 = 0.0, v_plus = 0.0, v_minus = 0.0;
  double c0 = 0.0, c_plus = 0.0, c_minus = 0.0;  // coth(pi v)
  double eta_plus = 0.0;                          // -(c0 + c_minus)/2
  double eta_minus = 0.0;                         // -(-c0 + c_plus)/2
};

/// Throws DomainError when v0, v+ or v- vanishes (coth pole).
DerivedQuantities derive(const TransportParams& tp);

/// The two Fermi differences entering the integrand.
DoubleFermi bias_window(const TransportParams& tp);       // g(x; 0, V)
DoubleFermi phonon_window(const TransportParams& tp);     // g_H(x; -omega, omega)

/// g(x; 0, V) g_H(x; -omega, omega), the real integrand of I.
double kernel_integrand(double x, const TransportParams& tp);

/// Residues at the n-th pole of each family, lambda > 0:
///   +omega + (n+1/2) 2pi i/beta, -omega + ..., 0 + ..., V + ...
struct ResidueTerms {
  Complex plus_omega;
  Complex minus_omega;
  Complex zero;
  Complex bias;
};

ResidueTerms residue_terms(long n, double lambda, const TransportParams& tp);

/// Geometric sum of the +-omega residues:
///   (i / 2beta) (eta+ e^{i lambda omega} - eta- e^{-i lambda omega}) / sinh(pi lambda/beta)
Complex R_omega(double lambda, const TransportParams& tp);

/// Sum of the residues at (n+1/2) 2pi i/beta, z = e^{-2pi lambda/beta}:
///   (-i z^{1/2} / (pi beta)) { 2 Im S+(i v0, z) - pi c0/(1 - z) }
Complex R_zero(double lambda, const TransportParams& tp, const SeriesCfg& cfg = {});

/// Sum of the residues at V + (n+1/2) 2pi i/beta:
///   (e^{i lambda V} z^{1/2}/(pi beta)) { S+(-i v-, z) - S+(-i v+, z) + i (pi/2)(c- - c+)/(1 - z) }
Complex R_V(double lambda, const TransportParams& tp, const SeriesCfg& cfg = {});

/// K(lambda) = 2 pi i (R_omega + R_zero + R_V), lambda > 0 strictly.
/// The 1/lambda parts of the three sums cancel analytically but not
/// numerically, so use I_exact for lambda -> 0.
Complex K(double lambda, const TransportParams& tp, const SeriesCfg& cfg = {});

/// Exact integral I. Defined for any finite omega, V (h(0) = 0 covers V = omega).
double I_exact(const TransportParams& tp);

/// Low-temperature expansion through beta^-2.
struct LowTExpansion {
  double leading = 0.0;     // (1/pi)[(V+w)ln(V+w) - (V-w)ln|V-w| - 2w ln w]
  double correction = 0.0;  // -2 pi V^2 / (3 w (V^2 - w^2)) beta^-2
  double value() const { return leading + correction; }
};

/// Requires omega, V > 0 and V != omega. Remainder O(beta^-4).
LowTExpansion I_lowT(const TransportParams& tp);

/// zeta(3) to the precision used in the high-temperature formula.
inline constexpr double kZeta3Printed = 1.202056;

/// 12 zeta(3) omega V^2 beta^2 / (2pi)^3, remainder O(beta^4).
double I_highT(const TransportParams& tp);

}  // namespace fdt
