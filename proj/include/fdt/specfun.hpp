#pragma once

// Complex-argument special functions: digamma, the s = 1 Lerch
// transcendent, the digamma power sums S+(w, z) and the auxiliary h(x).
//
// Every routine is a pure function of its arguments.

#include <complex>

namespace fdt {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
inline constexpr double kZeta3 = 1.20205690315959428539973816151144999;

/// Truncation control for the power series below.
struct SeriesCfg {
  double rel_tol = 1e-16;
  int max_terms = 20000;

  /// Throws DomainError unless 0 < rel_tol < 1 and max_terms >= 16.
  void validate() const;
};

/// Digamma function Psi(z) for complex z.
///
/// Reflection for Re z < 0, upward recurrence until |z| >= 10, then the
/// asymptotic series through z^-14. Arguments with negative imaginary part
/// are evaluated at the conjugate, so Psi(conj z) == conj(Psi(z)) holds
/// bit for bit.
///
/// Throws PoleError at (or within rounding of) z = 0, -1, -2, ...
Complex digamma(Complex z);

/// Real-argument digamma.
double digamma(double x);

/// cot(pi z), periodic reduction applied before scaling by pi.
/// Throws PoleError when z is a real integer.
Complex cot_pi(Complex z);

/// Im Psi(i x) = 1/(2x) + (pi/2) coth(pi x). Throws DomainError at x = 0.
double im_psi_imag_axis(double x);

/// phi(z, w) = sum_{n>=0} z^n / (n + w)  (Lerch transcendent, s = 1).
///
/// Uses the direct series for |z| <= 0.5, the expansion about z = 1
///   phi = sum_n (w)_n/n! (1-z)^n [Psi(n+1) - Psi(w+n) - ln(1-z)]
/// for |1 - z| <= 0.5, and the direct series with a raised term budget
/// elsewhere in the unit disc (slow when |z| is close to 1 away from z = 1).
///
/// Throws DomainError for |z| >= 1, PoleError when w is 0, -1, -2, ...
/// and ConvergenceError if the tolerance is not met.
Complex lerch_phi(Complex z, Complex w, const SeriesCfg& cfg = {});

/// Direct power series only; requires |z| < 1.
Complex lerch_phi_direct(Complex z, Complex w, const SeriesCfg& cfg = {});

/// Expansion about z = 1 only; requires |1 - z| < 1 and |z| < 1.
Complex lerch_phi_near_unity(Complex z, Complex w, const SeriesCfg& cfg = {});

/// S+(w, z) = sum_{n>=0} Psi(w + n + 1) z^n = [Psi(w) + phi(z, w)] / (1 - z).
Complex s_plus(Complex w, Complex z, const SeriesCfg& cfg = {});

/// sum_{n>=0} Psi(w - n) z^n = S+(-w, z) - pi cot(pi w) / (1 - z).
/// Throws PoleError when w is a real integer.
Complex s_minus_sum(Complex w, Complex z, const SeriesCfg& cfg = {});

/// Leading behaviour of S+(w, z) as z -> 1- on the real axis:
///   [Psi(1) - ln(1-z)]/(1-z) + w[Psi(2) - Psi(w+1)] - w ln(1-z).
/// The neglected remainder is O((1-z) ln(1-z)). Requires 0.9 <= z < 1.
Complex s_plus_near_one(Complex w, double z);

/// h(x) = x Re Psi(i x), odd in x, h(0) = 0.
///
/// Evaluated as x Re Psi(1 + i x): the recurrence term 1/(i x) is purely
/// imaginary, so nothing cancels near x = 0. Expansions:
///   small x:  h(x) = Psi(1) x + zeta(3) x^3 + O(x^5)
///   large x:  h(x) = x ln|x| + 1/(12x) + 1/(120x^3) + O(x^-5)
/// (The small-x form is linear in x; a constant Psi(1) would contradict h(0) = 0.)
double h(double x);

}  // namespace fdt
