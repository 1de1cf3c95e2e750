#pragma once

// Fermi functions, the difference of two of them and its Hilbert and
// Fourier transforms.
//
// Hilbert transform convention (kernel 1/(y - x), not 1/(x - y)):
//
//   g_H(y) = (1/pi) P int g(x) / (y - x) dx
//
// Fourier convention: g_F(lambda) = int e^{i lambda x} g(x) dx.

#include "fdt/specfun.hpp"

namespace fdt {

/// One Fermi function: chemical potential and inverse temperature.
struct FermiParams {
  double mu = 0.0;
  double beta = 1.0;

  /// Throws DomainError unless beta > 0 and both fields are finite.
  void validate() const;
};

/// g(x) = f(x; p1) - f(x; p2).
struct DoubleFermi {
  FermiParams p1;
  FermiParams p2;

  void validate() const;
  DoubleFermi swapped() const { return {p2, p1}; }
};

/// 1 / (e^{beta (x - mu)} + 1); exactly 0 or 1 once |beta (x - mu)| > 700.
double fermi(double x, const FermiParams& p);

/// 1/2 + (1/pi) Im Psi(1/2 - i z / 2pi), which equals 1/(e^z + 1).
double fermi_via_digamma(double z);

double g(double x, const DoubleFermi& d);

/// Closed-form Hilbert transform of g,
///
///   g_H(y) = (1/pi) { Re[Psi(w2) - Psi(w1)] + ln(beta1 / beta2) },
///   w_j = 1/2 + i beta_j (y - mu_j) / 2pi.
///
/// The logarithmic constant only matters for beta1 != beta2; without it the
/// expression would not vanish at |y| -> infinity, while the transform of
/// an integrable function must. Re w_j = 1/2, so no pole is ever hit.
double g_hilbert(double y, const DoubleFermi& d);

/// Large-|y| behaviour of g_hilbert: (mu1 - mu2) / (pi y), error O(1/y^2).
/// Throws DomainError at y = 0.
double g_hilbert_asymptotic(double y, const DoubleFermi& d);

/// Zero-temperature limit at equal beta: (1/pi) ln |(y - mu2)/(y - mu1)|.
/// g_hilbert approaches it as O(beta^-2). Throws DomainError at y = mu1, mu2.
double g_hilbert_lowT(double y, double mu1, double mu2);

/// g_F(lambda) = pi i [ e^{i lambda mu2} / (beta2 sinh(pi lambda/beta2))
///                    - e^{i lambda mu1} / (beta1 sinh(pi lambda/beta1)) ].
///
/// For |pi lambda / min(beta)| < kFourierSeriesSwitch the 1/sinh poles are
/// combined analytically; g_F(0) = mu1 - mu2.
Complex g_fourier(double lambda, const DoubleFermi& d);

inline constexpr double kFourierSeriesSwitch = 1e-4;

/// The two evaluation branches of g_fourier, exposed for testing.
Complex g_fourier_direct(double lambda, const DoubleFermi& d);
Complex g_fourier_small(double lambda, const DoubleFermi& d);

/// Fourier transform of g_H with the same e^{i lambda x} kernel as g_F:
/// +i sign(lambda) g_F(lambda), since int e^{i lambda t} / (pi t) dt = i sign(lambda)
/// for the 1/(y - x) Hilbert kernel. Throws at lambda = 0.
Complex gH_fourier(double lambda, const DoubleFermi& d);

}  // namespace fdt
