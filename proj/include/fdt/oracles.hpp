#pragma once

// Numerical references for the closed forms: principal-value and Fourier
// quadrature, truncated Matsubara pole sums, direct residue summation and
// Richardson extrapolation.

#include <functional>
#include <span>

#include "fdt/fermi.hpp"
#include "fdt/quadrature.hpp"
#include "fdt/transport.hpp"

namespace fdt {

struct QuadCfg {
  double rel_tol = 1e-12;
  double abs_tol = 1e-13;
  int max_depth = 40;
  double tail_cut = 60.0;  // energy units; beyond it the integral is taken on u = T/t
  Execution exec = Execution::Parallel;

  /// Throws DomainError unless tolerances and tail_cut are positive.
  void validate() const;
};

using RealFn = std::function<double(double)>;

/// (1/pi) P int fn(x) / (y - x) dx, as (1/pi) int_0^inf [fn(y-t) - fn(y+t)]/t dt.
/// [0, tail_cut] is split into panels; the rest is mapped onto (0, 1].
QuadResult<double> pv_hilbert(const RealFn& fn, double y, const QuadCfg& cfg);

/// int e^{i lambda x} fn(x) dx; panels of width <= (1/4)(2pi/|lambda|) on
/// [-tail_cut, tail_cut], mapped tails outside.
QuadResult<Complex> fourier_integral(const RealFn& fn, double lambda, const QuadCfg& cfg);

/// A tail_cut beyond which |g(y +- t)| < 1e-17.
double tail_cut_for(const DoubleFermi& d, double y);

/// Truncated pole sum for g_H including the -i g(y) boundary term:
///   (1/pi) [ sum_{n<N1} 1/(n + w1) - sum_{n<N2} 1/(n + w2) ] - i g(y).
/// The series with the smaller beta keeps n_poles poles, the other one
/// round(n_poles beta_j / beta_min), so both stop at the same height in the
/// complex plane. The imaginary part tends to 0 as O(1/n_poles); the real
/// part tends to g_hilbert(y) as O(1/n_poles^2).
Complex matsubara_g_hilbert_complex(double y, const DoubleFermi& d, long n_poles);

/// Real part of matsubara_g_hilbert_complex.
double matsubara_g_hilbert(double y, const DoubleFermi& d, long n_poles);

struct RichardsonSample {
  double lambda = 0.0;
  Complex value;
};

struct RichardsonResult {
  Complex value;
  double error = 0.0;            // change from dropping the largest-lambda sample
  bool ill_conditioned = false;  // successive differences fail to shrink
};

/// Polynomial (Neville) extrapolation of the samples to lambda = 0.
/// Requires >= 3 samples with strictly decreasing positive lambda.
RichardsonResult richardson_limit(std::span<const RichardsonSample> samples);

/// Brute-force sums of residue_terms, stopped once z^{n+1/2} < 1e-16 times
/// the running magnitude.
struct ResidueSums {
  Complex omega;  // plus_omega + minus_omega
  Complex zero;
  Complex bias;
  long terms = 0;
};

ResidueSums direct_residue_sums(double lambda, const TransportParams& tp);

/// sum_{n>=0} Psi(w + n + 1) z^n, each digamma evaluated separately.
Complex s_plus_series(Complex w, Complex z);

/// sum_{n>=0} Psi(w - n) z^n, each digamma evaluated separately.
Complex s_minus_series(Complex w, Complex z);

/// Gauss 2F1(a, b; c; z) by its defining series, |z| < 1.
Complex hyp2f1_series(Complex a, Complex b, Complex c, Complex z);

/// K(lambda) by direct quadrature of e^{i lambda x} kernel_integrand(x).
QuadResult<Complex> K_quadrature(double lambda, const TransportParams& tp, QuadCfg cfg = {});

/// I by direct quadrature of kernel_integrand.
QuadResult<double> I_quadrature(const TransportParams& tp, QuadCfg cfg = {});

}  // namespace fdt
