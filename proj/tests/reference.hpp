#pragma once

// Test-only references that share no code with the library.

#include <cmath>
#include <complex>

#include "fdt/specfun.hpp"

namespace ref {

using CL = std::complex<long double>;

// Psi(z) = -gamma + sum_{n>=1} [1/n - 1/(n - 1 + z)], summed directly to N
// terms in long double; the remainder comes from Euler-Maclaurin on
// f(n) = 1/n - 1/(n - 1 + z).
inline std::complex<double> digamma(std::complex<double> zd) {
  const CL z{zd.real(), zd.imag()};
  const long double gamma = 0.577215664901532860606512090082402431L;
  constexpr int N = 4000;
  CL sum = -gamma;
  for (int n = N; n >= 1; --n) {
    sum += 1.0L / static_cast<long double>(n) - 1.0L / (static_cast<long double>(n) - 1.0L + z);
  }
  const long double a = N;
  const CL b = a - 1.0L + z;
  const CL integral = std::log(b / a);
  const CL f = 1.0L / a - 1.0L / b;
  const CL f1 = -1.0L / (a * a) + 1.0L / (b * b);
  const CL f3 = -6.0L / (a * a * a * a) + 6.0L / (b * b * b * b);
  sum += integral - 0.5L * f - f1 / 12.0L + f3 / 720.0L;
  return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

inline double rel_err(std::complex<double> a, std::complex<double> b) {
  return std::abs(a - b) / std::abs(b);
}

}  // namespace ref
