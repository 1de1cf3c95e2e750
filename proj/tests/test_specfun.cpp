#include <doctest.h>

#include <cmath>
#include <random>

#include "fdt/error.hpp"
#include "fdt/oracles.hpp"
#include "fdt/specfun.hpp"
#include "reference.hpp"

using fdt::Complex;
using fdt::kPi;

namespace {

Complex random_z(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-50.0, 50.0);
  while (true) {
    const Complex z{u(rng), u(rng)};
    if (std::abs(z) <= 50.0 && std::abs(z - std::round(z.real())) > 0.1) return z;
  }
}

}  // namespace

TEST_CASE("digamma at anchor points") {
  CHECK(fdt::digamma(1.0) == doctest::Approx(-0.57721566490153286061).epsilon(1e-15));
  CHECK(fdt::digamma(0.5) == doctest::Approx(-1.9635100260214234794).epsilon(1e-15));
  CHECK(fdt::digamma(0.5) ==
        doctest::Approx(-fdt::kEulerGamma - 2.0 * std::log(2.0)).epsilon(1e-15));
  const Complex z{3.0, 4.0};
  CHECK(std::abs(fdt::digamma(z + 1.0) - fdt::digamma(z) - 1.0 / z) < 1e-14);
}

TEST_CASE("digamma agrees with the Euler-Maclaurin reference") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const Complex z = random_z(rng);
    const Complex want = ref::digamma(z);
    CHECK(std::abs(fdt::digamma(z) - want) <= 1e-13 * std::max(1.0, std::abs(want)));
  }
  for (const double x : {-7.5, -2.3, -0.4, 0.01, 0.3, 1.4616321449683623, 9.99, 10.0, 49.5}) {
    const Complex want = ref::digamma({x, 0.0});
    CHECK(std::abs(fdt::digamma(x) - want.real()) <= 1e-13 * std::max(1.0, std::abs(want)));
  }
}

TEST_CASE("digamma identities over random points") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    const Complex z = random_z(rng);
    const Complex a = fdt::digamma(z);
    const Complex b = fdt::digamma(z + 1.0);
    CHECK(std::abs(b - a - 1.0 / z) <= 1e-13 * std::max(1.0, std::abs(b)));
    const Complex c = fdt::digamma(1.0 - z);
    CHECK(std::abs(c - a - kPi * fdt::cot_pi(z)) <= 1e-12 * std::max(1.0, std::abs(c)));
    const Complex s = fdt::digamma(std::conj(z));
    const Complex t = std::conj(a);
    CHECK(s.real() == t.real());
    CHECK(s.imag() == t.imag());
  }
}

TEST_CASE("digamma poles") {
  CHECK_THROWS_AS(fdt::digamma(0.0), fdt::PoleError);
  CHECK_THROWS_AS(fdt::digamma(-3.0), fdt::PoleError);
  CHECK_THROWS_AS(fdt::digamma(Complex{-12.0, 0.0}), fdt::PoleError);
  CHECK_THROWS_AS(fdt::digamma(Complex{NAN, 0.0}), fdt::DomainError);
  CHECK(std::isfinite(fdt::digamma(Complex{-3.0, 1e-9}).real()));
  CHECK(std::isfinite(fdt::digamma(-3.0 + 1e-9)));
}

TEST_CASE("cot_pi near poles and far from the axis") {
  CHECK_THROWS_AS(fdt::cot_pi(Complex{2.0, 0.0}), fdt::PoleError);
  CHECK(fdt::cot_pi(Complex{0.25, 0.0}).real() == doctest::Approx(1.0).epsilon(1e-15));
  const Complex far = fdt::cot_pi(Complex{0.3, 400.0});
  CHECK(far.real() == 0.0);
  CHECK(far.imag() == -1.0);
  const Complex z{0.2, 0.7};
  const Complex want = std::cos(kPi * z) / std::sin(kPi * z);
  CHECK(ref::rel_err(fdt::cot_pi(z), want) < 1e-14);
}

TEST_CASE("im_psi_imag_axis") {
  CHECK(fdt::im_psi_imag_axis(1.0) == doctest::Approx(0.5 + 0.5 * kPi / std::tanh(kPi)));
  for (const double x : {0.01, 0.37, 1.0, 3.3, 40.0}) {
    CHECK(fdt::im_psi_imag_axis(x) ==
          doctest::Approx(fdt::digamma(Complex{0.0, x}).imag()).epsilon(1e-12));
  }
  CHECK(fdt::im_psi_imag_axis(-0.37) == -fdt::im_psi_imag_axis(0.37));
  CHECK_THROWS_AS(fdt::im_psi_imag_axis(0.0), fdt::DomainError);
}

TEST_CASE("lerch_phi values") {
  CHECK(fdt::lerch_phi(Complex{0.0, 0.0}, Complex{2.5, 0.0}) == Complex{0.4, 0.0});
  CHECK(fdt::lerch_phi(Complex{0.5, 0.0}, Complex{1.0, 0.0}).real() ==
        doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-15));
  // high-precision reference values
  const Complex a = fdt::lerch_phi(Complex{0.7, 0.0}, Complex{1.5, 2.0});
  CHECK(ref::rel_err(a, {0.68230245430657335492, -0.57551395017740500804}) < 1e-14);
  const Complex b = fdt::lerch_phi(Complex{0.6, 0.3}, Complex{0.3, -1.0});
  CHECK(ref::rel_err(b, {0.41718250250622422475, 1.5942160736277948860}) < 1e-14);
  // z = 0.95 is handled by the expansion about 1
  const Complex z{0.95, 0.0};
  const Complex w{1.0, 0.0};
  CHECK(ref::rel_err(fdt::lerch_phi(z, w), -std::log(1.0 - z) / z) < 1e-14);
}

TEST_CASE("lerch_phi strategies agree on the overlap") {
  for (const Complex w : {Complex{1.0, 0.0}, Complex{0.5, 2.0}, Complex{-0.5, 0.3}, Complex{6.0, -4.0}}) {
    for (double x = 0.45; x <= 0.5501; x += 0.025) {
      const Complex z{x, 0.0};
      CHECK(ref::rel_err(fdt::lerch_phi_near_unity(z, w), fdt::lerch_phi_direct(z, w)) < 1e-10);
    }
  }
}

TEST_CASE("lerch_phi hypergeometric identity") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> r(0.0, 0.5), th(-kPi, kPi), wr(0.2, 5.0), wi(-3.0, 3.0);
  for (int i = 0; i < 20; ++i) {
    const Complex z = std::polar(r(rng), th(rng));
    const Complex w{wr(rng), wi(rng)};
    const Complex f = fdt::hyp2f1_series(1.0, w, 1.0 + w, z) / w;
    CHECK(ref::rel_err(fdt::lerch_phi(z, w), f) < 1e-10);
  }
}

TEST_CASE("lerch_phi errors") {
  CHECK_THROWS_AS(fdt::lerch_phi(Complex{1.0, 0.0}, Complex{1.0, 0.0}), fdt::DomainError);
  CHECK_THROWS_AS(fdt::lerch_phi(Complex{0.3, 0.0}, Complex{-2.0, 0.0}), fdt::PoleError);
  fdt::SeriesCfg tight;
  tight.max_terms = 16;
  CHECK_THROWS_AS(fdt::lerch_phi_near_unity(Complex{0.6, 0.2}, Complex{1.0, 0.0}, tight),
                  fdt::ConvergenceError);
  fdt::SeriesCfg bad;
  bad.rel_tol = 0.0;
  CHECK_THROWS_AS(bad.validate(), fdt::DomainError);
  bad = {};
  bad.max_terms = 15;
  CHECK_THROWS_AS(bad.validate(), fdt::DomainError);
}

TEST_CASE("s_plus closed form") {
  CHECK(ref::rel_err(fdt::s_plus(Complex{1.2, 0.0}, Complex{0.0, 0.0}), fdt::digamma(Complex{2.2, 0.0})) <
        1e-15);
  for (const auto& [w, z] : {std::pair{Complex{1.0, 0.0}, Complex{0.5, 0.0}},
                             std::pair{Complex{2.0, 1.0}, Complex{0.3, 0.0}},
                             std::pair{Complex{0.0, 1.3}, Complex{0.9, 0.0}},
                             std::pair{Complex{0.4, -2.0}, Complex{-0.6, 0.5}}}) {
    CHECK(ref::rel_err(fdt::s_plus(w, z), fdt::s_plus_series(w, z)) < 1e-9);
  }
}

TEST_CASE("s_minus_sum") {
  const Complex w{0.3, 0.4};
  CHECK(ref::rel_err(fdt::s_minus_sum(w, Complex{0.0, 0.0}), fdt::digamma(w)) < 1e-14);
  const Complex q{0.25, 0.0};
  const Complex z{0.5, 0.0};
  CHECK(ref::rel_err(fdt::s_minus_sum(q, z), fdt::s_minus_series(q, z)) < 1e-9);
  CHECK_THROWS_AS(fdt::s_minus_sum(Complex{2.0, 0.0}, z), fdt::PoleError);

  // sum [Psi(-w-n) + Psi(w+n+1)] z^n = 2 S+(w,z) + pi cot(pi w) / (1 - z)
  const Complex v{0.3, 0.2};
  const Complex x{0.4, 0.0};
  const Complex lhs = fdt::s_minus_sum(-v, x) + fdt::s_plus(v, x);
  const Complex rhs = 2.0 * fdt::s_plus(v, x) + kPi * fdt::cot_pi(v) / (1.0 - x);
  CHECK(std::abs(lhs - rhs) < 1e-9 * std::abs(rhs));
}

TEST_CASE("s_plus_near_one residual is O(1 - z)") {
  for (const Complex w : {Complex{1.0, 0.0}, Complex{2.0, 0.0}, Complex{0.3, 0.8}}) {
    const double r1 = std::abs(fdt::s_plus(w, 0.99) - fdt::s_plus_near_one(w, 0.99));
    const double r2 = std::abs(fdt::s_plus(w, 0.995) - fdt::s_plus_near_one(w, 0.995));
    CHECK(r2 / r1 <= 0.6);
  }
  const double z = 0.93;
  CHECK(ref::rel_err(fdt::s_plus_near_one(Complex{0.0, 0.0}, z),
                     Complex{(-fdt::kEulerGamma - std::log(1.0 - z)) / (1.0 - z), 0.0}) < 1e-15);
  const Complex two{2.0, 0.0};
  const double r98 = std::abs(fdt::s_plus(two, 0.98) - fdt::s_plus_near_one(two, 0.98));
  const double r99 = std::abs(fdt::s_plus(two, 0.99) - fdt::s_plus_near_one(two, 0.99));
  CHECK(r99 / r98 == doctest::Approx(0.5).epsilon(0.2));
  CHECK_THROWS_AS(fdt::s_plus_near_one(two, 0.5), fdt::DomainError);
  CHECK_THROWS_AS(fdt::s_plus_near_one(two, 1.0), fdt::DomainError);
}

TEST_CASE("h") {
  CHECK(fdt::h(0.0) == 0.0);
  for (const double x : {1e-8, 0.8, 3.0, 1e4}) CHECK(fdt::h(-x) == -fdt::h(x));
  CHECK(std::abs(fdt::h(10.0) - (10.0 * std::log(10.0) + 1.0 / 120.0 + 1.0 / 120000.0)) < 1e-6);
  // x Re Psi(ix) = -gamma x + zeta(3) x^3 + O(x^5)
  for (const double x : {1e-3, 1e-2}) {
    const double series = -fdt::kEulerGamma * x + fdt::kZeta3 * x * x * x;
    CHECK(std::abs(fdt::h(x) - series) < 2.0 * std::pow(x, 5));
  }
  const double x = 2.7;
  CHECK(fdt::h(x) == doctest::Approx(x * ref::digamma({0.0, x}).real()).epsilon(1e-14));
}
