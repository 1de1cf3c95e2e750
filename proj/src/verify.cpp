#include "fdt/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>

#include "fdt/error.hpp"
#include "fdt/fermi.hpp"
#include "fdt/oracles.hpp"
#include "fdt/quadrature.hpp"
#include "fdt/specfun.hpp"
#include "fdt/transport.hpp"

namespace fdt {
namespace {

using Rng = std::mt19937_64;

double uniform(Rng& rng, double a, double b) {
  return std::uniform_real_distribution<double>(a, b)(rng);
}

// Random point with |z| <= 50, at least 0.1 away from the poles of digamma.
Complex random_regular_z(Rng& rng) {
  while (true) {
    const double re = uniform(rng, -50.0, 50.0);
    const double im = uniform(rng, 0.0, 1.0) < 0.3 ? 0.0 : uniform(rng, -50.0, 50.0);
    const Complex z{re, im};
    if (std::abs(z) > 50.0) continue;
    const double k = std::round(re);
    if (k <= 0.0 && std::abs(z - Complex{k, 0.0}) < 0.1) continue;
    if (std::abs(z) < 0.1) continue;
    return z;
  }
}

DoubleFermi random_fermi_pair(Rng& rng) {
  return {{uniform(rng, -20.0, 20.0), uniform(rng, 0.2, 10.0)},
          {uniform(rng, -20.0, 20.0), uniform(rng, 0.2, 10.0)}};
}

TransportParams random_transport(Rng& rng, double beta_lo, double beta_hi) {
  while (true) {
    TransportParams tp{uniform(rng, 0.2, 2.0), uniform(rng, 0.2, 4.0),
                       uniform(rng, beta_lo, beta_hi)};
    if (std::abs(tp.V - tp.omega) >= 0.1) return tp;
  }
}

const DoubleFermi kDefaultPair{{0.0, 6.0}, {-15.0, 0.4}};

class Checker {
 public:
  explicit Checker(std::vector<CheckResult>& out) : out_(out) {}

  // Runs `body`, which returns the largest observed error; an exception
  // counts as a failure.
  void run(const std::string& name, double tolerance, const std::function<double()>& body) {
    CheckResult r{name, 0.0, tolerance, false};
    try {
      r.max_error = body();
      r.passed = std::isfinite(r.max_error) && r.max_error <= tolerance;
    } catch (const std::exception&) {
      r.max_error = HUGE_VAL;
    }
    out_.push_back(r);
  }

 private:
  std::vector<CheckResult>& out_;
};

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace

std::optional<Fault> parse_fault(std::string_view name) {
  if (name == "none") return Fault::None;
  if (name == "ghilbert-sign") return Fault::GHilbertSign;
  return std::nullopt;
}

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string VerifyReport::format() const {
  std::string out;
  char line[160];
  std::snprintf(line, sizeof line, "fdt verify seed=%llu\n", static_cast<unsigned long long>(seed));
  out += line;
  std::snprintf(line, sizeof line, "%-28s %12s %12s  %s\n", "check", "max_error", "tolerance",
                "status");
  out += line;
  int ok = 0;
  for (const auto& c : checks) {
    std::snprintf(line, sizeof line, "%-28s %12.3e %12.3e  %s\n", c.name.c_str(), c.max_error,
                  c.tolerance, c.passed ? "PASS" : "FAIL");
    out += line;
    ok += c.passed ? 1 : 0;
  }
  std::snprintf(line, sizeof line, "summary: %d/%zu checks passed\n", ok, checks.size());
  out += line;
  return out;
}

VerifyReport run_verification(std::uint64_t seed, Fault fault) {
  VerifyReport report;
  report.seed = seed;
  Checker check(report.checks);
  Rng rng(seed);

  const auto ghilbert = [fault](double y, const DoubleFermi& d) {
    const double v = g_hilbert(y, d);
    return fault == Fault::GHilbertSign ? -v : v;
  };

  // --- digamma -----------------------------------------------------------
  std::vector<Complex> zs(1000);
  for (auto& z : zs) z = random_regular_z(rng);

  check.run("digamma_recurrence", 1e-13, [&] {
    double worst = 0.0;
    for (const Complex z : zs) {
      const Complex a = digamma(z + 1.0);
      const Complex b = digamma(z);
      const double scale = std::max({1.0, std::abs(a), std::abs(b), 1.0 / std::abs(z)});
      worst = std::max(worst, std::abs(a - b - 1.0 / z) / scale);
    }
    return worst;
  });

  check.run("digamma_reflection", 1e-12, [&] {
    double worst = 0.0;
    for (const Complex z : zs) {
      if (z.imag() == 0.0 && z.real() == std::round(z.real())) continue;
      const Complex a = digamma(1.0 - z);
      const Complex b = digamma(z);
      const Complex c = kPi * cot_pi(z);
      const double scale = std::max({1.0, std::abs(a), std::abs(b), std::abs(c)});
      worst = std::max(worst, std::abs(a - b - c) / scale);
    }
    return worst;
  });

  check.run("digamma_conjugation", 0.0, [&] {
    for (const Complex z : zs) {
      const Complex a = digamma(std::conj(z));
      const Complex b = std::conj(digamma(z));
      if (a.real() != b.real() || a.imag() != b.imag()) return 1.0;
    }
    return 0.0;
  });

  check.run("fermi_digamma_identity", 1e-12, [&] {
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const FermiParams p{uniform(rng, -10.0, 10.0), uniform(rng, 0.1, 10.0)};
      const double x = uniform(rng, -50.0, 50.0);
      worst = std::max(worst, std::abs(fermi(x, p) - fermi_via_digamma(p.beta * (x - p.mu))));
    }
    return worst;
  });

  // --- Hilbert transform -------------------------------------------------
  check.run("ghilbert_vs_pv", 1e-8, [&] {
    std::vector<std::pair<DoubleFermi, std::pair<double, double>>> sets{{kDefaultPair, {-40.0, 25.0}}};
    for (int k = 0; k < 5; ++k) sets.push_back({random_fermi_pair(rng), {-30.0, 30.0}});
    double worst = 0.0;
    for (const auto& [d, range] : sets) {
      const auto fn = [d = d](double x) { return g(x, d); };
      for (int i = 0; i < 50; ++i) {
        const double y = range.first + (range.second - range.first) * i / 49.0;
        QuadCfg cfg;
        cfg.tail_cut = tail_cut_for(d, y);
        const double ref = pv_hilbert(fn, y, cfg).value;
        worst = std::max(worst, std::abs(ghilbert(y, d) - ref));
      }
    }
    return worst;
  });

  check.run("ghilbert_parity", 1e-12, [&] {
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
      const double beta = uniform(rng, 0.2, 10.0);
      const DoubleFermi d{{uniform(rng, -20.0, 20.0), beta}, {uniform(rng, -20.0, 20.0), beta}};
      const double c = 0.5 * (d.p1.mu + d.p2.mu);
      const double t = uniform(rng, 0.0, 30.0);
      worst = std::max(worst, std::abs(g(c + t, d) - g(c - t, d)));
      worst = std::max(worst, std::abs(ghilbert(c + t, d) + ghilbert(c - t, d)));
    }
    return worst;
  });

  check.run("ghilbert_swap_antisymmetry", 0.0, [&] {
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
      const DoubleFermi d = random_fermi_pair(rng);
      const double y = uniform(rng, -40.0, 40.0);
      const double lambda = uniform(rng, -3.0, 3.0);
      worst = std::max(worst, std::abs(g(y, d) + g(y, d.swapped())));
      worst = std::max(worst, std::abs(g_hilbert(y, d) + g_hilbert(y, d.swapped())));
      worst = std::max(worst, std::abs(g_fourier(lambda, d) + g_fourier(lambda, d.swapped())));
    }
    return worst;
  });

  // y^2 (g_H - asymptote) must settle to a constant as y doubles.
  check.run("ghilbert_asymptote", 0.05, [&] {
    std::array<double, 3> q{};
    const std::array<double, 3> ys{1e3, 2e3, 4e3};
    for (std::size_t i = 0; i < ys.size(); ++i) {
      q[i] = ys[i] * ys[i] * (ghilbert(ys[i], kDefaultPair) - g_hilbert_asymptotic(ys[i], kDefaultPair));
    }
    return std::max(std::abs(q[1] / q[0] - 1.0), std::abs(q[2] / q[1] - 1.0));
  });

  // Residual against the zero-temperature log decays as beta^-2.
  check.run("ghilbert_lowT_order", 0.3, [&] {
    double worst = 0.0;
    double prev = 0.0;
    for (const double beta : {100.0, 200.0, 400.0}) {
      const DoubleFermi d{{0.0, beta}, {-15.0, beta}};
      const double r = std::abs(ghilbert(5.0, d) - g_hilbert_lowT(5.0, 0.0, -15.0));
      if (prev > 0.0) worst = std::max(worst, std::abs(std::log2(prev / r) - 2.0));
      prev = r;
    }
    return worst;
  });

  check.run("matsubara_rate", 0.1, [&] {
    const double exact = g_hilbert(0.0, kDefaultPair);
    const std::array<long, 3> ns{100, 1000, 10000};
    std::array<double, 3> err{};
    for (std::size_t i = 0; i < ns.size(); ++i) {
      err[i] = std::abs(matsubara_g_hilbert_complex(0.0, kDefaultPair, ns[i]) - Complex{exact, 0.0});
    }
    if (!(err[2] < err[1] && err[1] < err[0])) return HUGE_VAL;
    const double slope = std::log10(err[2] / err[0]) / 2.0;
    return std::abs(slope + 1.0);
  });

  // --- Fourier transform -------------------------------------------------
  check.run("gfourier_vs_quadrature", 1e-8, [&] {
    double worst = 0.0;
    QuadCfg cfg;
    cfg.tail_cut = tail_cut_for(kDefaultPair, 0.0);
    const auto fn = [](double x) { return g(x, kDefaultPair); };
    for (int i = 0; i < 10; ++i) {
      const double mag = 0.2 + 0.4 * (i / 2);
      const double lambda = i % 2 == 0 ? mag : -mag;
      worst = std::max(worst, std::abs(g_fourier(lambda, kDefaultPair) - fourier_integral(fn, lambda, cfg).value));
    }
    return worst;
  });

  check.run("gfourier_zero_limit", 1e-10, [&] {
    const Complex target{kDefaultPair.p1.mu - kDefaultPair.p2.mu, 0.0};
    // g_F - (mu1 - mu2) is O(lambda |mu1 - mu2| |mu1 + mu2| / 2) near 0
    return std::max({std::abs(g_fourier(0.0, kDefaultPair) - target),
                     std::abs(g_fourier(1e-13, kDefaultPair) - target),
                     std::abs(g_fourier(-1e-13, kDefaultPair) - target)});
  });

  // The direct form subtracts two terms of size ~1/(pi lambda), so near the
  // switch it carries ~eps/lambda of cancellation error.
  check.run("gfourier_branch_agreement", 1e-9, [&] {
    const double bmin = std::min(kDefaultPair.p1.beta, kDefaultPair.p2.beta);
    const double at_switch = kFourierSeriesSwitch * bmin / kPi;
    return std::abs(g_fourier_small(at_switch, kDefaultPair) - g_fourier_direct(at_switch, kDefaultPair));
  });

  // Transform of g_H at equal betas; the a y/(1 + y^2) part of its 1/y tail
  // is transformed analytically and the 1/y^3 remainder truncated at |y| = L.
  check.run("gH_fourier_vs_quadrature", 1e-6, [&] {
    const DoubleFermi d{{1.0, 2.0}, {-1.0, 2.0}};
    const double amp = (d.p1.mu - d.p2.mu) / kPi;
    const double L = 2000.0;
    const auto panels = split_uniform(-L, L, 4000);
    double worst = 0.0;
    for (const double lambda : {-0.5, 0.5, 1.5}) {
      const std::function<Complex(double)> f = [&](double y) {
        const double r = ghilbert(y, d) - amp * y / (1.0 + y * y);
        return Complex{std::cos(lambda * y) * r, std::sin(lambda * y) * r};
      };
      const double sign = lambda > 0.0 ? 1.0 : -1.0;
      const Complex numeric = integrate_panels<Complex>(f, panels, {}, Execution::Parallel).value +
                              Complex{0.0, sign * kPi * amp * std::exp(-std::abs(lambda))};
      worst = std::max(worst, std::abs(numeric - gH_fourier(lambda, d)));
    }
    return worst;
  });

  // --- series sums -------------------------------------------------------
  check.run("splus_vs_series", 1e-9, [&] {
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
      const Complex w{0.1 + 0.5 * i, i % 3 == 0 ? 0.0 : 0.7 * (i - 5)};
      for (int j = 0; j < 10; ++j) {
        const double r = 0.09 * (j + 1);
        const double theta = j % 2 == 0 ? 0.0 : 0.6 * j;
        const Complex z = std::polar(r, theta);
        worst = std::max(worst, rel(s_plus(w, z), s_plus_series(w, z)));
      }
    }
    return worst;
  });

  check.run("lerch_overlap", 1e-10, [&] {
    double worst = 0.0;
    for (const Complex w : {Complex{1.0, 0.0}, Complex{0.5, 2.0}, Complex{3.5, -1.0}, Complex{0.0, 0.7}}) {
      for (int i = 0; i <= 10; ++i) {
        const Complex z{0.45 + 0.01 * i, 0.0};
        worst = std::max(worst, rel(lerch_phi_near_unity(z, w), lerch_phi_direct(z, w)));
      }
    }
    return worst;
  });

  check.run("lerch_hypergeometric", 1e-10, [&] {
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      const Complex z = std::polar(uniform(rng, 0.0, 0.5), uniform(rng, -kPi, kPi));
      const Complex w{uniform(rng, 0.2, 5.0), uniform(rng, -3.0, 3.0)};
      const Complex f = hyp2f1_series(1.0, w, 1.0 + w, z) / w;
      worst = std::max(worst, rel(lerch_phi(z, w), f));
    }
    return worst;
  });

  check.run("splus_near_one_decay", 0.6, [&] {
    double worst = 0.0;
    for (const Complex w : {Complex{1.0, 0.0}, Complex{2.0, 0.0}, Complex{0.5, 1.0}}) {
      const double r1 = std::abs(s_plus(w, 0.99) - s_plus_near_one(w, 0.99));
      const double r2 = std::abs(s_plus(w, 0.995) - s_plus_near_one(w, 0.995));
      worst = std::max(worst, r2 / r1);
    }
    return worst;
  });

  check.run("s_minus_vs_series", 1e-9, [&] {
    double worst = 0.0;
    for (const Complex w : {Complex{0.25, 0.0}, Complex{0.3, 0.4}, Complex{-1.7, 0.2}}) {
      for (const Complex z : {Complex{0.5, 0.0}, Complex{-0.3, 0.4}, Complex{0.8, 0.0}}) {
        worst = std::max(worst, rel(s_minus_sum(w, z), s_minus_series(w, z)));
      }
    }
    return worst;
  });

  // --- transport ---------------------------------------------------------
  check.run("residue_sums", 1e-10, [&] {
    double worst = 0.0;
    const std::array<std::pair<TransportParams, double>, 3> cases{{
        {{1.0, 2.0, 1.0}, 0.5}, {{0.3, 1.0, 4.0}, 0.2}, {{0.5, 3.0, 2.0}, 0.1}}};
    for (const auto& [tp, lambda] : cases) {
      const ResidueSums s = direct_residue_sums(lambda, tp);
      worst = std::max({worst, rel(R_omega(lambda, tp), s.omega), rel(R_zero(lambda, tp), s.zero),
                        rel(R_V(lambda, tp), s.bias)});
    }
    return worst;
  });

  check.run("K_vs_quadrature", 1e-6, [&] {
    double worst = 0.0;
    for (int k = 0; k < 10; ++k) {
      const TransportParams tp = random_transport(rng, 0.5, 5.0);
      const double lambda = uniform(rng, 0.05, 2.0);
      worst = std::max(worst, rel(K(lambda, tp), K_quadrature(lambda, tp).value));
    }
    return worst;
  });

  check.run("I_vs_quadrature", 1e-6, [&] {
    double worst = 0.0;
    for (int k = 0; k < 10; ++k) {
      const TransportParams tp = random_transport(rng, 0.3, 5.0);
      worst = std::max(worst, rel(I_exact(tp), I_quadrature(tp).value));
    }
    return worst;
  });

  // Re K - I is even in lambda but Im K is odd with a cubic term, so the
  // quadratic fit leaves ~lambda^3 in the imaginary part; that residual is
  // checked against the extrapolation's own error estimate.
  RichardsonResult rich;
  check.run("I_richardson_limit", 1e-6, [&] {
    const TransportParams tp{1.0, 2.0, 1.0};
    std::vector<RichardsonSample> s;
    for (const double lambda : {0.02, 0.01, 0.005}) s.push_back({lambda, K(lambda, tp)});
    rich = richardson_limit(s);
    const double exact = I_exact(tp);
    return std::abs(rich.value.real() - exact) / std::abs(exact);
  });

  check.run("K_imag_limit_over_estimate", 1.0, [&] {
    if (rich.ill_conditioned || !(rich.error > 0.0)) return HUGE_VAL;
    return std::abs(rich.value.imag()) / rich.error;
  });

  check.run("divergence_cancellation", 0.05, [&] {
    const TransportParams tp{1.0, 2.0, 1.0};
    const std::array<double, 3> lambdas{1e-3, 1e-4, 1e-5};
    std::array<double, 3> m{};
    for (std::size_t i = 0; i < 3; ++i) m[i] = std::abs(lambdas[i] * K(lambdas[i], tp));
    return std::max(std::abs(m[1] / m[0] / 0.1 - 1.0), std::abs(m[2] / m[1] / 0.1 - 1.0));
  });

  check.run("I_lowT_order", 0.5, [&] {
    double worst = 0.0;
    double prev = 0.0;
    for (const double beta : {50.0, 100.0, 200.0, 400.0}) {
      const TransportParams tp{1.0, 2.0, beta};
      const double r = std::abs(I_exact(tp) - I_lowT(tp).value());
      if (prev > 0.0) {
        if (prev / r < 10.0) return HUGE_VAL;
        worst = std::max(worst, std::abs(std::log2(prev / r) - 4.0));
      }
      prev = r;
    }
    return worst;
  });

  check.run("I_highT_limit", 1e-3, [&] {
    const TransportParams tp{1.0, 2.0, 0.01};
    const double two_pi = 2.0 * kPi;
    const double target = 12.0 * kZeta3Printed * tp.omega * tp.V * tp.V / (two_pi * two_pi * two_pi);
    return std::abs(I_exact(tp) / (tp.beta * tp.beta) - target) / target;
  });

  check.run("I_parity", 1e-15, [&] {
    const TransportParams tp{1.0, 2.0, 1.0};
    const double i0 = I_exact(tp);
    const double even = std::abs(I_exact({tp.omega, -tp.V, tp.beta}) - i0);
    const double odd = std::abs(I_exact({-tp.omega, tp.V, tp.beta}) + i0);
    return std::max(even, odd) / std::abs(i0);
  });

  return report;
}

}  // namespace fdt
