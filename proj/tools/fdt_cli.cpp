// fdt: curve tables, transport reports and the self-verification suite.
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <system_error>

#include <CLI11.hpp>

#include "fdt/curves.hpp"
#include "fdt/error.hpp"
#include "fdt/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double parse_number(std::string_view s, const std::string& what) {
  double v = 0.0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || end != s.data() + s.size()) {
    throw UsageError("invalid number '" + std::string(s) + "' in " + what);
  }
  return v;
}

fdt::GridSpec parse_grid(const std::string& range, long points) {
  // Split at the first ':' that is not the leading sign position.
  const auto colon = range.find(':', 1);
  if (colon == std::string::npos) throw UsageError("--range expects MIN:MAX, got '" + range + "'");
  fdt::GridSpec grid{parse_number(std::string_view(range).substr(0, colon), "--range"),
                     parse_number(std::string_view(range).substr(colon + 1), "--range"), points};
  try {
    grid.validate();
  } catch (const fdt::DomainError& e) {
    throw UsageError(e.what());
  }
  return grid;
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + out + "' for writing");
  f << text;
  if (!f) throw std::runtime_error("write to '" + out + "' failed");
}

struct CurveOpts {
  double mu1 = 0.0;
  double mu2 = -15.0;
  double beta1 = 6.0;
  double beta2 = 0.4;
  std::string range;
  long points = 0;
  std::string out;

  fdt::DoubleFermi fermi() const {
    const fdt::DoubleFermi d{{mu1, beta1}, {mu2, beta2}};
    try {
      d.validate();
    } catch (const fdt::DomainError& e) {
      throw UsageError(e.what());
    }
    return d;
  }
};

void add_curve_flags(CLI::App* sub, CurveOpts& o) {
  sub->add_option("--mu1", o.mu1, "chemical potential of the first Fermi function")->capture_default_str();
  sub->add_option("--mu2", o.mu2, "chemical potential of the second Fermi function")->capture_default_str();
  sub->add_option("--beta1", o.beta1, "inverse temperature of the first Fermi function")->capture_default_str();
  sub->add_option("--beta2", o.beta2, "inverse temperature of the second Fermi function")->capture_default_str();
  sub->add_option("--range", o.range, "grid MIN:MAX (use --range=MIN:MAX for a negative MIN)")->capture_default_str();
  sub->add_option("--points", o.points, "number of grid points (>= 2)")->capture_default_str();
  sub->add_option("--out", o.out, "output CSV file (default: stdout)");
}

int run(int argc, char** argv) {
  CLI::App app{"Closed-form Hilbert/Fourier transforms of Fermi differences and transport integrals"};
  app.require_subcommand(1);

  CurveOpts gh{.range = "-40:25", .points = 1301};
  CLI::App* cmd_gh = app.add_subcommand("ghilbert", "tabulate y, g, g_H, dg_H/dy as CSV");
  add_curve_flags(cmd_gh, gh);

  CurveOpts gf{.range = "-2:2", .points = 401};
  CLI::App* cmd_gf = app.add_subcommand("gfourier", "tabulate lambda, Re g_F, Im g_F as CSV");
  add_curve_flags(cmd_gf, gf);

  double omega = 1.0, bias = 2.0, beta = 1.0;
  std::optional<double> lambda;
  CLI::App* cmd_tr = app.add_subcommand("transport", "report I_exact, I_lowT, I_highT and K(lambda)");
  cmd_tr->add_option("--omega", omega, "phonon energy")->capture_default_str();
  cmd_tr->add_option("--bias", bias, "bias energy V")->capture_default_str();
  cmd_tr->add_option("--beta", beta, "inverse temperature")->capture_default_str();
  cmd_tr->add_option("--lambda", lambda, "evaluate K at this lambda > 0");

  std::uint64_t seed = fdt::kDefaultSeed;
  std::string fault_name = "none";
  CLI::App* cmd_ver = app.add_subcommand("verify", "run the closed form vs. oracle checks");
  cmd_ver->add_option("--seed", seed, "seed for randomized parameter sets")->capture_default_str();
  cmd_ver->add_option("--inject-fault", fault_name)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (cmd_gh->parsed() || cmd_gf->parsed()) {
    const bool hilbert = cmd_gh->parsed();
    const CurveOpts& o = hilbert ? gh : gf;
    const fdt::DoubleFermi d = o.fermi();
    const fdt::GridSpec grid = parse_grid(o.range, o.points);
    const fdt::CurveTable t = hilbert ? fdt::ghilbert_table(d, grid) : fdt::gfourier_table(d, grid);
    emit(fdt::to_csv(t), o.out);
    return kExitOk;
  }

  if (cmd_tr->parsed()) {
    const fdt::TransportParams tp{omega, bias, beta};
    if (!(omega > 0.0) || !(bias > 0.0) || !(beta > 0.0)) {
      throw UsageError("transport requires --omega, --bias and --beta > 0");
    }
    if (lambda && !(*lambda > 0.0)) throw UsageError("--lambda must be > 0");
    std::string text;
    try {
      for (const auto& [k, v] : fdt::transport_report(tp, lambda)) text += k + "=" + v + "\n";
    } catch (const fdt::DomainError& e) {
      throw UsageError(e.what());
    }
    std::cout << text;
    return kExitOk;
  }

  const auto fault = fdt::parse_fault(fault_name);
  if (!fault) throw UsageError("unknown fault '" + fault_name + "'");
  const fdt::VerifyReport report = fdt::run_verification(seed, *fault);
  std::cout << report.format();
  return report.passed() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "fdt: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "fdt: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
}
