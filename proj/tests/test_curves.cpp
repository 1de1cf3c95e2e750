#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "fdt/curves.hpp"
#include "fdt/error.hpp"
#include "fdt/oracles.hpp"

using fdt::DoubleFermi;
using fdt::GridSpec;

namespace {

const DoubleFermi kDefaultPair{{0.0, 6.0}, {-15.0, 0.4}};

struct Run {
  int status = -1;
  std::string out;
};

// Runs the CLI through the shell with stderr discarded.
Run run_cli(const std::string& args) {
  const std::string cmd = std::string("\"") + FDT_CLI_PATH + "\" " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("grid") {
  const GridSpec grid{-40.0, 25.0, 1301};
  CHECK(grid.at(0) == -40.0);
  CHECK(grid.at(1300) == 25.0);
  CHECK(grid.step() == doctest::Approx(0.05));
  CHECK_THROWS_AS((GridSpec{0.0, 1.0, 1}.validate()), fdt::DomainError);
  CHECK_THROWS_AS((GridSpec{1.0, 1.0, 5}.validate()), fdt::DomainError);
  CHECK_THROWS_AS((GridSpec{2.0, 1.0, 5}.validate()), fdt::DomainError);
  CHECK_THROWS_AS((GridSpec{0.0, INFINITY, 5}.validate()), fdt::DomainError);
}

TEST_CASE("ghilbert table") {
  const auto t = fdt::ghilbert_table(kDefaultPair, {-40.0, 25.0, 131});
  REQUIRE(t.rows.size() == 131);
  CHECK(t.columns == std::vector<std::string>{"y", "g", "g_H", "dg_H_dy"});
  CHECK(t.meta("beta2") == 0.4);
  CHECK(t.meta("fd_step") == doctest::Approx(0.5));
  CHECK(t.meta("fd_stencil_points") == 3.0);
  CHECK_THROWS_AS(t.meta("nope"), std::out_of_range);
  for (const auto& r : t.rows) {
    CHECK(r[1] == fdt::g(r[0], kDefaultPair));
    CHECK(r[2] == fdt::g_hilbert(r[0], kDefaultPair));
    const double h = t.meta("fd_step");
    CHECK(r[3] == (fdt::g_hilbert(r[0] + h, kDefaultPair) - fdt::g_hilbert(r[0] - h, kDefaultPair)) / (2.0 * h));
  }

  const DoubleFermi same{{1.0, 2.0}, {1.0, 2.0}};
  for (const auto& r : fdt::ghilbert_table(same, {-5.0, 5.0, 11}).rows) {
    CHECK(r[1] == 0.0);
    CHECK(r[2] == 0.0);
  }
}

TEST_CASE("grid refinement keeps shared nodes identical") {
  const auto coarse = fdt::ghilbert_table(kDefaultPair, {-40.0, 25.0, 66});
  const auto fine = fdt::ghilbert_table(kDefaultPair, {-40.0, 25.0, 131});
  for (std::size_t i = 0; i < coarse.rows.size(); ++i) {
    CHECK(coarse.rows[i][0] == fine.rows[2 * i][0]);
    CHECK(coarse.rows[i][1] == fine.rows[2 * i][1]);
    CHECK(coarse.rows[i][2] == fine.rows[2 * i][2]);
  }
}

TEST_CASE("serial and parallel tables are identical") {
  const GridSpec grid{-40.0, 25.0, 301};
  const auto s = fdt::ghilbert_table(kDefaultPair, grid, fdt::Execution::Serial);
  const auto p = fdt::ghilbert_table(kDefaultPair, grid, fdt::Execution::Parallel);
  CHECK(fdt::to_csv(s) == fdt::to_csv(p));
  const auto fs = fdt::gfourier_table(kDefaultPair, {-2.0, 2.0, 101}, fdt::Execution::Serial);
  const auto fp = fdt::gfourier_table(kDefaultPair, {-2.0, 2.0, 101}, fdt::Execution::Parallel);
  CHECK(fdt::to_csv(fs) == fdt::to_csv(fp));
}

TEST_CASE("gfourier table") {
  const auto t = fdt::gfourier_table(kDefaultPair, {-2.0, 2.0, 41});
  REQUIRE(t.rows.size() == 41);
  CHECK(t.rows[20][0] == 0.0);
  CHECK(t.rows[20][1] == 15.0);
  CHECK(t.rows[20][2] == 0.0);
  for (std::size_t i = 0; i < 20; ++i) {
    const auto& a = t.rows[i];
    const auto& b = t.rows[40 - i];
    CHECK(a[0] == -b[0]);
    CHECK(a[1] == doctest::Approx(b[1]).epsilon(1e-14));
    CHECK(a[2] == doctest::Approx(-b[2]).epsilon(1e-14));
  }
  fdt::QuadCfg cfg;
  cfg.tail_cut = fdt::tail_cut_for(kDefaultPair, 0.0);
  const auto want = fdt::fourier_integral([](double x) { return fdt::g(x, kDefaultPair); }, 1.0, cfg).value;
  const auto& row = t.rows[30];
  REQUIRE(row[0] == 1.0);
  CHECK(std::abs(row[1] - want.real()) < 1e-8);
  CHECK(std::abs(row[2] - want.imag()) < 1e-8);
}

TEST_CASE("csv round trip") {
  const auto t = fdt::ghilbert_table(kDefaultPair, {-40.0, 25.0, 97});
  const std::string text = fdt::to_csv(t);
  CHECK(text.rfind("# mu1=0\n", 0) == 0);
  const auto back = fdt::parse_csv(text);
  CHECK(back.columns == t.columns);
  CHECK(back.metadata == t.metadata);
  CHECK(back.rows == t.rows);
  CHECK(fdt::to_csv(back) == text);

  CHECK(fdt::format_real(0.1) == "0.10000000000000001");
  CHECK(fdt::format_real(-15.0) == "-15");
  CHECK_THROWS_AS(fdt::parse_csv("# a=1\n"), fdt::DomainError);
  CHECK_THROWS_AS(fdt::parse_csv("# a\nx,y\n1,2\n"), fdt::DomainError);
  CHECK_THROWS_AS(fdt::parse_csv("x,y\n1,abc\n"), fdt::DomainError);
  CHECK_THROWS_AS(fdt::parse_csv("x,y\n1,2,3\n"), fdt::DomainError);
}

TEST_CASE("transport report") {
  const auto r = fdt::transport_report({1.0, 2.0, 1.0}, 0.5);
  auto find = [&](const std::string& k) {
    for (const auto& [key, v] : r) {
      if (key == k) return v;
    }
    return std::string("<missing>");
  };
  CHECK(std::stod(find("I_exact")) == fdt::I_exact({1.0, 2.0, 1.0}));
  CHECK(find("I_lowT") != "<missing>");
  CHECK(find("I_highT") != "<missing>");
  CHECK(std::stod(find("K_re")) == fdt::K(0.5, {1.0, 2.0, 1.0}).real());
  const auto eq = fdt::transport_report({1.0, 1.0, 1.0}, std::nullopt);
  bool has_low = false, has_note = false, has_k = false;
  for (const auto& [k, v] : eq) {
    has_low |= k == "I_lowT";
    has_note |= k == "note";
    has_k |= k == "K_re";
  }
  CHECK_FALSE(has_low);
  CHECK(has_note);
  CHECK_FALSE(has_k);
}

TEST_CASE("cli exit codes and output") {
  CHECK(run_cli("ghilbert --points 5").status == 0);
  CHECK(run_cli("ghilbert --range=-40:25 --points 1").status == 2);
  CHECK(run_cli("ghilbert --range 3:1").status == 2);
  CHECK(run_cli("ghilbert --range abc").status == 2);
  CHECK(run_cli("ghilbert --beta1 0").status == 2);
  CHECK(run_cli("gfourier --points x").status == 2);
  CHECK(run_cli("").status == 2);
  CHECK(run_cli("bogus").status == 2);
  CHECK(run_cli("transport --beta -1").status == 2);
  CHECK(run_cli("transport --lambda 0").status == 2);
  CHECK(run_cli("verify --inject-fault nonsense").status == 2);

  const Run eq = run_cli("transport --omega 1 --bias 1 --beta 1");
  CHECK(eq.status == 0);
  CHECK(eq.out.find("note=") != std::string::npos);
  CHECK(eq.out.find("I_lowT=") == std::string::npos);

  const Run tr = run_cli("transport --omega 1 --bias 2 --beta 1 --lambda 0.5");
  CHECK(tr.status == 0);
  CHECK(tr.out.find("I_exact=0.19107048415185") != std::string::npos);
  CHECK(tr.out.find("K_re=") != std::string::npos);
}

TEST_CASE("cli csv matches the library") {
  const std::string path = "cli_ghilbert_test.csv";
  const Run r = run_cli("ghilbert --range=-40:25 --points 131 --out " + path);
  REQUIRE(r.status == 0);
  CHECK(r.out.empty());
  const std::string text = slurp(path);
  std::remove(path.c_str());
  CHECK(text == fdt::to_csv(fdt::ghilbert_table(kDefaultPair, {-40.0, 25.0, 131})));
  const Run f = run_cli("gfourier --mu1 1 --mu2 -1 --beta1 2 --beta2 2 --range=-1:1 --points 21");
  REQUIRE(f.status == 0);
  CHECK(f.out == fdt::to_csv(fdt::gfourier_table({{1.0, 2.0}, {-1.0, 2.0}}, {-1.0, 1.0, 21})));
}

TEST_CASE("cli verify") {
  const Run a = run_cli("verify --seed 42");
  const Run b = run_cli("verify --seed 42");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("FAIL") == std::string::npos);
  const Run bad = run_cli("verify --inject-fault ghilbert-sign");
  CHECK(bad.status == 1);
  CHECK(bad.out.find("ghilbert_vs_pv") != std::string::npos);
  CHECK(bad.out.find("FAIL") != std::string::npos);
}
