// Serial reference vs OpenMP kernels on the two hot paths: adaptive panel
// quadrature (oracles) and grid tabulation (curves).

#include <benchmark/benchmark.h>

#include "fdt/curves.hpp"
#include "fdt/oracles.hpp"

namespace {

const fdt::DoubleFermi kDefaultPair{{0.0, 6.0}, {-15.0, 0.4}};

fdt::Execution mode(const benchmark::State& state) {
  return state.range(0) == 0 ? fdt::Execution::Serial : fdt::Execution::Parallel;
}

void BM_PvHilbert(benchmark::State& state) {
  fdt::QuadCfg cfg;
  cfg.exec = mode(state);
  cfg.tail_cut = fdt::tail_cut_for(kDefaultPair, 0.0);
  const auto fn = [](double x) { return fdt::g(x, kDefaultPair); };
  for (auto _ : state) benchmark::DoNotOptimize(fdt::pv_hilbert(fn, 0.0, cfg).value);
}
BENCHMARK(BM_PvHilbert)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_KQuadrature(benchmark::State& state) {
  fdt::QuadCfg cfg;
  cfg.exec = mode(state);
  const fdt::TransportParams tp{1.0, 2.0, 1.0};
  for (auto _ : state) benchmark::DoNotOptimize(fdt::K_quadrature(0.5, tp, cfg).value);
}
BENCHMARK(BM_KQuadrature)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_GHilbertTable(benchmark::State& state) {
  const fdt::GridSpec grid{-40.0, 25.0, 13001};
  for (auto _ : state) benchmark::DoNotOptimize(fdt::ghilbert_table(kDefaultPair, grid, mode(state)).rows.data());
}
BENCHMARK(BM_GHilbertTable)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
