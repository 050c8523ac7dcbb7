#include <benchmark/benchmark.h>
#include <hyperex/extension.hpp>
#include <hyperex/functionals.hpp>

namespace {

using namespace hyperex;

void BM_QRatioClosed(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(functionals::q_ratio_closed(2, p, 0.3, 1.0));
}
BENCHMARK(BM_QRatioClosed)->Arg(4)->Arg(6);

void BM_QRatioQuadrature(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(functionals::q_ratio_quadrature(d, 4, 0.3, 1.0, {}));
}
BENCHMARK(BM_QRatioQuadrature)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_MonotonicityScan(benchmark::State& state) {
  const auto grid = functionals::make_grid(1e-3, 1e2, static_cast<std::size_t>(state.range(0)), true);
  for (auto _ : state) benchmark::DoNotOptimize(functionals::monotonicity_scan(2, 6, 1.0, grid));
}
BENCHMARK(BM_MonotonicityScan)->Arg(200)->Arg(2000)->Unit(benchmark::kMicrosecond);

void BM_CauchySchwarzSides(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(extension::cauchy_schwarz_sides({1.0, {2, 1.0}}, {}));
}
BENCHMARK(BM_CauchySchwarzSides)->Unit(benchmark::kMillisecond)->Iterations(2);

void BM_Combiner(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(functionals::two_sheeted_combiner_check(100000, 1));
}
BENCHMARK(BM_Combiner)->Unit(benchmark::kMillisecond);

}  // namespace
