#include <cmath>
#include <random>

#include <benchmark/benchmark.h>
#include <hyperex/extension.hpp>
#include <hyperex/geometry.hpp>
#include <hyperex/measures.hpp>

namespace {

using namespace hyperex;
using geometry::SpacetimePoint;
using geometry::Vector;

SpacetimePoint interior(int d) {
  Vector xi = Vector::Zero(d);
  xi[0] = 1.5;
  return {xi, std::sqrt(9.0 + xi.squaredNorm())};
}

void BM_ConvClosed(benchmark::State& state) {
  const measures::ConvClosedForm form{2, 3, 1.0};
  const SpacetimePoint p{Vector::Zero(2), 5.0};
  for (auto _ : state) benchmark::DoNotOptimize(measures::conv_closed(form, p));
}
BENCHMARK(BM_ConvClosed);

void BM_PointOracle(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const measures::MeasureSpec spec{{d, 1.0}, measures::Sheet::plus};
  const SpacetimePoint p = interior(d);
  for (auto _ : state) benchmark::DoNotOptimize(measures::conv_point_oracle(spec, 2, p, {}));
}
BENCHMARK(BM_PointOracle)->Arg(2)->Arg(3)->Unit(benchmark::kMicrosecond);

void BM_NormalForm(benchmark::State& state) {
  const SpacetimePoint p = interior(3);
  for (auto _ : state) benchmark::DoNotOptimize(geometry::normal_form(p));
}
BENCHMARK(BM_NormalForm);

void BM_RandomLorentz(benchmark::State& state) {
  std::mt19937_64 rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(geometry::random_lorentz(3, rng));
}
BENCHMARK(BM_RandomLorentz);

void BM_SurfaceIntegral(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const measures::TestFunction g{[](const Vector&, double tau) { return std::exp(-2.0 * tau); }, 40.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(measures::surface_integral({{d, 1.0}, measures::Sheet::plus}, g, {}));
  }
}
BENCHMARK(BM_SurfaceIntegral)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_PairingMonteCarlo(benchmark::State& state) {
  const measures::RadialWindow window{
      [](double rho, double tau) { return std::exp(-(rho * rho + (tau - 5.0) * (tau - 5.0)) / 2.0); }, 17.0};
  QuadSpec q;
  q.samples = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(measures::conv_pairing_oracle({{2, 1.0}, measures::Sheet::plus}, 3, window, q));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_PairingMonteCarlo)->Arg(1 << 16)->Arg(1 << 20)->Unit(benchmark::kMillisecond);

void BM_ExtensionQuadrature(benchmark::State& state) {
  const extension::ExpProfile profile{1.0, {2, 1.0}};
  Vector x = Vector::Zero(2);
  x[0] = static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(extension::extension_quadrature(profile, x, static_cast<double>(state.range(0)), {}));
  }
}
BENCHMARK(BM_ExtensionQuadrature)->Arg(0)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace
