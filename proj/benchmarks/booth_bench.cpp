#include <benchmark/benchmark.h>

#include "booth/analysis.hpp"
#include "booth/functions.hpp"
#include "booth/polylog.hpp"
#include "booth/series.hpp"

using namespace booth;

static void BM_SeriesMul(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const Series a = f_alpha_series({0.5}, order);
  const Series b = build_ftilde({0.3}, order).series;
  for (auto _ : state) benchmark::DoNotOptimize(mul(a, b));
  state.SetComplexityN(order);
}
BENCHMARK(BM_SeriesMul)->Range(64, 4096)->Complexity(benchmark::oNSquared);

static void BM_SeriesExp(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  Series g = f_alpha_series({0.5}, order);
  g[0] = 0.0;
  for (auto _ : state) benchmark::DoNotOptimize(exp_series(g));
  state.SetComplexityN(order);
}
BENCHMARK(BM_SeriesExp)->Range(64, 4096)->Complexity(benchmark::oNSquared);

static void BM_BuildSharpF(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_sharpF({0.5}, order));
}
BENCHMARK(BM_BuildSharpF)->Range(64, 2048);

static void BM_Li4Series(benchmark::State& state) {
  const cdouble z = std::polar(0.9, 0.7);
  for (auto _ : state) benchmark::DoNotOptimize(li_auto(4, z, 1e-12));
}
BENCHMARK(BM_Li4Series);

static void BM_Li4Integral(benchmark::State& state) {
  const cdouble z = std::polar(0.9, 0.7);
  for (auto _ : state) benchmark::DoNotOptimize(li4_integral(z));
}
BENCHMARK(BM_Li4Integral);

static void BM_Membership(benchmark::State& state) {
  const FunctionSpec ft = build_ftilde({0.4}, 64);
  for (auto _ : state) benchmark::DoNotOptimize(bs_membership(ft, {0.4}));
}
BENCHMARK(BM_Membership);

static void BM_AreaQuadrature(benchmark::State& state) {
  const FunctionSpec f = build_falpha({0.5}, 128);
  for (auto _ : state) benchmark::DoNotOptimize(area_quadrature(f, 0.9));
}
BENCHMARK(BM_AreaQuadrature);

BENCHMARK_MAIN();
