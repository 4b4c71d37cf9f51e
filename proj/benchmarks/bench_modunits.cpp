#include <benchmark/benchmark.h>

#include "modunits/curve_series.hpp"
#include "modunits/divpoly.hpp"
#include "modunits/siegel.hpp"
#include "modunits/unit_lattice.hpp"
#include "modunits/verify.hpp"

using namespace modunits;

static void BM_DivisionPolynomial(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) {
    DivPolyCache cache;
    benchmark::DoNotOptimize(cache.P(n));
  }
}
BENCHMARK(BM_DivisionPolynomial)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

static void BM_DefiningPolynomial(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) {
    DivPolyCache cache;
    benchmark::DoNotOptimize(cache.defining_polynomial(n));
  }
}
BENCHMARK(BM_DefiningPolynomial)->DenseRange(10, 16, 2)->Unit(benchmark::kMillisecond);

static void BM_Gcd(benchmark::State& state) {
  DivPolyCache cache;
  const BivarPoly a = cache.P(state.range(0));
  const BivarPoly b = cache.P(state.range(0) - 1);
  for (auto _ : state) benchmark::DoNotOptimize(gcd(a, b));
}
BENCHMARK(BM_Gcd)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

static void BM_HStar(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(h_star(1, N, default_prec(N)));
}
BENCHMARK(BM_HStar)->Arg(12)->Arg(48);

static void BM_ProductSeries(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const ExpVector e = d_to_h(N);
  for (auto _ : state) benchmark::DoNotOptimize(product_series(e, default_prec(N)));
}
BENCHMARK(BM_ProductSeries)->Arg(7)->Arg(12)->Arg(24)->Unit(benchmark::kMillisecond);

static void BM_Decompose(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const auto sample = random_sample_of_S(N, 1, 5, 1);
  const QSeries fstar = product_series(sample.front(), default_prec(N)).fstar;
  for (auto _ : state) benchmark::DoNotOptimize(decompose_series(fstar, N));
}
BENCHMARK(BM_Decompose)->Arg(5)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_CurveExpansion(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(CurveExpansion(N, default_prec(N)));
}
BENCHMARK(BM_CurveExpansion)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_BasisS(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(basis_S(N));
}
BENCHMARK(BM_BasisS)->Arg(40)->Arg(100);
BENCHMARK_MAIN();
