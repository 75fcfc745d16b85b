#include <benchmark/benchmark.h>

#include "gvbps/bps_transform.hpp"
#include "gvbps/k3_kkv.hpp"
#include "gvbps/products.hpp"
#include "gvbps/trunc_series.hpp"

using namespace gvbps;

static void BM_YauZaslow(benchmark::State& state) {
  const int h = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(yau_zaslow(h));
}
BENCHMARK(BM_YauZaslow)->Arg(20)->Arg(100)->Arg(400);

static void BM_KkvProduct(benchmark::State& state) {
  const int h = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kkv_product(h));
}
BENCHMARK(BM_KkvProduct)->Arg(8)->Arg(12)->Arg(20);

static void BM_KkvDecompose(benchmark::State& state) {
  const auto b = kkv_product(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kkv_decompose(b));
}
BENCHMARK(BM_KkvDecompose)->Arg(8)->Arg(12)->Arg(20);

static void BM_SeriesMul(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const auto a = binom_pow(-7, Sign::Plus, order);
  const auto b = eta_power(-24, order);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_SeriesMul)->Arg(30)->Arg(200)->Arg(1000);

static void BM_SeriesInverse(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const auto a = eta_power(24, order);
  for (auto _ : state) benchmark::DoNotOptimize(series_inverse(a, order));
}
BENCHMARK(BM_SeriesInverse)->Arg(30)->Arg(200);

static void BM_BpsRoundTrip(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  BpsVector v(g);
  for (int r = 0; r <= g; ++r) v[r] = r % 2 == 0 ? r + 1 : -r;
  for (auto _ : state) {
    const auto z = bps_recompose(v, g + 10);
    benchmark::DoNotOptimize(bps_decompose(z));
  }
}
BENCHMARK(BM_BpsRoundTrip)->Arg(2)->Arg(12)->Arg(40);

static void BM_SignedCheck(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(signed_conversion_check(6, 30));
}
BENCHMARK(BM_SignedCheck);

BENCHMARK_MAIN();
