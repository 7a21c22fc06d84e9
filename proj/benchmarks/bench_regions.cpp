#include <benchmark/benchmark.h>

#include "cquant/oracle.hpp"
#include "cquant/quantile.hpp"
#include "generators.hpp"

namespace {

using namespace cquant;

DataCloud planar_cloud(std::size_t n) {
  testing::InstanceRng rng(n);
  return rng.cloud(n, 2, 20, 3);
}

QuantileLevel middle_level(std::size_t n) {
  // 1/3 keeps Np off the integers for every n not divisible by 3.
  return QuantileLevel(Rational(1, 3) + Rational(1, static_cast<long>(7 * n)), n);
}

void BM_TukeyRegion2D(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const DataCloud x = planar_cloud(n);
  const QuantileLevel level = middle_level(n);
  for (auto _ : state) benchmark::DoNotOptimize(tukey_region(x, level));
}
BENCHMARK(BM_TukeyRegion2D)->DenseRange(5, 40, 5)->Unit(benchmark::kMillisecond);

void BM_Oracle2D(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const DataCloud x = planar_cloud(n);
  const QuantileLevel level = middle_level(n);
  for (auto _ : state) benchmark::DoNotOptimize(oracle_region_2d(x, level, ZeroCone{}));
}
BENCHMARK(BM_Oracle2D)->DenseRange(5, 40, 5)->Unit(benchmark::kMillisecond);

void BM_OrthantRegion3D(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  testing::InstanceRng rng(n);
  const DataCloud x = rng.cloud(n, 3, 20, 1);
  const QuantileLevel level = middle_level(n);
  for (auto _ : state) benchmark::DoNotOptimize(quantile_region(x, level, Cone::orthant(3)));
}
BENCHMARK(BM_OrthantRegion3D)->DenseRange(4, 16, 4)->Unit(benchmark::kMillisecond);

}  // namespace
