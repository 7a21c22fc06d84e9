#include <benchmark/benchmark.h>

#include "cquant/lp.hpp"
#include "cquant/univariate.hpp"
#include "generators.hpp"

namespace {

using namespace cquant;

void BM_GreedyScalarization(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  testing::InstanceRng rng(1);
  const DataCloud x = rng.cloud(n, 3, 50, 7);
  const QuantileLevel level(rng.level(n), n);
  const Vector w = rng.vector(3, 5, 3);
  for (auto _ : state) benchmark::DoNotOptimize(solve_scalarized_lp(x, level, w));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GreedyScalarization)->RangeMultiplier(4)->Range(16, 4096)->Complexity(benchmark::oNLogN);

void BM_SimplexScalarization(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  testing::InstanceRng rng(1);
  const DataCloud x = rng.cloud(n, 3, 50, 7);
  const QuantileLevel level(rng.level(n), n);
  const LinearProgram lp = build_lp(x, level, rng.vector(3, 5, 3));
  for (auto _ : state) benchmark::DoNotOptimize(simplex_solve(lp));
}
BENCHMARK(BM_SimplexScalarization)->RangeMultiplier(2)->Range(8, 64);

}  // namespace
