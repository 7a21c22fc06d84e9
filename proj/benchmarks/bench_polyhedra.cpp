#include <benchmark/benchmark.h>

#include "cquant/polyhedra.hpp"
#include "generators.hpp"

namespace {

using namespace cquant;

std::vector<Halfspace> random_polytope(std::size_t d, std::size_t extra) {
  testing::InstanceRng rng(d * 100 + extra);
  std::vector<Halfspace> h = rng.halfspaces(d, true);
  for (std::size_t i = 0; i < extra; ++i) h.push_back({rng.vector(d, 3, 1), rng.rational(2, 2) - 4});
  return h;
}

void BM_DoubleDescription(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const auto h = random_polytope(d, static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) {
    DoubleDescription dd(d);
    for (const auto& x : h) dd.add_inequality(x);
    benchmark::DoNotOptimize(dd.vrep());
  }
}
BENCHMARK(BM_DoubleDescription)->ArgsProduct({{2, 3, 4, 5}, {8, 16, 32}})->Unit(benchmark::kMillisecond);

void BM_RemoveRedundant(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const Polyhedron p = Polyhedron::from_hrep(d, HRep{random_polytope(d, 16), {}});
  for (auto _ : state) benchmark::DoNotOptimize(remove_redundant(p));
}
BENCHMARK(BM_RemoveRedundant)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

}  // namespace
