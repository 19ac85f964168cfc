#include <benchmark/benchmark.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "permutope/permutope.hpp"

using namespace permutope;

namespace {

Permutation shuffled(std::size_t n, unsigned seed) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::mt19937_64 rng(seed);
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(v);
}

void BM_CoccCounts(benchmark::State& state) {
  const auto sigma = shuffled(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(cocc_counts(4, sigma));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CoccCounts)->RangeMultiplier(10)->Range(100, 100000)->Complexity();

void BM_OccCounts(benchmark::State& state) {
  const auto sigma = shuffled(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(occ_counts(3, sigma));
}
BENCHMARK(BM_OccCounts)->Arg(10)->Arg(20)->Arg(30);

void BM_SimpleCyclesOV4(benchmark::State& state) {
  const auto ov = build_overlap_graph(4);
  for (auto _ : state) benchmark::DoNotOptimize(simple_cycles(ov.graph).size());
}
BENCHMARK(BM_SimpleCyclesOV4)->Unit(benchmark::kMillisecond);

void BM_PermutationOfWalk(benchmark::State& state) {
  const auto ov = build_overlap_graph(4);
  const auto sigma = shuffled(static_cast<std::size_t>(state.range(0)), 3);
  const Walk w = walk_of(ov, sigma);
  for (auto _ : state) benchmark::DoNotOptimize(permutation_of_walk(ov, w));
}
BENCHMARK(BM_PermutationOfWalk)->RangeMultiplier(10)->Range(100, 100000);

void BM_RealizeUniform(benchmark::State& state) {
  const FeasibleRegion region(3);
  const auto plan = plan_realization(region, PatternVector::uniform(3));
  for (auto _ : state) benchmark::DoNotOptimize(plan.generate(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_RealizeUniform)->RangeMultiplier(10)->Range(10, 10000);

}  // namespace
BENCHMARK_MAIN();
