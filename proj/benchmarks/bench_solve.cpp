// Microbenchmarks for the three hot entry points. Run the solver over a
// doubling ladder of path lengths so the complexity fit makes regressions
// away from linear time visible at a glance.

#include <benchmark/benchmark.h>

#include <cstdint>

#include "stackvc/bounds.hpp"
#include "stackvc/follower.hpp"
#include "stackvc/instance.hpp"
#include "stackvc/planner.hpp"
#include "stackvc/pricer.hpp"

namespace {

stackvc::PathInstance instance_of_size(std::int64_t n) {
  int size = static_cast<int>(n);
  int k = std::max(1, size / 5);
  return stackvc::generate_random(
      size, k, 100, stackvc::splitmix64(0xBE7C4ULL + static_cast<std::uint64_t>(n)));
}

void BM_Solve(benchmark::State& state) {
  stackvc::PathInstance inst = instance_of_size(state.range(0));
  for (auto _ : state) {
    stackvc::Solution sol = stackvc::solve(inst);
    benchmark::DoNotOptimize(sol);
  }
  state.SetComplexityN(state.range(0));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_BenchmarkBounds(benchmark::State& state) {
  stackvc::PathInstance inst = instance_of_size(state.range(0));
  for (auto _ : state) {
    stackvc::BenchmarkTable table = stackvc::benchmark_bounds(inst);
    benchmark::DoNotOptimize(table);
  }
  state.SetComplexityN(state.range(0));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_FollowerMinCover(benchmark::State& state) {
  stackvc::PathInstance inst = instance_of_size(state.range(0));
  stackvc::Solution sol = stackvc::solve(inst);
  stackvc::WeightedPath path = stackvc::with_prices(inst, sol.prices);
  for (auto _ : state) {
    stackvc::CoverResult cover = stackvc::min_cover(path);
    benchmark::DoNotOptimize(cover);
  }
  state.SetComplexityN(state.range(0));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

BENCHMARK(BM_Solve)->RangeMultiplier(2)->Range(1 << 13, 1 << 20)
    ->Complexity(benchmark::oN)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BenchmarkBounds)->RangeMultiplier(2)->Range(1 << 13, 1 << 20)
    ->Complexity(benchmark::oN)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FollowerMinCover)->RangeMultiplier(2)->Range(1 << 13, 1 << 20)
    ->Complexity(benchmark::oN)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
