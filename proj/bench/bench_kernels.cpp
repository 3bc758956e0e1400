// Serial reference vs OpenMP kernel for the three hot paths. Pass
// --benchmark_filter to narrow; PERMFIX_THREADS sets the parallel width.

#include <benchmark/benchmark.h>

#include "permfix/moments.hpp"
#include "permfix/parallel.hpp"
#include "permfix/simulate.hpp"

namespace {

using namespace permfix;

const SimulationModel kWalk{SimulationModel::Kind::kWalk, 200, std::nullopt, 2, 600};

void BM_SimulateWalkSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(simulate_fixed_points_serial(kWalk, 1 << 17, 1));
  state.SetItemsProcessed(state.iterations() * (1 << 17));
}

void BM_SimulateWalkParallel(benchmark::State& state) {
  set_thread_count(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(simulate_fixed_points(kWalk, 1 << 17, 1));
  state.SetItemsProcessed(state.iterations() * (1 << 17));
}

void BM_EnumerateCommutatorSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_commutator_distribution_serial(6, std::nullopt));
}

void BM_EnumerateCommutatorParallel(benchmark::State& state) {
  set_thread_count(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_commutator_distribution(6, std::nullopt));
}

void BM_WalkMomentsSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::uint64_t k = cutoff_steps(n, 2, 0);
  for (auto _ : state) benchmark::DoNotOptimize(walk_moments_serial(n, 2, k, 8, 256));
}

void BM_WalkMomentsParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  set_thread_count(static_cast<int>(state.range(1)));
  const std::uint64_t k = cutoff_steps(n, 2, 0);
  for (auto _ : state) benchmark::DoNotOptimize(walk_moments(n, 2, k, 8, 256));
}

}  // namespace

BENCHMARK(BM_SimulateWalkSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SimulateWalkParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_EnumerateCommutatorSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_EnumerateCommutatorParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_WalkMomentsSerial)->Arg(2000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_WalkMomentsParallel)->Args({2000, 1})->Args({2000, 2})->Args({2000, 4})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
