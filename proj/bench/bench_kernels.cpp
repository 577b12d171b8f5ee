#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "polmax/kernels.hpp"
#include "polmax/sweep.hpp"

namespace {

std::vector<double> random_probs(std::size_t n) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> p(n);
  double s = 0.0;
  for (auto& x : p) s += (x = u(rng));
  for (auto& x : p) x /= s;
  return p;
}

void BM_WeightedSquareSumSerial(benchmark::State& state) {
  const auto p = random_probs(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(polmax::kernels::weighted_square_sum_serial(p));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_WeightedSquareSumParallel(benchmark::State& state) {
  const auto p = random_probs(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(polmax::kernels::weighted_square_sum_parallel(p));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_RawMomentsSerial(benchmark::State& state) {
  const auto p = random_probs(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(polmax::kernels::raw_moments_serial(p));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_RawMomentsParallel(benchmark::State& state) {
  const auto p = random_probs(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(polmax::kernels::raw_moments_parallel(p));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SweepSerial(benchmark::State& state) {
  const auto grid = polmax::nbar_grid(0.0, static_cast<double>(state.range(0)), 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(polmax::sweep_serial(grid));
}

void BM_SweepParallel(benchmark::State& state) {
  const auto grid = polmax::nbar_grid(0.0, static_cast<double>(state.range(0)), 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(polmax::sweep_parallel(grid));
}

}  // namespace

BENCHMARK(BM_WeightedSquareSumSerial)->RangeMultiplier(16)->Range(1 << 10, 1 << 22);
BENCHMARK(BM_WeightedSquareSumParallel)->RangeMultiplier(16)->Range(1 << 10, 1 << 22);
BENCHMARK(BM_RawMomentsSerial)->RangeMultiplier(16)->Range(1 << 10, 1 << 22);
BENCHMARK(BM_RawMomentsParallel)->RangeMultiplier(16)->Range(1 << 10, 1 << 22);
BENCHMARK(BM_SweepSerial)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
