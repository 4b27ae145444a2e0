// Serial reference against the OpenMP kernels.

#include <benchmark/benchmark.h>

#include "flagmet/einstein.hpp"
#include "flagmet/parallel.hpp"

namespace {

using namespace flagmet;

const Rational& sweep_width() {
  static const Rational w = ten_to_minus(6);
  return w;
}

void BM_SweepSerial(benchmark::State& state) {
  const auto pairs = pairs_in_range(4, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sweep_serial(pairs, sweep_width()));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(pairs.size()));
}

void BM_SweepParallel(benchmark::State& state) {
  const auto pairs = pairs_in_range(4, state.range(0));
  const int jobs = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(sweep_parallel(pairs, sweep_width(), jobs));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(pairs.size()));
  state.counters["threads"] = resolve_jobs(jobs);
}

void BM_SampleSerial(benchmark::State& state) {
  const IntPolynomial H = build_H(FlagParams(20, 7));
  for (auto _ : state) benchmark::DoNotOptimize(sample_serial(H, Rational(0), Rational(3), state.range(0)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SampleParallel(benchmark::State& state) {
  const IntPolynomial H = build_H(FlagParams(20, 7));
  const int jobs = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(sample_parallel(H, Rational(0), Rational(3), state.range(0), jobs));
  state.SetItemsProcessed(state.iterations() * state.range(0));
  state.counters["threads"] = resolve_jobs(jobs);
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Arg(12)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Args({12, 0})->Args({20, 0})->Args({20, 2})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SampleSerial)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SampleParallel)->Args({10000, 0})->Args({10000, 2})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
