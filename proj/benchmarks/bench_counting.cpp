#include <benchmark/benchmark.h>

#include "peaklab/fast_count.hpp"
#include "peaklab/maximality.hpp"
#include "peaklab/permutation_oracle.hpp"

namespace {

using peaklab::Composition;

void BM_CountFast(benchmark::State& state) {
  const int ell = static_cast<int>(state.range(0));
  const auto c = Composition::repeat(3, ell) + Composition{2};
  for (auto _ : state) benchmark::DoNotOptimize(peaklab::count_fast(c));
  state.SetLabel("n=" + std::to_string(c.total()));
}
BENCHMARK(BM_CountFast)->DenseRange(2, 12, 2);

void BM_CountViaWords(benchmark::State& state) {
  const auto c = Composition::repeat(3, static_cast<int>(state.range(0))) + Composition{2};
  for (auto _ : state) benchmark::DoNotOptimize(peaklab::count_via_words(c));
}
BENCHMARK(BM_CountViaWords)->DenseRange(2, 5);

void BM_Beta(benchmark::State& state) {
  std::string w;
  for (int i = 0; i < state.range(0); ++i) w += i % 2 ? '-' : '+';
  const auto word = peaklab::SignWord::parse(w);
  for (auto _ : state) benchmark::DoNotOptimize(peaklab::beta(word));
}
BENCHMARK(BM_Beta)->RangeMultiplier(2)->Range(8, 128);

void BM_Oracle(benchmark::State& state) {
  const auto c = Composition::repeat(3, static_cast<int>(state.range(0)) - 1) + Composition{2};
  for (auto _ : state) benchmark::DoNotOptimize(peaklab::count_bruteforce(c));
}
BENCHMARK(BM_Oracle)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

void BM_ExactMaximal(benchmark::State& state) {
  peaklab::SearchOptions options;
  options.use_pruning = state.range(1) != 0;
  options.oracle_cross_check_max = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(peaklab::exact_maximal(static_cast<int>(state.range(0)), options));
  }
}
BENCHMARK(BM_ExactMaximal)
    ->ArgsProduct({{12, 16, 20}, {0, 1}})
    ->ArgNames({"n", "prune"})
    ->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
