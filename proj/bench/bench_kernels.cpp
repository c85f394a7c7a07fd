#include <benchmark/benchmark.h>

#include "fockparse/kernels.hpp"

using namespace fockparse;

static void BM_Theorem(benchmark::State& state, Execution exec) {
  const auto cases = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    TheoremReport r = check_representation_theorem(42, cases, exec);
    benchmark::DoNotOptimize(r.passed);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK_CAPTURE(BM_Theorem, serial, Execution::serial)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Theorem, parallel, Execution::parallel)->Arg(1000)->Unit(benchmark::kMillisecond);

static void BM_Equivalence(benchmark::State& state, Execution exec) {
  const auto corpus = equivalence_corpus(2024, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    EquivalenceReport r = check_weak_equivalence(corpus, 8, exec);
    benchmark::DoNotOptimize(r.mismatches.size());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK_CAPTURE(BM_Equivalence, serial, Execution::serial)->Arg(50)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Equivalence, parallel, Execution::parallel)->Arg(50)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
