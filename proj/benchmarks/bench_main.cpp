#include <benchmark/benchmark.h>

#include "eqbasis/basis.hpp"
#include "eqbasis/core_math.hpp"
#include "eqbasis/families.hpp"
#include "eqbasis/search.hpp"

namespace {

void BM_Synthesize(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto theta = eqb::random_phases(d, 42, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eqb::synthesize_coefficients(theta));
  }
}
BENCHMARK(BM_Synthesize)->RangeMultiplier(2)->Range(2, 64);

void BM_GramCheck(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto a = eqb::synthesize_coefficients(eqb::random_phases(d, 42, 0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(eqb::gram_check(a));
  }
  state.SetComplexityN(d);
}
BENCHMARK(BM_GramCheck)->DenseRange(2, 10, 2)->Complexity();

void BM_StateEntanglement(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto a = eqb::synthesize_coefficients(eqb::random_phases(d, 42, 0));
  const auto s = eqb::build_state(a, {1, 2 % d});
  for (auto _ : state) {
    benchmark::DoNotOptimize(eqb::state_entanglement(s));
  }
}
BENCHMARK(BM_StateEntanglement)->RangeMultiplier(2)->Range(4, 64);

// Full default-config search; one worker so timings are comparable.
void BM_Search(benchmark::State& state) {
  eqb::SearchConfig cfg;
  cfg.d = static_cast<int>(state.range(0));
  cfg.rng_seed = 1;
  cfg.workers = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(eqb::alternating_projection_search(cfg));
  }
}
BENCHMARK(BM_Search)->DenseRange(2, 12, 1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
