#include <benchmark/benchmark.h>

#include "mixknap/generator.hpp"
#include "mixknap/heuristic.hpp"
#include "mixknap/knapsack.hpp"
#include "mixknap/separation.hpp"
#include "mixknap/structured.hpp"

namespace {

using namespace mixknap;

Instance cardinality_instance(int n, long p, std::uint64_t seed) {
  SplitMix64 rng(seed);
  RatVector h, a(n, Rat(1));
  for (int j = 0; j < n; ++j) h.emplace_back(static_cast<long>(rng.below(1000)));
  std::sort(h.begin(), h.end(), std::greater<Rat>());
  if (h[0] == 0) h[0] = 1;
  return Instance::canonicalize(std::move(h), std::move(a), Rat(p));
}

SeparationQuery fractional_query(const Instance& inst, std::uint64_t seed) {
  SplitMix64 rng(seed);
  SeparationQuery q;
  q.y_star = 0;
  for (int j = 0; j < inst.n(); ++j)
    q.z_star.emplace_back(static_cast<long>(rng.below(5)), 4);
  return q;
}

void BM_StructuredAll(benchmark::State& state) {
  const int n = 2000;
  const long p = state.range(0);
  Instance inst = cardinality_instance(n, p, 7);
  SeparationQuery query = fractional_query(inst, 11);
  for (auto _ : state) {
    StructuredAllResult result = separate_structured_all(inst, query);
    benchmark::DoNotOptimize(result.result.violation);
  }
  state.SetComplexityN(p);
}
BENCHMARK(BM_StructuredAll)->Arg(25)->Arg(50)->Arg(100)->Complexity();

void BM_ExactSeparation(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Instance inst = cardinality_instance(n, (6 * n) / 10, 3);
  SeparationQuery query = fractional_query(inst, 5);
  for (auto _ : state) {
    SeparationResult result = separate_exact(inst, query);
    benchmark::DoNotOptimize(result.lp_value);
  }
}
BENCHMARK(BM_ExactSeparation)->Arg(6)->Arg(8)->Arg(10);

void BM_KnapsackKernel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  SplitMix64 rng(13);
  RatVector h, a;
  long total = 0;
  for (int j = 0; j < n; ++j) {
    long w = 1 + static_cast<long>(rng.below(20));
    total += w;
    a.emplace_back(w);
    h.emplace_back(static_cast<long>(rng.below(100)));
  }
  std::sort(h.begin(), h.end(), std::greater<Rat>());
  if (h[0] == 0) h[0] = 1;
  Instance inst = Instance::canonicalize(h, a, Rat(total / 2));
  RatVector alpha;
  for (int j = 0; j < n; ++j)
    alpha.emplace_back(static_cast<long>(rng.below(21)) - 10);
  for (auto _ : state) {
    FkResult fk = minimize_fk(KnapRestriction::at(inst, 0), alpha);
    benchmark::DoNotOptimize(fk.value);
  }
}
BENCHMARK(BM_KnapsackKernel)->Arg(12)->Arg(20)->Arg(40);

void BM_HeuristicTheta(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Instance inst = cardinality_instance(n, (6 * n) / 10, 17);
  SeparationQuery query = fractional_query(inst, 19);
  for (auto _ : state) {
    SeparationResult result =
        separate_heuristic_auto(inst, query, default_box(inst), 4);
    benchmark::DoNotOptimize(result.lp_value);
  }
}
BENCHMARK(BM_HeuristicTheta)->Arg(6)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
