#include <benchmark/benchmark.h>

#include "monocone/catalog.hpp"
#include "monocone/cone.hpp"
#include "monocone/entropy.hpp"
#include "monocone/monotonicity.hpp"
#include "monocone/orbits.hpp"
#include "monocone/symmetric.hpp"
#include "monocone/witness.hpp"

using namespace monocone;

static void BM_LowerSets(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_lower_sets_recursive(1, n));
}
BENCHMARK(BM_LowerSets)->DenseRange(3, 6);

static void BM_LowerSetsBruteForce(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_lower_sets_brute_force(1, n));
}
BENCHMARK(BM_LowerSetsBruteForce)->DenseRange(3, 5);

static void BM_MonotoneRays(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto h = monotonicity_cone(SystemSet::full(n));
  DDOptions o;
  o.adjacency = state.range(1) ? AdjacencyTest::Algebraic : AdjacencyTest::Combinatorial;
  for (auto _ : state) benchmark::DoNotOptimize(dd_convert(h, o));
}
BENCHMARK(BM_MonotoneRays)->Args({3, 0})->Args({4, 0})->Args({4, 1})->Unit(benchmark::kMillisecond);

static void BM_SymmetricCone(benchmark::State& state) {
  auto h = symmetric_facets(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dd_convert(h));
}
BENCHMARK(BM_SymmetricCone)->Arg(10)->Arg(30);

static void BM_CheckMonotone(benchmark::State& state) {
  auto zy = zhang_yeung4();
  for (auto _ : state) benchmark::DoNotOptimize(check_monotone(zy, {1, 2, 3, 4}));
}
BENCHMARK(BM_CheckMonotone);

static void BM_Decompose(benchmark::State& state) {
  auto u = u_monotone4();
  for (auto _ : state) benchmark::DoNotOptimize(decompose_monotone(u, 1));
}
BENCHMARK(BM_Decompose);

static void BM_EntropyVector(benchmark::State& state) {
  auto d = facet_witness_distribution(facet_lower_sets(1, 4)[static_cast<std::size_t>(state.range(0))]);
  for (auto _ : state) benchmark::DoNotOptimize(shannon_entropy_vector(d));
  state.counters["atoms"] = static_cast<double>(d.atoms.size());
}
BENCHMARK(BM_EntropyVector)->Arg(0)->Arg(9)->Arg(17);

static void BM_CanonicalRepresentative(benchmark::State& state) {
  auto u = u_monotone4().extended(5);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_representative(u));
}
BENCHMARK(BM_CanonicalRepresentative);

BENCHMARK_MAIN();
