#include <benchmark/benchmark.h>

#include "srcolor/srcolor.hpp"

using namespace srcolor;

static void BM_TotalChern(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const auto k = full_simplex(n);
  for (auto _ : state) benchmark::DoNotOptimize(total_chern(k.vertex_table(), k.all_vertices()));
}
BENCHMARK(BM_TotalChern)->Arg(8)->Arg(12)->Arg(16);

static void BM_AlgebraicVerify(benchmark::State& state) {
  const auto& k = corpus_entry(state.range(0) == 0 ? "P2" : "T2").complex;
  const auto witness = chromatic_number(k, 2).witness;
  for (auto _ : state) benchmark::DoNotOptimize(verify_coloring_algebraically(k, witness, 2).verdict);
}
BENCHMARK(BM_AlgebraicVerify)->Arg(0)->Arg(1);

static void BM_ReusedVerifier(benchmark::State& state) {
  const auto k = cyclic_polytope(static_cast<std::uint32_t>(state.range(0)), 4);
  const AlgebraicVerifier v(k);
  const auto witness = chromatic_number(k, 2).witness;
  for (auto _ : state) benchmark::DoNotOptimize(v.holds(witness, 2));
}
BENCHMARK(BM_ReusedVerifier)->Arg(8)->Arg(10)->Arg(12);

static void BM_CrossCheckExhaustive(benchmark::State& state) {
  const auto& k = corpus_entry("C5").complex;
  for (auto _ : state) benchmark::DoNotOptimize(cross_check_exhaustive(k, 1, 3).colorings);
}
BENCHMARK(BM_CrossCheckExhaustive);
