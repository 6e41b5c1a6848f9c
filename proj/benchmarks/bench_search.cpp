#include <benchmark/benchmark.h>

#include "srcolor/srcolor.hpp"

using namespace srcolor;

static void BM_ChromaticCorpus(benchmark::State& state) {
  const auto& k = corpus_entry("T2").complex;
  const int s = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(chromatic_number(k, s).colors);
}
BENCHMARK(BM_ChromaticCorpus)->Arg(1)->Arg(2);

static void BM_ChromaticCyclic(benchmark::State& state) {
  const auto k = cyclic_polytope(static_cast<std::uint32_t>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(chromatic_number(k, 2).colors);
}
BENCHMARK(BM_ChromaticCyclic)->DenseRange(6, 12, 2);

static void BM_ChromaticWorkers(benchmark::State& state) {
  const auto k = random_complex(22, 0.35, 5);
  SearchConfig cfg;
  cfg.workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(chromatic_number(k, 1, cfg).colors);
}
BENCHMARK(BM_ChromaticWorkers)->Arg(1)->Arg(2)->Arg(4)->UseRealTime();

static void BM_CountColorings(benchmark::State& state) {
  const auto& k = corpus_entry("T2").complex;
  for (auto _ : state)
    benchmark::DoNotOptimize(count_colorings(k, static_cast<std::uint32_t>(state.range(0)), 2, false));
}
BENCHMARK(BM_CountColorings)->Arg(3)->Arg(4);

static void BM_Flagification(benchmark::State& state) {
  const int s = static_cast<int>(state.range(0));
  const auto k = skeleton(random_complex(static_cast<std::uint32_t>(state.range(1)), 0.4, 9), s);
  for (auto _ : state) benchmark::DoNotOptimize(flagification(k, s).facets().size());
}
BENCHMARK(BM_Flagification)->Args({1, 16})->Args({1, 32})->Args({1, 48})->Args({2, 12})->Args({2, 16});

static void BM_MissingFaces(benchmark::State& state) {
  const auto k = cyclic_polytope(static_cast<std::uint32_t>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(missing_faces(k).size());
}
BENCHMARK(BM_MissingFaces)->Arg(10)->Arg(16)->Arg(24);
BENCHMARK_MAIN();
