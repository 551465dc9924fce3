#include "lincolor/lincolor.hpp"

#include <benchmark/benchmark.h>

using namespace lincolor;

static void BM_LinearColorCycle(benchmark::State& state) {
  const auto g = gen_cycle(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(linear_color(g).k);
}
BENCHMARK(BM_LinearColorCycle)->RangeMultiplier(4)->Range(8, 2048);

static void BM_LinearColorRandom(benchmark::State& state) {
  const auto g = gen_random(static_cast<std::size_t>(state.range(0)), 30, 42);
  for (auto _ : state) benchmark::DoNotOptimize(linear_color(g).k);
}
BENCHMARK(BM_LinearColorRandom)->RangeMultiplier(4)->Range(8, 512);

static void BM_BuildDag(benchmark::State& state) {
  const auto g = gen_strongly_chordal(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(build_dag(g).level.size());
}
BENCHMARK(BM_BuildDag)->RangeMultiplier(4)->Range(16, 1024);

static void BM_BruteLambda(benchmark::State& state) {
  const auto g = gen_random(static_cast<std::size_t>(state.range(0)), 50, 3);
  for (auto _ : state) benchmark::DoNotOptimize(brute_lambda(g));
}
BENCHMARK(BM_BruteLambda)->DenseRange(6, 10, 2);

static void BM_StrongOrdering(benchmark::State& state) {
  const auto g = gen_strongly_chordal(static_cast<std::size_t>(state.range(0)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(strong_elimination_ordering(g).sigma.size());
}
BENCHMARK(BM_StrongOrdering)->RangeMultiplier(2)->Range(8, 64);

static void BM_EnumerateGraphs(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_graphs(static_cast<std::size_t>(state.range(0))).size());
}
BENCHMARK(BM_EnumerateGraphs)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
