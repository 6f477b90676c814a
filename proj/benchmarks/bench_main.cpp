#include <benchmark/benchmark.h>

#include "cdalg/identity_lab.hpp"
#include "cdalg/oracle.hpp"
#include "cdalg/random.hpp"
#include "cdalg/solvers.hpp"
#include "cdalg/structure_table.hpp"

using namespace cdalg;

static void BM_DoublingMultiplyExact(benchmark::State& state) {
  const auto level = static_cast<unsigned>(state.range(0));
  ElementSampler s(1);
  const ExactElement a = s.exact(level), b = s.exact(level);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_DoublingMultiplyExact)->DenseRange(2, 7);

static void BM_TableMultiplyExact(benchmark::State& state) {
  const auto level = static_cast<unsigned>(state.range(0));
  ElementSampler s(1);
  const ExactElement a = s.exact(level), b = s.exact(level);
  structure_table(level);
  for (auto _ : state) benchmark::DoNotOptimize(table_multiply(a, b));
}
BENCHMARK(BM_TableMultiplyExact)->DenseRange(2, 7);

static void BM_DoublingMultiplyFloat(benchmark::State& state) {
  const auto level = static_cast<unsigned>(state.range(0));
  ElementSampler s(1);
  const FloatElement a = s.real_valued(level), b = s.real_valued(level);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_DoublingMultiplyFloat)->DenseRange(2, 10);

static void BM_OracleSolveSim(benchmark::State& state) {
  const auto level = static_cast<unsigned>(state.range(0));
  ElementSampler s(2);
  const ExactElement a = s.exact(level);
  const ExactElement p = s.exact_nonzero(level);
  const ExactElement b = level <= 3 ? (p * a) * inverse(p) : a;
  for (auto _ : state) benchmark::DoNotOptimize(oracle_solve_sim(a, b));
}
BENCHMARK(BM_OracleSolveSim)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_SolveSim(benchmark::State& state) {
  const auto level = static_cast<unsigned>(state.range(0));
  ElementSampler s(3);
  const ExactElement a = s.exact(level);
  const ExactElement p = s.exact_nonzero(level);
  const ExactElement b = (p * a) * inverse(p);
  for (auto _ : state) benchmark::DoNotOptimize(solve_sim(a, b));
}
BENCHMARK(BM_SolveSim)->DenseRange(2, 3)->Unit(benchmark::kMicrosecond);

static void BM_ScanLevel(benchmark::State& state) {
  const auto level = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(scan_level(level, 100, 7));
}
BENCHMARK(BM_ScanLevel)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_ZeroDivisorSearch(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(zero_divisor_search(4, 0, 1));
}
BENCHMARK(BM_ZeroDivisorSearch)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
