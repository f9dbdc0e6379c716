#include <benchmark/benchmark.h>

#include "schubcomb/bijections.hpp"

using namespace schubcomb;

static void BM_CountAsm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_asm(n));
}
BENCHMARK(BM_CountAsm)->DenseRange(4, 8);

static void BM_EnumerateAsm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::uint64_t count = 0;
    enumerate_asm(n, [&](const Asm& a) { count += static_cast<std::uint64_t>(a.at(1, 1) + 1); });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateAsm)->DenseRange(4, 7);

static void BM_CountTriangles(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_triangles(n));
}
BENCHMARK(BM_CountTriangles)->DenseRange(4, 7);

static void BM_TraceAllPipeDreams(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::uint64_t reduced = 0;
    enumerate_pd(n, [&](const PipeDream& d) { reduced += is_reduced(d); });
    benchmark::DoNotOptimize(reduced);
  }
}
BENCHMARK(BM_TraceAllPipeDreams)->DenseRange(4, 6);

static void BM_Table1Row(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(table1_row(n));
}
BENCHMARK(BM_Table1Row)->DenseRange(4, 7);

static void BM_DroopPoset(benchmark::State& state) {
  const Permutation pi = Permutation::parse("146235");
  for (auto _ : state) benchmark::DoNotOptimize(droop_poset(pi).size());
}
BENCHMARK(BM_DroopPoset);

static void BM_BlockCorrespondence(benchmark::State& state) {
  const Permutation pi =
      Permutation::from_lehmer_code({6, 8, 9, 5, 4, 0, 2, 0, 1, 1, 0, 0});
  for (auto _ : state) benchmark::DoNotOptimize(block_correspondence(pi).droop.size());
}
BENCHMARK(BM_BlockCorrespondence);

static void BM_SchubertBothWays(benchmark::State& state) {
  const Permutation pi = Permutation::parse("15432");
  for (auto _ : state) {
    benchmark::DoNotOptimize(schubert_from_pd(pi) == schubert_from_bpd(pi));
  }
}
BENCHMARK(BM_SchubertBothWays);

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  benchmark::RunSpecifiedBenchmarks();
  return 0;
}
