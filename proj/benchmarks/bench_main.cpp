#include <benchmark/benchmark.h>

#include "coxlat/rootsys.hpp"

using namespace coxlat;

static void BM_RootTableB3(benchmark::State& state) {
  auto sys = CoxeterSystem::type_b(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(RootTable::generate(sys, 12));
  }
}
BENCHMARK(BM_RootTableB3);

static void BM_RootTableAffine(benchmark::State& state) {
  auto sys = CoxeterSystem::dihedral_infinite();
  for (auto _ : state) {
    benchmark::DoNotOptimize(RootTable::generate(sys, (int)state.range(0)));
  }
}
BENCHMARK(BM_RootTableAffine)->Arg(10)->Arg(40);

BENCHMARK_MAIN();
