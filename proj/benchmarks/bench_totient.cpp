#include <benchmark/benchmark.h>

#include "torsion/totientlab/totientlab.hpp"

using namespace torsion;

static void BM_Sieve(benchmark::State& state) {
  const auto bound = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(TotientSieve(bound));
}
BENCHMARK(BM_Sieve)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);

static void BM_CollisionScan(benchmark::State& state) {
  const auto k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(collision_scan(k, 100000));
}
BENCHMARK(BM_CollisionScan)->Arg(1)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
