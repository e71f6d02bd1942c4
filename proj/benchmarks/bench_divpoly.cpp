#include <benchmark/benchmark.h>

#include "torsion/divpoly/divpoly.hpp"

using namespace torsion;

// fresh uncached table each iteration, so the whole recurrence is timed
static void BM_PsiShort(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    DivPolyTable t(Model::short_form(), std::nullopt);
    benchmark::DoNotOptimize(t.psi(n));
  }
}
BENCHMARK(BM_PsiShort)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_PsiGeneric(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    DivPolyTable t(Model::generic(), std::nullopt);
    benchmark::DoNotOptimize(t.psi(n));
  }
}
BENCHMARK(BM_PsiGeneric)->Arg(5)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);

static void BM_PrimitiveShort(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    DivPolyTable t(Model::short_form(), std::nullopt);
    benchmark::DoNotOptimize(t.F(n));
  }
}
BENCHMARK(BM_PrimitiveShort)->Arg(6)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);
