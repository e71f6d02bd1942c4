#include <benchmark/benchmark.h>

#include "torsion/exactpoly/algorithms.hpp"
#include "torsion/exactpoly/mpoly.hpp"
#include "torsion/intersect14/intersect14.hpp"

using namespace torsion;

static void BM_MPolyMul(benchmark::State& state) {
  // (1 + x + b2 + b4 + b6)^k squared
  const MPoly base = MPoly::parse("1 + x + b2 + 2*b4 + 3*b6");
  MPoly p(1L);
  for (int i = 0; i < state.range(0); ++i) p = p * base;
  for (auto _ : state) benchmark::DoNotOptimize(p * p);
  state.counters["terms"] = static_cast<double>(p.size());
}
BENCHMARK(BM_MPolyMul)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_SqrtExact(benchmark::State& state) {
  const MPoly base = MPoly::parse("x^3 + b2*x^2 + b4*x + b6 + 1/3");
  MPoly p(1L);
  for (int i = 0; i < state.range(0); ++i) p = p * base;
  const MPoly sq = p * p;
  for (auto _ : state) benchmark::DoNotOptimize(sqrt_exact(sq));
}
BENCHMARK(BM_SqrtExact)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_ResultantBareiss(benchmark::State& state) {
  const auto& r = symbolic_stage().remainder;
  for (auto _ : state) benchmark::DoNotOptimize(resultant(r.C0, r.C1, Sym::v));
}
BENCHMARK(BM_ResultantBareiss)->Unit(benchmark::kMillisecond)->Iterations(3);

static void BM_ResultantSubresultant(benchmark::State& state) {
  const auto& r = symbolic_stage().remainder;
  for (auto _ : state) benchmark::DoNotOptimize(resultant_subresultant(r.C0, r.C1, Sym::v));
}
BENCHMARK(BM_ResultantSubresultant)->Unit(benchmark::kMillisecond)->Iterations(3);
