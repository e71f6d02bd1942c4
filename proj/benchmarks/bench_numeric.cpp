#include <benchmark/benchmark.h>

#include "torsion/intersect14/intersect14.hpp"
#include "torsion/numroots/roots.hpp"

using namespace torsion;

static void BM_RootsP24(benchmark::State& state) {
  const MPoly p = reference_P24();
  const auto prec = static_cast<mpfr_prec_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(roots_univariate(p, prec));
}
BENCHMARK(BM_RootsP24)->Arg(128)->Arg(384)->Arg(1024)->Unit(benchmark::kMillisecond);

static void BM_Certificate(benchmark::State& state) {
  symbolic_stage();
  for (auto _ : state) benchmark::DoNotOptimize(build_certificate(0, 384));
}
BENCHMARK(BM_Certificate)->Unit(benchmark::kMillisecond);
