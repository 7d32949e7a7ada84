#include "supersdet/zeta_operators.hpp"

#include <benchmark/benchmark.h>

using namespace supersdet;

static void BM_SdetFormal(benchmark::State& state) {
  auto K = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sdet_formal(4, K));
}
BENCHMARK(BM_SdetFormal)->DenseRange(1, 6);

static void BM_SdetConcrete(benchmark::State& state) {
  auto R = corpus_curvature(4, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sdet_concrete(R, 2));
}
BENCHMARK(BM_SdetConcrete)->Arg(4)->Arg(6)->Arg(8);

static void BM_TraceModeSum(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(trace_mode_sum(BoundaryCondition::Periodic, 2, state.range(0), true));
}
BENCHMARK(BM_TraceModeSum)->Arg(1000)->Arg(100000);
