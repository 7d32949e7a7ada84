#include "supersdet/grassmann.hpp"
#include "supersdet/linearized_action.hpp"
#include "supersdet/multiplicative_sequence.hpp"
#include "supersdet/susy_sections.hpp"

#include <benchmark/benchmark.h>

using namespace supersdet;

static void BM_GrassmannProduct(benchmark::State& state) {
  auto m = static_cast<int>(state.range(0));
  GrassmannElement a(1);
  GrassmannElement b(1);
  for (int j = 1; j <= m; ++j) {
    auto psi = GrassmannElement::odd("psi_" + std::to_string(j));
    a = a * (GrassmannElement(1) + psi * GrassmannElement::even("x"));
    b = b + psi * GrassmannElement(j);
  }
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_GrassmannProduct)->Arg(4)->Arg(8)->Arg(10);

static void BM_LinearizedAction(benchmark::State& state) {
  auto n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(expand_linearized_action(n));
}
BENCHMARK(BM_LinearizedAction)->DenseRange(1, 3);

static void BM_LPolynomials(benchmark::State& state) {
  auto K = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(l_polynomials(K));
}
BENCHMARK(BM_LPolynomials)->DenseRange(2, 8, 2);

static void BM_ApplyQ(benchmark::State& state) {
  SectionSampler sm{static_cast<int>(state.range(0)), 2, 11};
  Section s(sm.n);
  for (int k = 0; k <= sm.n; ++k) s += Section::term(Rational(k, 2), sm.random_form(k, static_cast<std::uint64_t>(k)));
  for (auto _ : state) benchmark::DoNotOptimize(apply_Q(s));
}
BENCHMARK(BM_ApplyQ)->DenseRange(2, 5);
