#include <benchmark/benchmark.h>

#include "defq/multivector.hpp"
#include "defq/random.hpp"

using namespace defq;

namespace {

void BM_SchoutenBivectors(benchmark::State& state) {
  Rng rng(1);
  const int n = static_cast<int>(state.range(0));
  auto p = random_multivector(rng, n, 2, 3, 12);
  auto q = random_multivector(rng, n, 2, 3, 12);
  for (auto _ : state) benchmark::DoNotOptimize(schouten(p, q));
}

void BM_SchoutenCoordinates(benchmark::State& state) {
  Rng rng(1);
  const int n = static_cast<int>(state.range(0));
  auto p = random_multivector(rng, n, 2, 3, 12);
  auto q = random_multivector(rng, n, 2, 3, 12);
  for (auto _ : state) benchmark::DoNotOptimize(schouten_bivector_bivector(p, q));
}

void BM_LinearPoissonSelfBracket(benchmark::State& state) {
  const auto p0 = linear_poisson(catalog("sl2_x_sl2"));
  for (auto _ : state) benchmark::DoNotOptimize(schouten(p0, p0));
}

}  // namespace

BENCHMARK(BM_SchoutenBivectors)->DenseRange(3, 6);
BENCHMARK(BM_SchoutenCoordinates)->DenseRange(3, 6);
BENCHMARK(BM_LinearPoissonSelfBracket);
