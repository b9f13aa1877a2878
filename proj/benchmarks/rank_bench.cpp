#include <benchmark/benchmark.h>

#include "defq/cohomology.hpp"

using namespace defq;

namespace {

// dim H^2(g, S^l g): two slice ranks per call.
void BM_H2Slice(benchmark::State& state, const char* name) {
  const LieAlgebra g = catalog(name);
  const int l = static_cast<int>(state.range(0));
  CEComplex cx(g);
  for (auto _ : state) benchmark::DoNotOptimize(cx.cohomology_dim(2, l));
  state.counters["slice_dim"] = cx.slice(2, l).dim();
}

void BM_Table(benchmark::State& state) {
  const LieAlgebra g = catalog("gl2_x_k2");
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cohomology_table(g, {2}, {0, 1, 2, 3, 4}, jobs));
}

}  // namespace

BENCHMARK_CAPTURE(BM_H2Slice, sl2_x_sl2, "sl2_x_sl2")->DenseRange(0, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_H2Slice, t1_n56, "t1_n56")->DenseRange(0, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Table)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
