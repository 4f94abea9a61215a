#include <benchmark/benchmark.h>

#include "polarmap/chow.hpp"
#include "polarmap/differential.hpp"
#include "polarmap/elimination.hpp"
#include "polarmap/polar_geometry.hpp"
#include "polarmap/random.hpp"

namespace {

using namespace polarmap;

void BM_HessianDet(benchmark::State& state) {
  Sampler sampler(1);
  const TernaryForm f = sampler.form(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hessian_det(f));
}
BENCHMARK(BM_HessianDet)->DenseRange(3, 6);

void BM_Resultant(benchmark::State& state) {
  Sampler sampler(2);
  const int d = static_cast<int>(state.range(0));
  const TernaryForm a = sampler.form(d);
  const TernaryForm b = sampler.form(d);
  for (auto _ : state) benchmark::DoNotOptimize(resultant_elim(a, b, 2));
}
BENCHMARK(BM_Resultant)->DenseRange(2, 5);

void BM_FiberDegree(benchmark::State& state) {
  Sampler sampler(3);
  const TernaryForm f = sampler.form(static_cast<int>(state.range(0)));
  const ProjPoint q = sampler.point();
  for (auto _ : state) benchmark::DoNotOptimize(fiber_degree(f, q));
}
BENCHMARK(BM_FiberDegree)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

void BM_BranchDegree(benchmark::State& state) {
  Sampler sampler(4);
  const TernaryForm f = sampler.form(static_cast<int>(state.range(0)));
  const auto ell = sampler.line();
  for (auto _ : state) benchmark::DoNotOptimize(branch_degree_count(f, ell));
}
BENCHMARK(BM_BranchDegree)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

void BM_SteinerianSlices(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Sampler sampler(5);
    const TernaryForm f = sampler.form(d);
    benchmark::DoNotOptimize(steinerian_slice_counts(f, sampler));
  }
}
BENCHMARK(BM_SteinerianSlices)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

void BM_ChowClasses(benchmark::State& state) {
  for (auto _ : state) {
    for (int d = 3; d <= 10; ++d) {
      benchmark::DoNotOptimize(ramification_class(d));
      benchmark::DoNotOptimize(steinerian_class(d));
    }
  }
}
BENCHMARK(BM_ChowClasses);

}  // namespace

BENCHMARK_MAIN();
