#include "distop/datasets.hpp"
#include "distop/persistence.hpp"

#include <benchmark/benchmark.h>


using namespace distop;

namespace {

PointCloud cloud(std::size_t n) { return noisy_circle_points(n * 9 / 10, n - n * 9 / 10, 1); }

void BM_BoundaryReductionRips(benchmark::State& state) {
  const auto d = pairwise_distances(cloud(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(compute_persistence(rips_filtration(d, 2)));
}
BENCHMARK(BM_BoundaryReductionRips)->Arg(10)->Arg(20)->Arg(40);

void BM_CohomologyRips(benchmark::State& state) {
  const auto d = pairwise_distances(cloud(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(rips_persistence(d, 1));
}
BENCHMARK(BM_CohomologyRips)->Arg(10)->Arg(40)->Arg(100)->Arg(200);

void BM_CechFiltration(benchmark::State& state) {
  const auto c = cloud(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cech_filtration(c, 2));
}
BENCHMARK(BM_CechFiltration)->Arg(10)->Arg(20);

void BM_EulerCurve(benchmark::State& state) {
  const auto k = rips_filtration(pairwise_distances(cloud(static_cast<std::size_t>(state.range(0)))), 2);
  for (auto _ : state) benchmark::DoNotOptimize(euler_curve(k));
}
BENCHMARK(BM_EulerCurve)->Arg(10)->Arg(40);

}  // namespace

BENCHMARK_MAIN();
