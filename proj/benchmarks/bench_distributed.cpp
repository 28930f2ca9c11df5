#include "distop/alignment.hpp"
#include "distop/datasets.hpp"
#include "distop/distributed.hpp"
#include "distop/reconstruction.hpp"

#include <benchmark/benchmark.h>

using namespace distop;

namespace {

void BM_DistributedRips(benchmark::State& state) {
  const PointCloud c = noisy_circle_points(180, 20, 1);
  const SubsetCollection s = sample_subsets(c.size(), 10, static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(compute_distributed(c, s, InvariantKind::RP, 2));
}
BENCHMARK(BM_DistributedRips)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);

void BM_EulerReconstruction(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const PointCloud c = disc_points(n, 3);
  const SubsetCollection s = closure_completion(SubsetCollection(n, enumerate_subsets(n, 6)), 6, 2);
  const auto inv = compute_distributed(c, s, InvariantKind::RE, 2);
  for (auto _ : state) benchmark::DoNotOptimize(euler_reconstruct_pairs(inv));
}
BENCHMARK(BM_EulerReconstruction)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_SubsetLossGradient(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const PointCloud x = circle_points(k, 1.0);
  const PointCloud y = add_gaussian_noise(x, 0.1, 4);
  for (auto _ : state) benchmark::DoNotOptimize(subset_loss_gradient(x, y));
}
BENCHMARK(BM_SubsetLossGradient)->Arg(10)->Arg(25);

}  // namespace

BENCHMARK_MAIN();
