#include "distop/metrics.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace distop;

namespace {

std::vector<PersistencePair> diagram(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0, 1), len(0, 0.5);
  std::vector<PersistencePair> out(n);
  for (auto& p : out) {
    p.birth = u(rng);
    p.death = p.birth + len(rng);
  }
  return out;
}

void BM_Bottleneck(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = diagram(n, 1), b = diagram(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(bottleneck(a, b));
}
BENCHMARK(BM_Bottleneck)->Arg(10)->Arg(50)->Arg(200);

void BM_Wasserstein2(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = diagram(n, 1), b = diagram(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(wasserstein(a, b, 2.0));
}
BENCHMARK(BM_Wasserstein2)->Arg(10)->Arg(50)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
