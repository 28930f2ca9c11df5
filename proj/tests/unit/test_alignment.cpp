#include "distop/alignment.hpp"
#include "distop/datasets.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace distop;

namespace {

// Loss from the explicit boundary reduction and brute-force matchings.
double oracle_loss(const PointCloud& x, const PointCloud& y) {
  const auto dx = compute_persistence(rips_filtration(pairwise_distances(x), 2)).diagram;
  const auto dy = compute_persistence(rips_filtration(pairwise_distances(y), 2)).diagram;
  double total = 0.0;
  for (int q = 0; q < 2; ++q) {
    const auto a = dx.points(q), b = dy.points(q);
    total += oracle::brute_matching_cost({a.begin(), a.end()}, {b.begin(), b.end()}, 2.0);
  }
  return total;
}

}  // namespace

TEST_CASE("subset loss matches the brute-force oracle") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const PointCloud x = oracle::random_cloud(6, 2, rng);
    const PointCloud y = oracle::random_cloud(6, 2, rng);
    CHECK(subset_loss(x, y).loss == doctest::Approx(oracle_loss(x, y)).epsilon(1e-10));
  }
  const PointCloud x = oracle::random_cloud(6, 2, rng);
  CHECK(subset_loss(x, x).loss == 0.0);
}

TEST_CASE("gradient matches central finite differences") {
  std::mt19937_64 rng(19);
  const double h = 1e-5;
  int checked = 0;
  for (int trial = 0; trial < 60 && checked < 20; ++trial) {
    const PointCloud x = oracle::random_cloud(6, 2, rng);
    const PointCloud y = oracle::random_cloud(6, 2, rng);
    const LossGradient g = subset_loss_gradient(x, y);
    if (g.min_edge_gap < 1e-3) continue;  // near a non-differentiable configuration
    std::vector<double> fd(g.gradient.size());
    bool smooth = true;
    for (std::size_t c = 0; c < fd.size(); ++c) {
      std::vector<double> plus(y.coords().begin(), y.coords().end()), minus = plus;
      plus[c] += h;
      minus[c] -= h;
      const double lp = subset_loss(x, PointCloud(2, plus)).loss;
      const double lm = subset_loss(x, PointCloud(2, minus)).loss;
      fd[c] = (lp - lm) / (2 * h);
      // A matching switch inside the stencil shows up as a one-sided kink.
      const double one_sided = (lp - g.loss) / h;
      if (std::abs(one_sided - fd[c]) > 1e-3 * (1 + std::abs(fd[c]))) smooth = false;
    }
    if (!smooth) continue;
    double num = 0.0, den = 0.0;
    for (std::size_t c = 0; c < fd.size(); ++c) {
      num += (fd[c] - g.gradient[c]) * (fd[c] - g.gradient[c]);
      den += fd[c] * fd[c];
    }
    CHECK(std::sqrt(num) <= 1e-4 * std::max(1.0, std::sqrt(den)));
    ++checked;
  }
  CHECK(checked >= 10);
}

TEST_CASE("Adam step follows the closed form") {
  AdamState s(2);
  std::vector<double> x{1.0, -2.0};
  const std::vector<double> g{0.5, -3.0};
  adam_step(s, x, g);
  // First bias-corrected step moves every coordinate by lr * sign(g).
  CHECK(x[0] == doctest::Approx(1.0 - 1e-2).epsilon(1e-9));
  CHECK(x[1] == doctest::Approx(-2.0 + 1e-2).epsilon(1e-9));

  const double x1 = 1.0 - 1e-2 * 0.5 / (0.5 + 1e-8);
  CHECK(x[0] == doctest::Approx(x1).epsilon(1e-14));
  const std::vector<double> g2{1.0, 0.0};
  adam_step(s, x, g2);
  const double m = 0.9 * 0.05 + 0.1 * 1.0, v = 0.999 * 0.00025 + 0.001 * 1.0;
  const double expect = x1 - 1e-2 * (m / (1 - 0.81)) / (std::sqrt(v / (1 - 0.999 * 0.999)) + 1e-8);
  CHECK(x[0] == doctest::Approx(expect).epsilon(1e-12));
  CHECK(s.step_count == 2);
}

TEST_CASE("sparse Adam leaves inactive coordinates alone") {
  AdamState s(4);
  std::vector<double> x{0, 0, 0, 0};
  const std::vector<double> g{1, 1, 1, 1};
  const std::vector<std::size_t> active{1, 3};
  adam_step_sparse(s, x, g, active);
  CHECK(x[0] == 0.0);
  CHECK(x[2] == 0.0);
  CHECK(x[1] < 0.0);
  CHECK(s.first_moment[0] == 0.0);
  CHECK(s.second_moment[2] == 0.0);
  CHECK(s.step_count == 1);
}

TEST_CASE("alignment is deterministic and reduces distortion") {
  const PointCloud x = circle_points(30, 1.0);
  const PointCloud y0 = add_gaussian_noise(x, 0.1, 3);
  AlignConfig cfg;
  cfg.k = 8;
  cfg.iterations = 600;
  cfg.snapshot_every = 200;
  cfg.seed = 5;
  const AlignResult a = align(x, y0, cfg);
  const AlignResult b = align(x, y0, cfg);
  CHECK(a.final_cloud.coords().size() == b.final_cloud.coords().size());
  CHECK(std::equal(a.final_cloud.coords().begin(), a.final_cloud.coords().end(), b.final_cloud.coords().begin()));
  CHECK(a.loss_history == b.loss_history);
  REQUIRE(a.snapshots.size() == 4);
  CHECK(a.snapshots.front().iteration == 0);
  CHECK(a.snapshots.back().iteration == 600);
  const auto id = Bijection::identity(30);
  const auto dx = pairwise_distances(x);
  CHECK(mean_pairwise_distortion(dx, pairwise_distances(a.final_cloud), id) <
        0.5 * mean_pairwise_distortion(dx, pairwise_distances(y0), id));
}

TEST_CASE("alignment rejects bad shapes") {
  const PointCloud x = circle_points(10, 1.0);
  AlignConfig cfg;
  cfg.k = 11;
  CHECK_THROWS_AS(align(x, x, cfg), DomainError);
  cfg.k = 4;
  CHECK_THROWS_AS(align(x, circle_points(9, 1.0), cfg), DomainError);
}
