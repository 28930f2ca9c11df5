#pragma once

#include "distop/metrics.hpp"
#include "distop/persistence.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace distop {

struct AdamState {
  std::vector<double> first_moment, second_moment;
  std::uint64_t step_count = 0;
  double lr = 1e-2, beta1 = 0.9, beta2 = 0.999, eps_stab = 1e-8;

  AdamState() = default;
  explicit AdamState(std::size_t coords) : first_moment(coords, 0.0), second_moment(coords, 0.0) {}
};

/// Bias-corrected Adam update of every coordinate.
void adam_step(AdamState& state, std::span<double> coords, std::span<const double> grad);

/// Adam update restricted to `active` coordinates; the step counter still
/// advances once per call. Other coordinates and their moments are untouched.
void adam_step_sparse(AdamState& state, std::span<double> coords, std::span<const double> grad,
                      std::span<const std::size_t> active);

/// Loss sum over degrees 0 and 1 of the squared 2-Wasserstein distance
/// between the Rips diagrams of the two subsets.
struct SubsetLoss {
  double loss = 0.0;
  PersistenceResult x, y;
  std::array<WassersteinMatching, 2> matchings;  // per degree, x points vs y points
};

SubsetLoss subset_loss(const PointCloud& x_sub, const PointCloud& y_sub);

struct LossGradient {
  double loss = 0.0;
  std::vector<double> gradient;  // same layout as y_sub.coords()
  /// Smallest gap between distinct sorted edge lengths of y_sub; small
  /// values flag a configuration where the loss is not differentiable.
  double min_edge_gap = kInfinity;
};

/// Gradient of subset_loss with respect to the coordinates of y_sub, through
/// the critical edges of the matched diagram points.
LossGradient subset_loss_gradient(const PointCloud& x_sub, const PointCloud& y_sub);

struct AlignConfig {
  std::size_t k = 25;
  std::size_t iterations = 20000;
  std::size_t snapshot_every = 1000;  // 0: only the first and last
  std::uint64_t seed = 0;
  double lr = 1e-2, beta1 = 0.9, beta2 = 0.999;
};

struct AlignSnapshot {
  std::size_t iteration = 0;
  PointCloud cloud;
};

struct AlignResult {
  std::vector<AlignSnapshot> snapshots;  // iteration 0 first, final last
  std::vector<double> loss_history;      // one entry per iteration
  PointCloud final_cloud;
};

/// Moves Y toward X (identity correspondence) by Adam steps on the losses of
/// uniformly drawn k-subsets; each step touches only the sampled points.
AlignResult align(const PointCloud& x, const PointCloud& y0, const AlignConfig& cfg);

}  // namespace distop
