#pragma once

#include "distop/invariant.hpp"
#include "distop/persistence.hpp"

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace distop {

/// Sup-norm distance between two diagram points.
double point_cost(const PersistencePair& a, const PersistencePair& b) noexcept;
/// Sup-norm distance from a point to the diagonal: (death - birth) / 2.
double diagonal_cost(const PersistencePair& a) noexcept;

/// Bottleneck distance between point multisets. Essential points are matched
/// among themselves by birth; differing essential counts give infinity.
double bottleneck(std::span<const PersistencePair> a, std::span<const PersistencePair> b);
double bottleneck(const PersistenceDiagram& a, const PersistenceDiagram& b, int degree);

/// Optimal partial matching for the p-Wasserstein cost over finite points.
/// Index -1 on either side stands for the diagonal.
struct WassersteinMatching {
  double total = 0.0;  // sum of cost^p
  std::vector<std::pair<int, int>> pairs;
};

/// Exact assignment (Hungarian algorithm) on finite points; essential points
/// are ignored here.
WassersteinMatching wasserstein_matching(std::span<const PersistencePair> a,
                                         std::span<const PersistencePair> b, double p);

/// p-Wasserstein distance over finite points. Infinity when the essential
/// counts differ; otherwise essential points are excluded.
double wasserstein(std::span<const PersistencePair> a, std::span<const PersistencePair> b, double p);
double wasserstein(const PersistenceDiagram& a, const PersistenceDiagram& b, double p, int degree);

struct MetricConfig {
  enum class Flavor { Bottleneck, Wasserstein };
  Flavor flavor = Flavor::Bottleneck;
  double p = 2.0;
  /// Degrees to compare. Unset: every degree present in either diagram
  /// except truncated ones.
  std::optional<std::vector<int>> degrees;

  static MetricConfig bottleneck_all_degrees(int max_degree);
};

/// Maximum over the configured degrees of the per-degree distance.
double diagram_distance(const PersistenceDiagram& a, const PersistenceDiagram& b,
                        const MetricConfig& cfg = {});

enum class LabelMode { Labeled, Unlabeled };

/// Labeled: max over shared labels of diagram_distance (label sets must
/// match). Unlabeled: Hausdorff distance between the two sets of diagrams.
double distributed_distance(const DistributedInvariant& a, const DistributedInvariant& b,
                            const MetricConfig& cfg = {}, LabelMode mode = LabelMode::Labeled);

}  // namespace distop
