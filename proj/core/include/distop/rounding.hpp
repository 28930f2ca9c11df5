#pragma once

#include "distop/filtration.hpp"
#include "distop/persistence.hpp"

#include <span>
#include <utility>
#include <vector>

namespace distop {

/// Grid R and nearest-point map pi that send every matched pair (p_i, q_i)
/// to the same grid point while moving no input by more than
/// 3 epsilon + 4 delta.
struct RoundingResult {
  RoundingGrid grid;
  double epsilon = 0.0;  // max |p_i - q_i|
  double delta = 0.0;    // sum |p_i - q_i|
  /// Inputs re-ordered by p (stable in the original index).
  std::vector<double> p, q;

  double pi(double x) const { return grid.round(x); }
};

/// Recursive grid construction over matched reals. The two inputs must have
/// equal, non-zero length.
RoundingResult rounding_grid(std::span<const double> p, std::span<const double> q);

/// Adds points spaced 14 delta apart inside every gap wider than 28 delta, so
/// the grid is 14 delta dense over the inputs without changing pi on them.
/// When delta is zero, `fallback_density` sets the spacing (and must be
/// positive).
RoundingGrid densify_grid(const RoundingResult& result, double fallback_density = 0.0);

struct PairRounding {
  RoundingResult rounding;
  RoundingGrid grid;  // densified
};

/// Grid forcing round_diagram(A_i) == round_diagram(B_i) for every pair.
/// Births and deaths are matched through an optimal 1-Wasserstein matching
/// per degree; points matched to the diagonal pair with their projection.
PairRounding pair_rounding_grid(
    std::span<const std::pair<PersistenceDiagram, PersistenceDiagram>> pairs,
    double fallback_density = 1.0);

}  // namespace distop
