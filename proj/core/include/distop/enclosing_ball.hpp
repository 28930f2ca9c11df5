#pragma once

#include <span>
#include <vector>

namespace distop {

struct Ball {
  std::vector<double> center;
  double radius = 0.0;
};

/// Smallest ball containing the given points (each a span of equal
/// dimension). Exact up to floating-point rounding; computed by Welzl's
/// recursion over boundary sets in the given point order.
Ball minimal_enclosing_ball(std::span<const std::span<const double>> points);

/// Smallest ball with every listed point on its boundary, centered in their
/// affine hull. Degenerate (affinely dependent) inputs are solved in the
/// least-squares sense.
Ball circumscribed_ball(std::span<const std::span<const double>> points);

}  // namespace distop
