#include "distop/enclosing_ball.hpp"

#include "distop/geometry.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace distop {

Ball circumscribed_ball(std::span<const std::span<const double>> points) {
  Ball ball;
  if (points.empty()) return ball;
  const std::size_t dim = points.front().size();
  const auto origin = points.front();
  ball.center.assign(origin.begin(), origin.end());
  if (points.size() == 1) return ball;

  const Eigen::Index rows = static_cast<Eigen::Index>(points.size() - 1);
  Eigen::MatrixXd edges(rows, static_cast<Eigen::Index>(dim));
  for (Eigen::Index i = 0; i < rows; ++i)
    for (std::size_t c = 0; c < dim; ++c)
      edges(i, static_cast<Eigen::Index>(c)) = points[static_cast<std::size_t>(i) + 1][c] - origin[c];

  // center = origin + edges^T * lambda with 2 (E E^T) lambda = |e_i|^2
  const Eigen::MatrixXd gram = 2.0 * edges * edges.transpose();
  const Eigen::VectorXd rhs = edges.rowwise().squaredNorm();
  const Eigen::VectorXd lambda = gram.completeOrthogonalDecomposition().solve(rhs);
  const Eigen::VectorXd offset = edges.transpose() * lambda;

  for (std::size_t c = 0; c < dim; ++c) ball.center[c] += offset(static_cast<Eigen::Index>(c));
  double radius = 0.0;
  for (const auto& p : points) radius = std::max(radius, euclidean_distance(ball.center, p));
  ball.radius = radius;
  return ball;
}

namespace {

bool contains(const Ball& ball, std::span<const double> p) {
  const double slack = 1e-12 * std::max(1.0, ball.radius);
  return euclidean_distance(ball.center, p) <= ball.radius + slack;
}

// Welzl: smallest ball enclosing points[0, count) with `boundary` on its surface.
Ball welzl(std::span<const std::span<const double>> points, std::size_t count,
           std::vector<std::span<const double>>& boundary) {
  const std::size_t dim = points.empty() ? 0 : points.front().size();
  if (count == 0 || boundary.size() == dim + 1) return circumscribed_ball(boundary);

  const auto last = points[count - 1];
  Ball ball = welzl(points, count - 1, boundary);
  if (!ball.center.empty() && contains(ball, last)) return ball;

  boundary.push_back(last);
  ball = welzl(points, count - 1, boundary);
  boundary.pop_back();
  return ball;
}

}  // namespace

Ball minimal_enclosing_ball(std::span<const std::span<const double>> points) {
  std::vector<std::span<const double>> boundary;
  boundary.reserve(points.empty() ? 0 : points.front().size() + 1);
  return welzl(points, points.size(), boundary);
}

}  // namespace distop
