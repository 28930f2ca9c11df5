#include "distop/datasets.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace distop {

PointCloud circle_points(std::size_t n, double radius) {
  std::vector<double> coords;
  coords.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
    coords.push_back(radius * std::cos(t));
    coords.push_back(radius * std::sin(t));
  }
  return PointCloud(2, std::move(coords));
}

PointCloud disc_points(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> coords;
  coords.reserve(2 * n);
  while (coords.size() < 2 * n) {
    const double x = u(rng), y = u(rng);
    if (x * x + y * y > 1.0) continue;
    coords.push_back(x);
    coords.push_back(y);
  }
  return PointCloud(2, std::move(coords));
}

PointCloud noisy_circle_points(std::size_t on_circle, std::size_t in_disc, std::uint64_t seed) {
  const PointCloud circle = circle_points(on_circle);
  std::vector<double> coords(circle.coords().begin(), circle.coords().end());
  const PointCloud disc = disc_points(in_disc, seed);
  coords.insert(coords.end(), disc.coords().begin(), disc.coords().end());
  return PointCloud(2, std::move(coords));
}

PointCloud torus_points(std::size_t rows, std::size_t cols, double major, double minor) {
  std::vector<double> coords;
  coords.reserve(3 * rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(rows);
    for (std::size_t j = 0; j < cols; ++j) {
      const double phi = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(cols);
      const double ring = major + minor * std::cos(theta);
      coords.push_back(ring * std::cos(phi));
      coords.push_back(ring * std::sin(phi));
      coords.push_back(minor * std::sin(theta));
    }
  }
  return PointCloud(3, std::move(coords));
}

PointCloud add_gaussian_noise(const PointCloud& cloud, double sigma, std::uint64_t seed) {
  if (!(sigma >= 0.0)) throw DomainError("noise sigma must be >= 0");
  std::vector<double> coords(cloud.coords().begin(), cloud.coords().end());
  if (sigma == 0.0) return PointCloud(cloud.dim(), std::move(coords));
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, sigma);
  for (double& c : coords) c += noise(rng);
  return PointCloud(cloud.dim(), std::move(coords));
}

PointCloud add_uniform_noise(const PointCloud& cloud, double amplitude, std::uint64_t seed) {
  if (!(amplitude >= 0.0)) throw DomainError("noise amplitude must be >= 0");
  std::vector<double> coords(cloud.coords().begin(), cloud.coords().end());
  if (amplitude == 0.0) return PointCloud(cloud.dim(), std::move(coords));
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> noise(-amplitude, amplitude);
  for (double& c : coords) c += noise(rng);
  return PointCloud(cloud.dim(), std::move(coords));
}

PointCloud rigid_motion(const PointCloud& cloud, double angle, std::span<const double> shift) {
  const std::size_t dim = cloud.dim();
  if (dim < 2) throw DomainError("rigid_motion needs at least two dimensions");
  if (shift.size() != dim) throw DomainError("shift must match the cloud dimension");
  std::vector<double> coords;
  coords.reserve(cloud.coords().size());
  const double c = std::cos(angle), s = std::sin(angle);
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    const auto p = cloud.point(i);
    coords.push_back(c * p[0] - s * p[1] + shift[0]);
    coords.push_back(s * p[0] + c * p[1] + shift[1]);
    for (std::size_t j = 2; j < dim; ++j) coords.push_back(p[j] + shift[j]);
  }
  return PointCloud(dim, std::move(coords));
}

}  // namespace distop
