#pragma once

#include "distop/geometry.hpp"

#include <cstdint>
#include <span>

namespace distop {

/// n evenly spaced points on the circle of the given radius, starting at angle 0.
PointCloud circle_points(std::size_t n, double radius = 1.0);

/// n uniform points in the unit disc, by seeded rejection sampling.
PointCloud disc_points(std::size_t n, std::uint64_t seed);

/// `on_circle` evenly spaced circle points followed by `in_disc` uniform disc points.
PointCloud noisy_circle_points(std::size_t on_circle, std::size_t in_disc, std::uint64_t seed);

/// rows x cols angle grid on the torus with major radius R and minor radius r.
PointCloud torus_points(std::size_t rows = 16, std::size_t cols = 16, double major = 2.0,
                        double minor = 1.0);

/// Adds independent N(0, sigma^2) noise to every coordinate.
PointCloud add_gaussian_noise(const PointCloud& cloud, double sigma, std::uint64_t seed);

/// Adds independent uniform noise in [-amplitude, amplitude] to every coordinate.
PointCloud add_uniform_noise(const PointCloud& cloud, double amplitude, std::uint64_t seed);

/// Rotation by `angle` in the plane of the first two coordinates plus a translation.
PointCloud rigid_motion(const PointCloud& cloud, double angle, std::span<const double> shift);

}  // namespace distop
