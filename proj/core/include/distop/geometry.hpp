#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace distop {

/// Point label. Labels are row positions in the source cloud.
using Index = std::uint32_t;

/// Sorted, strictly increasing tuple of point labels.
using Subset = std::vector<Index>;

/// Raised when an operation's precondition is violated. The message names
/// the violated condition.
class DomainError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Labeled point cloud in R^d, stored row-major.
class PointCloud {
public:
  PointCloud() = default;
  PointCloud(std::size_t dim, std::vector<double> coords);

  static PointCloud from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t size() const noexcept { return dim_ == 0 ? 0 : coords_.size() / dim_; }
  std::size_t dim() const noexcept { return dim_; }

  std::span<const double> point(std::size_t i) const {
    return {coords_.data() + i * dim_, dim_};
  }
  std::span<double> point(std::size_t i) { return {coords_.data() + i * dim_, dim_}; }

  std::span<const double> coords() const noexcept { return coords_; }
  std::span<double> coords() noexcept { return coords_; }

  /// Cloud made of the listed points, in the listed order.
  PointCloud restrict(std::span<const Index> subset) const;

  double diameter() const;

  friend bool operator==(const PointCloud&, const PointCloud&) = default;

private:
  std::size_t dim_ = 0;
  std::vector<double> coords_;
};

/// Symmetric matrix of pairwise distances with zero diagonal.
class DistanceMatrix {
public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), entries_(n * n, 0.0) {}

  /// Validates symmetry, zero diagonal and non-negativity.
  static DistanceMatrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t size() const noexcept { return n_; }

  double operator()(std::size_t i, std::size_t j) const noexcept { return entries_[i * n_ + j]; }

  /// Sets both (i, j) and (j, i).
  void set(std::size_t i, std::size_t j, double value) noexcept {
    entries_[i * n_ + j] = value;
    entries_[j * n_ + i] = value;
  }

  DistanceMatrix restrict(std::span<const Index> subset) const;

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

private:
  std::size_t n_ = 0;
  std::vector<double> entries_;
};

/// Permutation pairing label i of X with label mapping[i] of Y.
class Bijection {
public:
  Bijection() = default;
  explicit Bijection(std::vector<Index> mapping);

  static Bijection identity(std::size_t n);

  std::size_t size() const noexcept { return mapping_.size(); }
  Index operator[](std::size_t i) const noexcept { return mapping_[i]; }
  std::span<const Index> mapping() const noexcept { return mapping_; }

  Bijection inverse() const;

  /// Image of a subset, re-sorted.
  Subset apply(std::span<const Index> subset) const;

private:
  std::vector<Index> mapping_;
};

double euclidean_distance(std::span<const double> a, std::span<const double> b) noexcept;

DistanceMatrix pairwise_distances(const PointCloud& cloud);

/// Least eps for which phi is an eps-quasi-isometry between X and Y.
double quasi_isometry_distortion(const DistanceMatrix& x, const DistanceMatrix& y,
                                 const Bijection& phi);

/// Mean over unordered pairs of |X[i][j] - Y[phi(i)][phi(j)]|.
double mean_pairwise_distortion(const DistanceMatrix& x, const DistanceMatrix& y,
                                const Bijection& phi);

struct FurthestPointSample {
  std::vector<Index> indices;  // in selection order, starting with the seed
  double delta = 0.0;          // covering radius of the sample
};

/// Greedy maximin sampling. Ties go to the lowest index.
FurthestPointSample furthest_point_sample(const DistanceMatrix& d, std::size_t count,
                                          Index seed_index);

}  // namespace distop
