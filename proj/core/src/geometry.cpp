#include "distop/geometry.hpp"

#include "distop/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace distop {

PointCloud::PointCloud(std::size_t dim, std::vector<double> coords)
    : dim_(dim), coords_(std::move(coords)) {
  if (dim_ == 0) throw DomainError("point dimension must be positive");
  if (coords_.size() % dim_ != 0)
    throw DomainError("coordinate count is not a multiple of the dimension");
  for (double c : coords_)
    if (!std::isfinite(c)) throw DomainError("coordinates must be finite");
}

PointCloud PointCloud::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) throw DomainError("point cloud must contain at least one point");
  const std::size_t dim = rows.front().size();
  std::vector<double> coords;
  coords.reserve(rows.size() * dim);
  for (const auto& row : rows) {
    if (row.size() != dim) throw DomainError("all points must have the same dimension");
    coords.insert(coords.end(), row.begin(), row.end());
  }
  return PointCloud(dim, std::move(coords));
}

PointCloud PointCloud::restrict(std::span<const Index> subset) const {
  std::vector<double> coords;
  coords.reserve(subset.size() * dim_);
  for (Index i : subset) {
    if (i >= size()) throw DomainError("subset index out of range");
    const auto p = point(i);
    coords.insert(coords.end(), p.begin(), p.end());
  }
  PointCloud out;
  out.dim_ = dim_;
  out.coords_ = std::move(coords);
  return out;
}

double PointCloud::diameter() const {
  double best = 0.0;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j)
      best = std::max(best, euclidean_distance(point(i), point(j)));
  return best;
}

DistanceMatrix DistanceMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const std::size_t n = rows.size();
  if (n == 0) throw DomainError("distance matrix must be non-empty");
  DistanceMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw DomainError("distance matrix must be square");
    for (std::size_t j = 0; j < n; ++j) {
      const double v = rows[i][j];
      if (!std::isfinite(v) || v < 0.0)
        throw DomainError("distance matrix entries must be finite and non-negative");
      out.entries_[i * n + j] = v;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (out(i, i) != 0.0) throw DomainError("distance matrix diagonal must be zero");
    for (std::size_t j = i + 1; j < n; ++j)
      if (out(i, j) != out(j, i)) throw DomainError("distance matrix must be symmetric");
  }
  return out;
}

DistanceMatrix DistanceMatrix::restrict(std::span<const Index> subset) const {
  DistanceMatrix out(subset.size());
  for (std::size_t a = 0; a < subset.size(); ++a) {
    if (subset[a] >= n_) throw DomainError("subset index out of range");
    for (std::size_t b = a + 1; b < subset.size(); ++b) out.set(a, b, (*this)(subset[a], subset[b]));
  }
  return out;
}

Bijection::Bijection(std::vector<Index> mapping) : mapping_(std::move(mapping)) {
  std::vector<bool> seen(mapping_.size(), false);
  for (Index v : mapping_) {
    if (v >= mapping_.size() || seen[v]) throw DomainError("mapping is not a bijection");
    seen[v] = true;
  }
}

Bijection Bijection::identity(std::size_t n) {
  std::vector<Index> m(n);
  std::iota(m.begin(), m.end(), Index{0});
  return Bijection(std::move(m));
}

Bijection Bijection::inverse() const {
  std::vector<Index> inv(mapping_.size());
  for (std::size_t i = 0; i < mapping_.size(); ++i) inv[mapping_[i]] = static_cast<Index>(i);
  return Bijection(std::move(inv));
}

Subset Bijection::apply(std::span<const Index> subset) const {
  Subset out;
  out.reserve(subset.size());
  for (Index i : subset) out.push_back(mapping_.at(i));
  std::sort(out.begin(), out.end());
  return out;
}

double euclidean_distance(std::span<const double> a, std::span<const double> b) noexcept {
  double sum = 0.0;
  for (std::size_t c = 0; c < a.size(); ++c) {
    const double diff = a[c] - b[c];
    sum += diff * diff;
  }
  return std::sqrt(sum);
}

DistanceMatrix pairwise_distances(const PointCloud& cloud) {
  const std::size_t n = cloud.size();
  DistanceMatrix out(n);
  parallel_for(n, [&](std::size_t i) {
    for (std::size_t j = i + 1; j < n; ++j)
      out.set(i, j, euclidean_distance(cloud.point(i), cloud.point(j)));
  });
  return out;
}

namespace {

void check_same_size(const DistanceMatrix& x, const DistanceMatrix& y, const Bijection& phi) {
  if (x.size() != y.size() || phi.size() != x.size())
    throw DomainError("X, Y and phi must have the same size");
}

}  // namespace

double quasi_isometry_distortion(const DistanceMatrix& x, const DistanceMatrix& y,
                                 const Bijection& phi) {
  check_same_size(x, y, phi);
  double worst = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      worst = std::max(worst, std::abs(x(i, j) - y(phi[i], phi[j])));
  return worst;
}

double mean_pairwise_distortion(const DistanceMatrix& x, const DistanceMatrix& y,
                                const Bijection& phi) {
  check_same_size(x, y, phi);
  if (x.size() < 2) return 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) total += std::abs(x(i, j) - y(phi[i], phi[j]));
  return total / (0.5 * static_cast<double>(x.size()) * static_cast<double>(x.size() - 1));
}

FurthestPointSample furthest_point_sample(const DistanceMatrix& d, std::size_t count,
                                          Index seed_index) {
  const std::size_t n = d.size();
  if (count < 1 || count > n) throw DomainError("sample size must satisfy 1 <= s <= n");
  if (seed_index >= n) throw DomainError("seed index out of range");

  FurthestPointSample out;
  out.indices.push_back(seed_index);
  std::vector<double> nearest(n);
  std::vector<bool> chosen(n, false);
  chosen[seed_index] = true;
  for (std::size_t i = 0; i < n; ++i) nearest[i] = d(seed_index, i);

  while (out.indices.size() < count) {
    std::size_t best = 0;
    double best_dist = -1.0;
    for (std::size_t i = 0; i < n; ++i)
      if (!chosen[i] && nearest[i] > best_dist) {
        best_dist = nearest[i];
        best = i;
      }
    out.indices.push_back(static_cast<Index>(best));
    chosen[best] = true;
    for (std::size_t i = 0; i < n; ++i) nearest[i] = std::min(nearest[i], d(best, i));
  }
  out.delta = *std::max_element(nearest.begin(), nearest.end());
  return out;
}

}  // namespace distop
