#pragma once

#include "distop/geometry.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace distop {

struct Simplex {
  Subset vertices;  // strictly increasing
  double time = 0.0;

  int dim() const noexcept { return static_cast<int>(vertices.size()) - 1; }

  friend bool operator==(const Simplex&, const Simplex&) = default;
};

/// Filtration order: appearance time, then dimension, then lexicographic
/// vertex tuple. Every face precedes its cofacets in this order.
bool filtration_less(const Simplex& a, const Simplex& b) noexcept;

/// m-skeleton simplicial complex with monotone appearance times. Simplices are
/// kept sorted in filtration order.
class FilteredComplex {
public:
  FilteredComplex() = default;

  /// Validates closure under faces, monotone times, vertex times of zero and
  /// the skeleton bound, then sorts into filtration order.
  FilteredComplex(std::size_t vertex_count, int skeleton_dim, std::vector<Simplex> simplices);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  int skeleton_dim() const noexcept { return skeleton_dim_; }
  std::span<const Simplex> simplices() const noexcept { return simplices_; }
  std::size_t size() const noexcept { return simplices_.size(); }

  friend bool operator==(const FilteredComplex&, const FilteredComplex&) = default;

private:
  struct Trusted {};
  FilteredComplex(Trusted, std::size_t vertex_count, int skeleton_dim,
                  std::vector<Simplex> simplices);

  friend FilteredComplex rips_filtration(const DistanceMatrix&, int);
  friend FilteredComplex cech_filtration(const PointCloud&, int);
  friend class RoundingGrid;

  std::size_t vertex_count_ = 0;
  int skeleton_dim_ = 0;
  std::vector<Simplex> simplices_;
};

/// Strictly increasing set of rounding targets.
class RoundingGrid {
public:
  RoundingGrid() = default;
  /// density: the spacing the grid guarantees over the range it covers.
  RoundingGrid(std::vector<double> values, double density);

  std::span<const double> values() const noexcept { return values_; }
  double density() const noexcept { return density_; }
  bool empty() const noexcept { return values_.empty(); }

  /// Nearest grid value; a value exactly halfway between two grid points
  /// rounds up.
  double round(double x) const;

  /// Rounds every appearance time and restores filtration order.
  FilteredComplex round(const FilteredComplex& complex) const;

private:
  std::vector<double> values_;
  double density_ = 0.0;
};

/// True when x rounds to `upper` rather than `lower` (lower < upper).
bool rounds_up(double x, double lower, double upper) noexcept;

FilteredComplex rips_filtration(const DistanceMatrix& d, int skeleton_dim);

/// Cech filtration, diameter convention: a simplex appears at twice the
/// radius of the minimal enclosing ball of its vertices. Edges appear at the
/// Euclidean distance, so the 1-skeleton agrees with Rips.
FilteredComplex cech_filtration(const PointCloud& cloud, int skeleton_dim);

FilteredComplex round_filtration(const FilteredComplex& complex, const RoundingGrid& grid);

/// Calls visit(subset) for every k-subset of {0..n-1} in lexicographic order.
/// Returns early when visit returns false.
template <class Visit>
void for_each_combination(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return;
  Subset current(k);
  for (std::size_t i = 0; i < k; ++i) current[i] = static_cast<Index>(i);
  while (true) {
    if (!visit(static_cast<const Subset&>(current))) return;
    std::size_t pos = k;
    while (pos > 0 && current[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) return;
    ++current[pos - 1];
    for (std::size_t j = pos; j < k; ++j) current[j] = current[j - 1] + 1;
  }
}

}  // namespace distop
