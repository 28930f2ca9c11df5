#pragma once

#include "distop/geometry.hpp"
#include "distop/invariant.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

namespace distop {

/// Set of subsets of {0..n-1}, kept sorted and free of duplicates.
class SubsetCollection {
public:
  SubsetCollection() = default;
  /// Each subset is sorted; duplicates are removed. Entries must be < n and
  /// distinct within a subset.
  SubsetCollection(std::size_t n, std::vector<Subset> subsets);

  std::size_t ground_size() const noexcept { return n_; }
  std::span<const Subset> subsets() const noexcept { return subsets_; }
  std::size_t size() const noexcept { return subsets_.size(); }
  bool contains(const Subset& s) const;

  /// Adds a subset (validated, normalized); returns false if already present.
  bool insert(Subset s);

  friend bool operator==(const SubsetCollection&, const SubsetCollection&) = default;

private:
  std::size_t n_ = 0;
  std::vector<Subset> subsets_;
};

/// Binomial coefficient as a double (exact while below 2^53).
double binomial(std::size_t n, std::size_t k);

/// Lexicographic stream of the k-subsets of {0..n-1}.
class SubsetEnumerator {
public:
  SubsetEnumerator(std::size_t n, std::size_t k);
  /// Writes the next subset into `out`; false when exhausted.
  bool next(Subset& out);

private:
  std::size_t n_, k_;
  Subset current_;
  bool started_ = false, done_ = false;
};

std::vector<Subset> enumerate_subsets(std::size_t n, std::size_t k);

/// M independent uniform k-subsets (deduplicated). Deterministic per seed.
SubsetCollection sample_subsets(std::size_t n, std::size_t k, std::size_t count,
                                std::uint64_t seed);

/// Uniform k-subset drawn with the given generator.
Subset random_subset(std::size_t n, std::size_t k, std::mt19937_64& rng);

/// Per-subset invariant of the Rips or Cech m-skeleton filtration, computed
/// independently (and in parallel) for each subset.
DistributedInvariant compute_distributed(const PointCloud& cloud, const SubsetCollection& subsets,
                                         InvariantKind kind, int skeleton_dim);

/// Rips kinds only, from an abstract metric.
DistributedInvariant compute_distributed(const DistanceMatrix& d, const SubsetCollection& subsets,
                                         InvariantKind kind, int skeleton_dim);

/// Invariant of a single point set; the building block of compute_distributed.
InvariantValue compute_invariant(const PointCloud& cloud, InvariantKind kind, int skeleton_dim);

struct CoverReport {
  bool covering_ok = true;
  bool closure_ok = true;
  std::vector<Subset> missing_pairs;     // uncovered subsets of size <= p
  std::vector<Subset> missing_closures;  // required subsets absent from C

  bool ok() const noexcept { return covering_ok && closure_ok; }
};

/// Raised when a collection fails the cover/closure conditions; carries the
/// report naming the offending subsets.
class CoverClosureError : public DomainError {
public:
  explicit CoverClosureError(CoverReport report);
  const CoverReport& report() const noexcept { return report_; }

private:
  CoverReport report_;
};

/// Covering: every subset of size 1..p lies in some member of size k.
/// Closure: every S' inside a size-k member with |S'| >= max(1, k-m-1) is a member.
CoverReport check_cover_closure(const SubsetCollection& c, std::size_t k, int skeleton_dim,
                                std::size_t p = 2);

/// Adds every subset of each size-k member with size in [max(1, k-m-1), k-1].
SubsetCollection closure_completion(const SubsetCollection& c, std::size_t k, int skeleton_dim);

/// 1 - C(n,p) (1 - ((k-p+1)/(n-p+1))^p)^M before clamping.
double cover_probability_raw(std::size_t n, std::size_t k, std::size_t p, std::size_t m_subsets);
/// Raw value clamped to [0, 1].
double cover_probability_lower_bound(std::size_t n, std::size_t k, std::size_t p,
                                     std::size_t m_subsets);

/// ceil((p log(n e / p) - log(1 - eps)) ((n-p+1)/(k-p+1))^p)
std::size_t required_sample_count(std::size_t n, std::size_t k, std::size_t p, double eps);

/// The covering bound over s cells, clamped to [0, 1]. The per-draw hit
/// probability ((k-p+1)/(s-p+1))^p is capped at 1.
double dense_cover_probability_raw(std::size_t s, std::size_t k, std::size_t p,
                                   std::size_t m_subsets);
double dense_cover_probability_bound(std::size_t s, std::size_t k, std::size_t p,
                                     std::size_t m_subsets);

/// Two-stage sampler over Voronoi cells of furthest-point centers under
/// d_phi(a, b) = max(X[a][b], Y[phi a][phi b]): pick a cell uniformly, then a
/// point uniformly within it.
class MixedMeasureSampler {
public:
  MixedMeasureSampler(const DistanceMatrix& x, const DistanceMatrix& y, const Bijection& phi,
                      std::size_t centers, Index seed_index = 0);

  const DistanceMatrix& mixed_metric() const noexcept { return mixed_; }
  std::span<const Index> centers() const noexcept { return centers_; }
  double delta() const noexcept { return delta_; }
  /// Members of each cell, sorted.
  std::span<const std::vector<Index>> cells() const noexcept { return cells_; }

  /// Exact probability of drawing each point.
  std::vector<double> point_probabilities() const;
  /// Exact measure of each cell.
  std::vector<double> cell_measures() const;

  Index draw(std::mt19937_64& rng) const;
  /// Draws points until k distinct ones are collected.
  Subset draw_subset(std::size_t k, std::mt19937_64& rng) const;
  SubsetCollection sample_subsets(std::size_t k, std::size_t count, std::uint64_t seed) const;

private:
  DistanceMatrix mixed_;
  std::vector<Index> centers_;
  double delta_ = 0.0;
  std::vector<std::vector<Index>> cells_;
};

}  // namespace distop
