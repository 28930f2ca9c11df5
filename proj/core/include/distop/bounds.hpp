#pragma once

#include "distop/invariant.hpp"

#include <cstddef>
#include <cstdint>
#include <string>

namespace distop {

/// S(k, m) = C(k, 2) + C(k, 3) + ... + C(k, m + 1), the number of simplices
/// of dimension 1..m on k vertices. Requires 0 < m < k.
std::uint64_t s_km(std::size_t k, std::size_t m);

struct BoundReport {
  InvariantKind flavor = InvariantKind::RP;
  std::size_t k = 0;
  int m = 0;
  double epsilon = 0.0;
  double bound = 0.0;
  std::string formula;
};

/// Distortion bound implied by an epsilon-close distributed persistence
/// invariant: 112 k^2 eps (Rips) or 224 S(k, m) k^{m+1} eps (Cech).
/// Requires 0 < m < k.
BoundReport quasi_isometry_bound(InvariantKind flavor, std::size_t k, int m, double epsilon);

/// Gromov-Hausdorff style bound over a delta-dense sub-sample:
/// 2 delta + the quasi-isometry bound.
BoundReport gh_bound_dense_cover(InvariantKind flavor, std::size_t k, int m, double epsilon,
                                 double delta);

/// Cech bound routed through Rips persistence for clouds in R^d1 and R^d2:
/// 112 k^2 (eps + sqrt(2 d1 / (d1 + 1)) + sqrt(2 d2 / (d2 + 1))).
BoundReport cech_via_rips_bound(std::size_t k, double epsilon, std::size_t d1, std::size_t d2);

/// Anchor-based bound with 1-skeleton invariants on k- and (k-1)-subsets:
/// 56 (k + 1) eps1 + 28 eps2. Requires k > 1.
double sparse_quasi_isometry_bound(std::size_t k, double eps1, double eps2);

}  // namespace distop
