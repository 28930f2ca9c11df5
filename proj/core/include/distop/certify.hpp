#pragma once

#include "distop/distributed.hpp"

#include <vector>

namespace distop {

struct CertifyReport {
  double eps_obs = 0.0;     // max over C of the bottleneck distance in degrees 0..m
  double bound = 0.0;       // quasi-isometry bound implied by eps_obs
  double distortion = 0.0;  // measured max |d_X - d_Y o phi|
  InvariantKind flavor = InvariantKind::RP;
  std::size_t k = 0;
  int m = 0;
  std::size_t collection_size = 0;
};

/// Compares the distributed persistence of X and Y = phi(X) over C, where k is
/// the largest member size. Throws CoverClosureError when C fails cover
/// (p = 2) or closure for (k, m).
CertifyReport certify_alignment(const PointCloud& x, const PointCloud& y, const Bijection& phi,
                                const SubsetCollection& c, InvariantKind flavor, int m);

struct SparseCertifyReport {
  double eps1 = 0.0;        // max over the collection of W1 in degrees 0 and 1 (summed)
  double eps2 = 0.0;        // sum over ordered anchor pairs of the distance discrepancy
  double bound = 0.0;
  double distortion = 0.0;
  InvariantKind flavor = InvariantKind::RP;
  std::size_t k = 0;
  std::size_t collection_size = 0;
  std::vector<Index> anchor;
};

/// 1-skeleton variant with an anchor set X' of size k - 1. The compared sets
/// are {a, b} plus anchor points (size k) for every pair outside the anchor
/// set, together with all their (k-1)-subsets.
SparseCertifyReport certify_alignment_sparse(const PointCloud& x, const PointCloud& y,
                                             const Bijection& phi, std::vector<Index> anchor,
                                             InvariantKind flavor);

}  // namespace distop
