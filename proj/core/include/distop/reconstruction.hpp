#pragma once

#include "distop/distributed.hpp"
#include "distop/persistence.hpp"

#include <functional>
#include <map>

namespace distop {

using CurveTable = std::map<Subset, EulerCurve>;
using CurveLookup = std::function<const EulerCurve&(const Subset&)>;

/// Euler curve of Y from the curves of W and every W \ x_I, where
/// {x_1..x_{m+2}} = W \ Y and I ranges over proper non-empty index sets.
/// Y must be a subset of W with |W| - |Y| = m + 2.
EulerCurve euler_ie_step(const Subset& w, const Subset& y, const CurveLookup& lookup);
/// Same, reading curves from a table; throws DomainError naming a missing subset.
EulerCurve euler_ie_step(const Subset& w, const Subset& y, const CurveTable& curves);

/// Recovers the Euler curve of every pair {i, j} from a distributed Euler
/// invariant satisfying cover (p = 2) and closure. Throws CoverClosureError
/// otherwise. The result holds exactly the 2-subsets.
DistributedInvariant euler_reconstruct_pairs(const DistributedInvariant& invariant);

/// chi(Y) for Y = Y1 ∪ Y2, W = Y1 ∩ Y2 with Y1 \ W = {x}, Y2 \ W = {y}, given
/// the pairwise distance r between x and y (1-skeleton edge correction).
EulerCurve euler_sparse_step(const EulerCurve& chi_w, const EulerCurve& chi_y1,
                             const EulerCurve& chi_y2, double r);

/// Distance matrix read off the pair invariants: the Euler curve of a pair is
/// 2 before d(i, j) and 1 after; a pair diagram has one finite degree-0 point
/// (0, d(i, j)). Every pair must be present.
DistanceMatrix distances_from_pair_curves(const DistributedInvariant& pairs);

}  // namespace distop
