#include "distop/certify.hpp"

#include "distop/bounds.hpp"
#include "distop/metrics.hpp"
#include "distop/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace distop {
namespace {

void check_inputs(const PointCloud& x, const PointCloud& y, const Bijection& phi) {
  if (x.size() != y.size() || phi.size() != x.size())
    throw DomainError("X, Y and phi must have the same size");
}

const PersistenceDiagram& diagram_of(const InvariantValue& v) {
  return std::get<PersistenceDiagram>(v);
}

// Per-subset comparison of lambda(X|S) against lambda(Y|phi(S)).
template <class Compare>
double worst_over(const PointCloud& x, const PointCloud& y, const Bijection& phi,
                  std::span<const Subset> subsets, InvariantKind flavor, int m, Compare&& compare) {
  std::vector<double> values(subsets.size(), 0.0);
  parallel_for(subsets.size(), [&](std::size_t i) {
    const Subset& s = subsets[i];
    const Subset image = phi.apply(s);
    const auto a = compute_invariant(x.restrict(s), flavor, m);
    const auto b = compute_invariant(y.restrict(image), flavor, m);
    values[i] = compare(diagram_of(a), diagram_of(b));
  });
  return values.empty() ? 0.0 : *std::max_element(values.begin(), values.end());
}

}  // namespace

CertifyReport certify_alignment(const PointCloud& x, const PointCloud& y, const Bijection& phi,
                                const SubsetCollection& c, InvariantKind flavor, int m) {
  check_inputs(x, y, phi);
  if (!is_persistence_kind(flavor)) throw DomainError("certification needs RP or CP");
  if (c.ground_size() != x.size()) throw DomainError("collection ground set must match the cloud");
  std::size_t k = 0;
  for (const auto& s : c.subsets()) k = std::max(k, s.size());
  const CoverReport report = check_cover_closure(c, k, m, 2);
  if (!report.ok()) throw CoverClosureError(report);

  // The bound covers every degree up to m, including the top one.
  const MetricConfig cfg = MetricConfig::bottleneck_all_degrees(m);
  CertifyReport out;
  out.flavor = flavor;
  out.k = k;
  out.m = m;
  out.collection_size = c.size();
  out.eps_obs = worst_over(x, y, phi, c.subsets(), flavor, m,
                           [&](const PersistenceDiagram& a, const PersistenceDiagram& b) {
                             return diagram_distance(a, b, cfg);
                           });
  out.bound = quasi_isometry_bound(flavor, k, m, out.eps_obs).bound;
  out.distortion = quasi_isometry_distortion(pairwise_distances(x), pairwise_distances(y), phi);
  return out;
}

SparseCertifyReport certify_alignment_sparse(const PointCloud& x, const PointCloud& y,
                                             const Bijection& phi, std::vector<Index> anchor,
                                             InvariantKind flavor) {
  check_inputs(x, y, phi);
  if (!is_persistence_kind(flavor)) throw DomainError("certification needs RP or CP");
  const std::size_t n = x.size();
  std::sort(anchor.begin(), anchor.end());
  if (std::adjacent_find(anchor.begin(), anchor.end()) != anchor.end())
    throw DomainError("anchor points must be distinct");
  for (Index a : anchor)
    if (a >= n) throw DomainError("anchor index out of range");
  const std::size_t k = anchor.size() + 1;
  if (k < 3 || k > n) throw DomainError("anchor size must lie in [2, n - 1]");

  std::set<Subset> members;
  for (Index a = 0; a < n; ++a) {
    for (Index b = a + 1; b < n; ++b) {
      const bool ia = std::binary_search(anchor.begin(), anchor.end(), a);
      const bool ib = std::binary_search(anchor.begin(), anchor.end(), b);
      if (ia && ib) continue;
      Subset s{a, b};
      for (Index v : anchor) {
        if (s.size() == k) break;
        if (v != a && v != b) s.push_back(v);
      }
      std::sort(s.begin(), s.end());
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        Subset t = s;
        t.erase(t.begin() + static_cast<std::ptrdiff_t>(drop));
        members.insert(std::move(t));
      }
      members.insert(std::move(s));
    }
  }
  const std::vector<Subset> subsets(members.begin(), members.end());

  SparseCertifyReport out;
  out.flavor = flavor;
  out.k = k;
  out.collection_size = subsets.size();
  out.anchor = anchor;
  out.eps1 = worst_over(x, y, phi, subsets, flavor, 1,
                        [](const PersistenceDiagram& a, const PersistenceDiagram& b) {
                          return wasserstein(a, b, 1.0, 0) + wasserstein(a, b, 1.0, 1);
                        });
  for (Index i : anchor)
    for (Index j : anchor)
      out.eps2 += std::abs(euclidean_distance(x.point(i), x.point(j)) -
                           euclidean_distance(y.point(phi[i]), y.point(phi[j])));
  out.bound = sparse_quasi_isometry_bound(k, out.eps1, out.eps2);
  out.distortion = quasi_isometry_distortion(pairwise_distances(x), pairwise_distances(y), phi);
  return out;
}

}  // namespace distop
