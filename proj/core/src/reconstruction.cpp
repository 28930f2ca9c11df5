#include "distop/reconstruction.hpp"

#include <algorithm>
#include <bit>
#include <iterator>
#include <string>

namespace distop {
namespace {

std::string subset_text(const Subset& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

Subset set_difference(const Subset& a, const Subset& b) {
  Subset out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Subset set_union(const Subset& a, const Subset& b) {
  Subset out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

const EulerCurve& as_curve(const InvariantValue& v) {
  if (const auto* c = std::get_if<EulerCurve>(&v)) return *c;
  throw DomainError("expected Euler-curve entries");
}

}  // namespace

EulerCurve euler_ie_step(const Subset& w, const Subset& y, const CurveLookup& lookup) {
  if (!std::includes(w.begin(), w.end(), y.begin(), y.end()))
    throw DomainError("euler_ie_step: Y must be a subset of W");
  const Subset extra = set_difference(w, y);
  const std::size_t r = extra.size();
  if (r < 2 || r > 24) throw DomainError("euler_ie_step: |W \\ Y| must be between 2 and 24");

  // chi(W) = sum over non-empty I of (-1)^{|I|+1} chi(W \ x_I); the term for
  // I = everything is chi(Y) itself.
  EulerCurve rest = lookup(w);
  const std::uint32_t full = (1u << r) - 1;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    Subset removed;
    for (std::size_t b = 0; b < r; ++b)
      if (mask & (1u << b)) removed.push_back(extra[b]);
    const Subset part = set_difference(w, removed);
    const bool odd = std::popcount(mask) % 2 == 1;
    if (odd)
      rest -= lookup(part);
    else
      rest += lookup(part);
  }
  // (-1)^{r+1} chi(Y) = rest
  return r % 2 == 1 ? rest : -1L * rest;
}

EulerCurve euler_ie_step(const Subset& w, const Subset& y, const CurveTable& curves) {
  return euler_ie_step(w, y, [&](const Subset& s) -> const EulerCurve& {
    auto it = curves.find(s);
    if (it == curves.end()) throw DomainError("missing Euler curve for " + subset_text(s));
    return it->second;
  });
}

DistributedInvariant euler_reconstruct_pairs(const DistributedInvariant& inv) {
  if (is_persistence_kind(inv.kind)) throw DomainError("Euler reconstruction needs an Euler invariant");
  const int m = inv.skeleton_dim;
  if (m < 0) throw DomainError("skeleton dimension must be non-negative");

  std::size_t k = 0;
  std::vector<Subset> labels;
  for (const auto& [s, v] : inv.entries) {
    k = std::max(k, s.size());
    labels.push_back(s);
    (void)as_curve(v);
  }
  const std::size_t n = inv.ground_size();
  const SubsetCollection collection(n, labels);
  const CoverReport report = check_cover_closure(collection, k, m, 2);
  if (!report.ok()) throw CoverClosureError(report);

  CurveTable cache;
  for (const auto& [s, v] : inv.entries) cache.emplace(s, as_curve(v));

  std::vector<Subset> hosts;
  for (const auto& s : collection.subsets())
    if (s.size() == k) hosts.push_back(s);

  // Curves below the closure floor are rebuilt from m + 2 extra points of
  // a host, recursing on any intermediate subsets that are also missing.
  std::function<const EulerCurve&(const Subset&, const Subset&)> get =
      [&](const Subset& t, const Subset& host) -> const EulerCurve& {
    if (auto it = cache.find(t); it != cache.end()) return it->second;
    const Subset rest = set_difference(host, t);
    if (rest.size() < static_cast<std::size_t>(m) + 2)
      throw DomainError("no room to reconstruct " + subset_text(t));
    const Subset extra(rest.begin(), rest.begin() + (m + 2));
    const Subset w = set_union(t, extra);
    EulerCurve value = euler_ie_step(
        w, t, [&](const Subset& s) -> const EulerCurve& { return get(s, host); });
    return cache.emplace(t, std::move(value)).first->second;
  };

  DistributedInvariant out{inv.kind, m, {}};
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      const Subset pair{i, j};
      if (auto it = cache.find(pair); it != cache.end()) {
        out.entries.emplace(pair, it->second);
        continue;
      }
      auto host = std::find_if(hosts.begin(), hosts.end(), [&](const Subset& s) {
        return std::binary_search(s.begin(), s.end(), i) && std::binary_search(s.begin(), s.end(), j);
      });
      if (host == hosts.end()) throw DomainError("pair " + subset_text(pair) + " is not covered");
      out.entries.emplace(pair, get(pair, *host));
    }
  }
  return out;
}

EulerCurve euler_sparse_step(const EulerCurve& chi_w, const EulerCurve& chi_y1,
                             const EulerCurve& chi_y2, double r) {
  if (!(r >= 0.0)) throw DomainError("edge length must be non-negative");
  return chi_y1 + chi_y2 - chi_w - EulerCurve::step(r, 1);
}

DistanceMatrix distances_from_pair_curves(const DistributedInvariant& pairs) {
  const std::size_t n = pairs.ground_size();
  DistanceMatrix d(n);
  std::size_t seen = 0;
  for (const auto& [s, value] : pairs.entries) {
    if (s.size() != 2) continue;
    double dist = 0.0;
    if (const auto* curve = std::get_if<EulerCurve>(&value)) {
      const auto bp = curve->breakpoints();
      if (bp.size() == 1 && bp[0].threshold == 0.0 && bp[0].value == 1) {
        dist = 0.0;
      } else if (bp.size() == 2 && bp[0].threshold == 0.0 && bp[0].value == 2 && bp[1].value == 1) {
        dist = bp[1].threshold;
      } else {
        throw DomainError("malformed pair Euler curve for " + subset_text(s));
      }
    } else {
      const auto& diagram = std::get<PersistenceDiagram>(value);
      const auto pts = diagram.points(0);
      if (pts.size() == 1 && pts[0].essential()) {
        dist = 0.0;
      } else if (pts.size() == 2 && pts[0].birth == 0.0 && pts[1].birth == 0.0 &&
                 pts[0].essential() != pts[1].essential()) {
        dist = pts[0].essential() ? pts[1].death : pts[0].death;
      } else {
        throw DomainError("malformed pair diagram for " + subset_text(s));
      }
    }
    d.set(s[0], s[1], dist);
    ++seen;
  }
  if (seen != n * (n - 1) / 2) throw DomainError("every pair must be present");
  return d;
}

}  // namespace distop
