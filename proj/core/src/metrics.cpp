#include "distop/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <set>

namespace distop {

double point_cost(const PersistencePair& a, const PersistencePair& b) noexcept {
  return std::max(std::abs(a.birth - b.birth), std::abs(a.death - b.death));
}

double diagonal_cost(const PersistencePair& a) noexcept {
  return (a.death - a.birth) / 2.0;
}

namespace {

struct Split {
  std::vector<PersistencePair> finite;
  std::vector<double> essential_births;
};

Split split(std::span<const PersistencePair> pts) {
  Split s;
  for (const auto& p : pts) {
    if (p.essential())
      s.essential_births.push_back(p.birth);
    else
      s.finite.push_back(p);
  }
  std::sort(s.essential_births.begin(), s.essential_births.end());
  return s;
}

// Hopcroft-Karp on a bipartite graph with equal sides.
class BipartiteMatcher {
public:
  explicit BipartiteMatcher(std::size_t n) : n_(n), adj_(n) {}

  void add_edge(std::size_t left, std::size_t right) { adj_[left].push_back(right); }

  std::size_t max_matching() {
    match_left_.assign(n_, kFree);
    match_right_.assign(n_, kFree);
    std::size_t matched = 0;
    while (bfs())
      for (std::size_t u = 0; u < n_; ++u)
        if (match_left_[u] == kFree && dfs(u)) ++matched;
    return matched;
  }

private:
  static constexpr std::size_t kFree = static_cast<std::size_t>(-1);
  static constexpr std::size_t kUnreached = static_cast<std::size_t>(-1);

  bool bfs() {
    layer_.assign(n_, kUnreached);
    std::queue<std::size_t> queue;
    for (std::size_t u = 0; u < n_; ++u)
      if (match_left_[u] == kFree) {
        layer_[u] = 0;
        queue.push(u);
      }
    bool found = false;
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop();
      for (std::size_t v : adj_[u]) {
        const std::size_t w = match_right_[v];
        if (w == kFree) {
          found = true;
        } else if (layer_[w] == kUnreached) {
          layer_[w] = layer_[u] + 1;
          queue.push(w);
        }
      }
    }
    return found;
  }

  bool dfs(std::size_t u) {
    for (std::size_t v : adj_[u]) {
      const std::size_t w = match_right_[v];
      if (w == kFree || (layer_[w] == layer_[u] + 1 && dfs(w))) {
        match_left_[u] = v;
        match_right_[v] = u;
        return true;
      }
    }
    layer_[u] = kUnreached;
    return false;
  }

  std::size_t n_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> match_left_, match_right_, layer_;
};

// Left: A points then one diagonal slot per B point. Right: B points then one
// diagonal slot per A point.
bool perfect_matching_within(const std::vector<PersistencePair>& a,
                             const std::vector<PersistencePair>& b, double bound) {
  const std::size_t na = a.size(), nb = b.size(), n = na + nb;
  BipartiteMatcher matcher(n);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j)
      if (point_cost(a[i], b[j]) <= bound) matcher.add_edge(i, j);
    if (diagonal_cost(a[i]) <= bound) matcher.add_edge(i, nb + i);
  }
  for (std::size_t j = 0; j < nb; ++j) {
    if (diagonal_cost(b[j]) <= bound) matcher.add_edge(na + j, j);
    for (std::size_t i = 0; i < na; ++i) matcher.add_edge(na + j, nb + i);
  }
  return matcher.max_matching() == n;
}

double finite_bottleneck(const std::vector<PersistencePair>& a,
                         const std::vector<PersistencePair>& b) {
  if (a.empty() && b.empty()) return 0.0;
  std::vector<double> candidates{0.0};
  for (const auto& p : a) candidates.push_back(diagonal_cost(p));
  for (const auto& q : b) candidates.push_back(diagonal_cost(q));
  for (const auto& p : a)
    for (const auto& q : b) candidates.push_back(point_cost(p, q));
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  // Matching everything to the diagonal is always feasible at the largest
  // diagonal cost, so the answer lies within the candidate list.
  std::size_t lo = 0, hi = candidates.size() - 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (perfect_matching_within(a, b, candidates[mid]))
      hi = mid;
    else
      lo = mid + 1;
  }
  return candidates[lo];
}

}  // namespace

double bottleneck(std::span<const PersistencePair> a, std::span<const PersistencePair> b) {
  const Split sa = split(a), sb = split(b);
  if (sa.essential_births.size() != sb.essential_births.size()) return kInfinity;
  double essential = 0.0;
  for (std::size_t i = 0; i < sa.essential_births.size(); ++i)
    essential = std::max(essential, std::abs(sa.essential_births[i] - sb.essential_births[i]));
  return std::max(essential, finite_bottleneck(sa.finite, sb.finite));
}

double bottleneck(const PersistenceDiagram& a, const PersistenceDiagram& b, int degree) {
  return bottleneck(a.points(degree), b.points(degree));
}

WassersteinMatching wasserstein_matching(std::span<const PersistencePair> a_all,
                                         std::span<const PersistencePair> b_all, double p) {
  if (!(p >= 1.0)) throw DomainError("Wasserstein order p must be >= 1");
  std::vector<int> ai, bi;
  for (std::size_t i = 0; i < a_all.size(); ++i)
    if (!a_all[i].essential()) ai.push_back(static_cast<int>(i));
  for (std::size_t j = 0; j < b_all.size(); ++j)
    if (!b_all[j].essential()) bi.push_back(static_cast<int>(j));

  const std::size_t na = ai.size(), nb = bi.size(), n = na + nb;
  WassersteinMatching out;
  if (n == 0) return out;

  auto cost = [&](std::size_t row, std::size_t col) -> double {
    if (row < na && col < nb) return std::pow(point_cost(a_all[ai[row]], b_all[bi[col]]), p);
    if (row < na) return std::pow(diagonal_cost(a_all[ai[row]]), p);
    if (col < nb) return std::pow(diagonal_cost(b_all[bi[col]]), p);
    return 0.0;
  };

  std::vector<std::vector<double>> c(n, std::vector<double>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t q = 0; q < n; ++q) c[r][q] = cost(r, q);

  // Hungarian algorithm with potentials, 1-based rows/columns.
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<std::size_t> assigned(n + 1, 0), way(n + 1, 0);
  for (std::size_t row = 1; row <= n; ++row) {
    assigned[0] = row;
    std::size_t col0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<bool> used(n + 1, false);
    do {
      used[col0] = true;
      const std::size_t r0 = assigned[col0];
      double delta = inf;
      std::size_t col1 = 0;
      for (std::size_t col = 1; col <= n; ++col) {
        if (used[col]) continue;
        const double cur = c[r0 - 1][col - 1] - u[r0] - v[col];
        if (cur < minv[col]) {
          minv[col] = cur;
          way[col] = col0;
        }
        if (minv[col] < delta) {
          delta = minv[col];
          col1 = col;
        }
      }
      for (std::size_t col = 0; col <= n; ++col) {
        if (used[col]) {
          u[assigned[col]] += delta;
          v[col] -= delta;
        } else {
          minv[col] -= delta;
        }
      }
      col0 = col1;
    } while (assigned[col0] != 0);
    do {
      const std::size_t col1 = way[col0];
      assigned[col0] = assigned[col1];
      col0 = col1;
    } while (col0 != 0);
  }

  for (std::size_t col = 1; col <= n; ++col) {
    const std::size_t row = assigned[col] - 1;
    const std::size_t q = col - 1;
    out.total += c[row][q];
    if (row < na && q < nb)
      out.pairs.emplace_back(ai[row], bi[q]);
    else if (row < na)
      out.pairs.emplace_back(ai[row], -1);
    else if (q < nb)
      out.pairs.emplace_back(-1, bi[q]);
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

double wasserstein(std::span<const PersistencePair> a, std::span<const PersistencePair> b,
                   double p) {
  const auto ea = std::count_if(a.begin(), a.end(), [](const auto& x) { return x.essential(); });
  const auto eb = std::count_if(b.begin(), b.end(), [](const auto& x) { return x.essential(); });
  if (ea != eb) return kInfinity;
  return std::pow(wasserstein_matching(a, b, p).total, 1.0 / p);
}

double wasserstein(const PersistenceDiagram& a, const PersistenceDiagram& b, double p, int degree) {
  return wasserstein(a.points(degree), b.points(degree), p);
}

MetricConfig MetricConfig::bottleneck_all_degrees(int max_degree) {
  MetricConfig cfg;
  std::vector<int> degrees;
  for (int d = 0; d <= max_degree; ++d) degrees.push_back(d);
  cfg.degrees = std::move(degrees);
  return cfg;
}

double diagram_distance(const PersistenceDiagram& a, const PersistenceDiagram& b,
                        const MetricConfig& cfg) {
  std::vector<int> degrees;
  if (cfg.degrees) {
    degrees = *cfg.degrees;
  } else {
    std::set<int> all;
    for (int d : a.untruncated_degrees()) all.insert(d);
    for (int d : b.untruncated_degrees()) all.insert(d);
    degrees.assign(all.begin(), all.end());
  }
  double worst = 0.0;
  for (int d : degrees) {
    const double value = cfg.flavor == MetricConfig::Flavor::Bottleneck
                             ? bottleneck(a, b, d)
                             : wasserstein(a, b, cfg.p, d);
    worst = std::max(worst, value);
  }
  return worst;
}

double distributed_distance(const DistributedInvariant& a, const DistributedInvariant& b,
                            const MetricConfig& cfg, LabelMode mode) {
  auto diagram = [](const InvariantValue& v) -> const PersistenceDiagram& {
    if (const auto* d = std::get_if<PersistenceDiagram>(&v)) return *d;
    throw DomainError("distributed_distance requires persistence-diagram invariants");
  };

  if (mode == LabelMode::Labeled) {
    if (a.entries.size() != b.entries.size())
      throw DomainError("labeled comparison requires identical label sets");
    double worst = 0.0;
    for (auto ia = a.entries.begin(), ib = b.entries.begin(); ia != a.entries.end(); ++ia, ++ib) {
      if (ia->first != ib->first) throw DomainError("labeled comparison requires identical label sets");
      worst = std::max(worst, diagram_distance(diagram(ia->second), diagram(ib->second), cfg));
    }
    return worst;
  }

  // One-sided Hausdorff distance from `from` to `to`.
  auto directed = [&](const DistributedInvariant& from, const DistributedInvariant& to) {
    double worst = 0.0;
    for (const auto& [label, value] : from.entries) {
      double nearest = kInfinity;
      for (const auto& [other_label, other] : to.entries)
        nearest = std::min(nearest, diagram_distance(diagram(value), diagram(other), cfg));
      worst = std::max(worst, nearest);
    }
    return worst;
  };
  if (a.entries.empty() || b.entries.empty())
    return a.entries.empty() && b.entries.empty() ? 0.0 : kInfinity;
  return std::max(directed(a, b), directed(b, a));
}

}  // namespace distop
