#include "distop/rounding.hpp"

#include "distop/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace distop {

RoundingResult rounding_grid(std::span<const double> p_in, std::span<const double> q_in) {
  if (p_in.size() != q_in.size()) throw DomainError("P and Q must have the same length");
  if (p_in.empty()) throw DomainError("P and Q must be non-empty");
  const std::size_t count = p_in.size();

  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return p_in[a] < p_in[b]; });

  RoundingResult out;
  out.p.reserve(count);
  out.q.reserve(count);
  std::vector<double> gap(count);
  for (std::size_t i = 0; i < count; ++i) {
    out.p.push_back(p_in[order[i]]);
    out.q.push_back(q_in[order[i]]);
    if (!std::isfinite(out.p.back()) || !std::isfinite(out.q.back()))
      throw DomainError("rounding inputs must be finite");
    gap[i] = std::abs(out.p[i] - out.q[i]);
    out.epsilon = std::max(out.epsilon, gap[i]);
    out.delta += gap[i];
  }

  const auto& p = out.p;
  const auto& q = out.q;
  const double admit = 2.0 * out.epsilon + 4.0 * out.delta;
  std::vector<double> grid{p.front()};

  for (std::size_t n = 1; n < count; ++n) {
    const double top = grid.back();
    if (p[n] < top + admit) continue;
    double candidate = p[n];
    // Push the candidate up until no pair straddles the rounding midpoint
    // between `top` and it. Each push moves the midpoint past one pair for
    // good, so the total push is at most 2 delta.
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < count; ++i) {
        if (i == n) continue;
        if (rounds_up(p[i], top, candidate) != rounds_up(q[i], top, candidate)) {
          candidate += 2.0 * gap[i];
          changed = true;
        }
      }
    }
    grid.push_back(candidate);
  }

  out.grid = RoundingGrid(std::move(grid), 0.0);
  return out;
}

RoundingGrid densify_grid(const RoundingResult& result, double fallback_density) {
  const double spacing = result.delta > 0.0 ? 14.0 * result.delta : fallback_density;
  if (!(spacing > 0.0)) throw DomainError("densify_grid needs delta > 0 or a positive fallback density");

  const auto base = result.grid.values();
  std::vector<double> values(base.begin(), base.end());
  for (std::size_t g = 0; g + 1 < base.size(); ++g) {
    const double lower = base[g], upper = base[g + 1];
    for (double x = lower + spacing; x <= upper - spacing; x += spacing) values.push_back(x);
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  RoundingGrid dense(std::move(values), spacing);

  for (std::size_t i = 0; i < result.p.size(); ++i)
    for (double x : {result.p[i], result.q[i]})
      if (dense.round(x) != result.grid.round(x))
        throw std::logic_error("densify_grid changed the rounding of an input");
  return dense;
}

namespace {

void add_matched(const PersistencePair& a, const PersistencePair& b, std::vector<double>& p,
                 std::vector<double>& q) {
  p.push_back(a.birth);
  q.push_back(b.birth);
  p.push_back(a.death);
  q.push_back(b.death);
}

}  // namespace

PairRounding pair_rounding_grid(
    std::span<const std::pair<PersistenceDiagram, PersistenceDiagram>> pairs,
    double fallback_density) {
  std::vector<double> p, q;
  for (const auto& [a, b] : pairs) {
    std::vector<int> degrees;
    for (const auto& [d, pts] : a.degrees) degrees.push_back(d);
    for (const auto& [d, pts] : b.degrees) degrees.push_back(d);
    std::sort(degrees.begin(), degrees.end());
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());

    for (int degree : degrees) {
      const auto pa = a.points(degree);
      const auto pb = b.points(degree);

      std::vector<double> ea, eb;
      for (const auto& x : pa)
        if (x.essential()) ea.push_back(x.birth);
      for (const auto& x : pb)
        if (x.essential()) eb.push_back(x.birth);
      if (ea.size() != eb.size())
        throw DomainError("paired diagrams must have equal essential counts in every degree");
      std::sort(ea.begin(), ea.end());
      std::sort(eb.begin(), eb.end());
      p.insert(p.end(), ea.begin(), ea.end());
      q.insert(q.end(), eb.begin(), eb.end());

      for (const auto& [i, j] : wasserstein_matching(pa, pb, 1.0).pairs) {
        if (i >= 0 && j >= 0) {
          add_matched(pa[static_cast<std::size_t>(i)], pb[static_cast<std::size_t>(j)], p, q);
        } else if (i >= 0) {
          const auto& x = pa[static_cast<std::size_t>(i)];
          const double mid = 0.5 * (x.birth + x.death);
          add_matched(x, {mid, mid}, p, q);
        } else {
          const auto& y = pb[static_cast<std::size_t>(j)];
          const double mid = 0.5 * (y.birth + y.death);
          add_matched({mid, mid}, y, p, q);
        }
      }
    }
  }
  if (p.empty()) {
    p.push_back(0.0);
    q.push_back(0.0);
  }
  PairRounding out{rounding_grid(p, q), {}};
  out.grid = densify_grid(out.rounding, fallback_density);
  return out;
}

}  // namespace distop
