#include "distop/alignment.hpp"

#include "distop/distributed.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace distop {

void adam_step(AdamState& state, std::span<double> coords, std::span<const double> grad) {
  std::vector<std::size_t> all(coords.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  adam_step_sparse(state, coords, grad, all);
}

void adam_step_sparse(AdamState& state, std::span<double> coords, std::span<const double> grad,
                      std::span<const std::size_t> active) {
  if (coords.size() != grad.size() || state.first_moment.size() != coords.size() ||
      state.second_moment.size() != coords.size())
    throw DomainError("Adam state, coordinates and gradient must have the same shape");
  ++state.step_count;
  const double t = static_cast<double>(state.step_count);
  const double c1 = 1.0 - std::pow(state.beta1, t);
  const double c2 = 1.0 - std::pow(state.beta2, t);
  for (std::size_t i : active) {
    if (i >= coords.size()) throw DomainError("active coordinate out of range");
    const double g = grad[i];
    double& m = state.first_moment[i];
    double& v = state.second_moment[i];
    m = state.beta1 * m + (1.0 - state.beta1) * g;
    v = state.beta2 * v + (1.0 - state.beta2) * g * g;
    coords[i] -= state.lr * (m / c1) / (std::sqrt(v / c2) + state.eps_stab);
  }
}

SubsetLoss subset_loss(const PointCloud& x_sub, const PointCloud& y_sub) {
  if (x_sub.size() != y_sub.size()) throw DomainError("subsets must have the same cardinality");
  SubsetLoss out;
  out.x = rips_persistence(pairwise_distances(x_sub), 1);
  out.y = rips_persistence(pairwise_distances(y_sub), 1);
  for (int q = 0; q < 2; ++q) {
    out.matchings[q] = wasserstein_matching(out.x.diagram.points(q), out.y.diagram.points(q), 2.0);
    out.loss += out.matchings[q].total;
  }
  return out;
}

namespace {

// Longest edge of a simplex; ties go to the lexicographically first edge.
std::pair<Index, Index> critical_edge(const Simplex& s, const PointCloud& y) {
  std::pair<Index, Index> best{s.vertices[0], s.vertices[1]};
  double best_len = -1.0;
  for (std::size_t a = 0; a < s.vertices.size(); ++a)
    for (std::size_t b = a + 1; b < s.vertices.size(); ++b) {
      const double len = euclidean_distance(y.point(s.vertices[a]), y.point(s.vertices[b]));
      if (len > best_len) {
        best_len = len;
        best = {s.vertices[a], s.vertices[b]};
      }
    }
  return best;
}

// Adds weight * d|y_a - y_b| / dY to the gradient.
void push_edge(const PointCloud& y, std::pair<Index, Index> edge, double weight,
               std::vector<double>& grad) {
  const auto [a, b] = edge;
  const auto pa = y.point(a), pb = y.point(b);
  const double len = euclidean_distance(pa, pb);
  if (len == 0.0 || weight == 0.0) return;
  const std::size_t dim = y.dim();
  for (std::size_t c = 0; c < dim; ++c) {
    const double u = (pa[c] - pb[c]) / len;
    grad[a * dim + c] += weight * u;
    grad[b * dim + c] -= weight * u;
  }
}

}  // namespace

LossGradient subset_loss_gradient(const PointCloud& x_sub, const PointCloud& y_sub) {
  const SubsetLoss sl = subset_loss(x_sub, y_sub);
  LossGradient out;
  out.loss = sl.loss;
  out.gradient.assign(y_sub.coords().size(), 0.0);

  for (int q = 0; q < 2; ++q) {
    const auto xs = sl.x.diagram.points(q);
    const auto ys = sl.y.diagram.points(q);
    const auto& critical = sl.y.pairing.degrees.at(q);
    for (const auto& [i, j] : sl.matchings[q].pairs) {
      if (j < 0) continue;  // x point against the diagonal: no dependence on Y
      const auto& yp = ys[static_cast<std::size_t>(j)];
      const auto& cp = critical[static_cast<std::size_t>(j)];
      double d_birth = 0.0, d_death = 0.0;
      if (i >= 0) {
        const auto& xp = xs[static_cast<std::size_t>(i)];
        const double db = yp.birth - xp.birth, dd = yp.death - xp.death;
        // Sup-norm cost: the derivative of cost^2 flows to the larger coordinate.
        if (std::abs(db) >= std::abs(dd))
          d_birth = 2.0 * db;
        else
          d_death = 2.0 * dd;
      } else {
        const double half = 0.5 * (yp.death - yp.birth);
        d_death = half;
        d_birth = -half;
      }
      if (q > 0 && d_birth != 0.0) push_edge(y_sub, critical_edge(cp.birth, y_sub), d_birth, out.gradient);
      if (cp.death && d_death != 0.0)
        push_edge(y_sub, critical_edge(*cp.death, y_sub), d_death, out.gradient);
    }
  }

  std::vector<double> lengths;
  for (Index a = 0; a < y_sub.size(); ++a)
    for (Index b = a + 1; b < y_sub.size(); ++b)
      lengths.push_back(euclidean_distance(y_sub.point(a), y_sub.point(b)));
  std::sort(lengths.begin(), lengths.end());
  for (std::size_t i = 1; i < lengths.size(); ++i)
    out.min_edge_gap = std::min(out.min_edge_gap, lengths[i] - lengths[i - 1]);
  return out;
}

AlignResult align(const PointCloud& x, const PointCloud& y0, const AlignConfig& cfg) {
  if (x.size() != y0.size() || x.dim() != y0.dim()) throw DomainError("X and Y0 must have the same shape");
  if (cfg.k < 2 || cfg.k > x.size()) throw DomainError("subset size k must lie in [2, n]");
  if (cfg.iterations < 1) throw DomainError("iterations must be >= 1");

  const std::size_t dim = x.dim();
  std::vector<double> coords(y0.coords().begin(), y0.coords().end());
  AdamState state(coords.size());
  state.lr = cfg.lr;
  state.beta1 = cfg.beta1;
  state.beta2 = cfg.beta2;

  AlignResult out;
  out.loss_history.reserve(cfg.iterations);
  out.snapshots.push_back({0, y0});
  std::mt19937_64 rng(cfg.seed);
  std::vector<double> full_grad(coords.size(), 0.0);
  std::vector<std::size_t> active;

  for (std::size_t it = 1; it <= cfg.iterations; ++it) {
    const Subset s = random_subset(x.size(), cfg.k, rng);
    const PointCloud y(dim, coords);
    const LossGradient lg = subset_loss_gradient(x.restrict(s), y.restrict(s));
    out.loss_history.push_back(lg.loss);

    active.clear();
    for (std::size_t p = 0; p < s.size(); ++p)
      for (std::size_t c = 0; c < dim; ++c) {
        const std::size_t idx = s[p] * dim + c;
        full_grad[idx] = lg.gradient[p * dim + c];
        active.push_back(idx);
      }
    adam_step_sparse(state, coords, full_grad, active);
    for (std::size_t idx : active) full_grad[idx] = 0.0;

    const bool snap = it == cfg.iterations || (cfg.snapshot_every > 0 && it % cfg.snapshot_every == 0);
    if (snap) out.snapshots.push_back({it, PointCloud(dim, coords)});
  }
  out.final_cloud = PointCloud(dim, std::move(coords));
  return out;
}

}  // namespace distop
