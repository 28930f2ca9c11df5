#include "distop/distributed.hpp"

#include "distop/filtration.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace distop {
namespace {

std::size_t closure_floor(std::size_t k, int skeleton_dim) {
  const long lo = static_cast<long>(k) - skeleton_dim - 1;
  return static_cast<std::size_t>(std::max(1L, lo));
}

// Colex rank of a sorted subset among subsets of the same size.
std::size_t colex_rank(const Subset& s) {
  std::size_t rank = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    rank += static_cast<std::size_t>(binomial(s[i], i + 1));
  return rank;
}

// Calls visit(sub) for every sub-tuple of `s` of the given size.
template <class Visit>
void for_each_subtuple(const Subset& s, std::size_t size, Visit&& visit) {
  Subset sub(size);
  for_each_combination(s.size(), size, [&](const Subset& positions) {
    for (std::size_t i = 0; i < size; ++i) sub[i] = s[positions[i]];
    visit(static_cast<const Subset&>(sub));
    return true;
  });
}

}  // namespace

namespace {

std::string describe(const CoverReport& r) {
  auto fmt = [](const Subset& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
  };
  std::string msg = "collection fails the cover/closure conditions";
  if (!r.missing_pairs.empty()) msg += "; uncovered " + fmt(r.missing_pairs.front());
  if (!r.missing_closures.empty()) msg += "; missing " + fmt(r.missing_closures.front());
  return msg;
}

}  // namespace

CoverClosureError::CoverClosureError(CoverReport report)
    : DomainError(describe(report)), report_(std::move(report)) {}

CoverReport check_cover_closure(const SubsetCollection& c, std::size_t k, int skeleton_dim,
                                std::size_t p) {
  const std::size_t n = c.ground_size();
  CoverReport report;

  for (std::size_t q = 1; q <= p && q <= n; ++q) {
    std::vector<bool> covered(static_cast<std::size_t>(binomial(n, q)), false);
    for (const auto& s : c.subsets())
      if (s.size() == k && q <= k) for_each_subtuple(s, q, [&](const Subset& sub) { covered[colex_rank(sub)] = true; });
    for_each_combination(n, q, [&](const Subset& sub) {
      if (!covered[colex_rank(sub)]) report.missing_pairs.push_back(sub);
      return true;
    });
  }
  report.covering_ok = report.missing_pairs.empty();

  const std::size_t lo = closure_floor(k, skeleton_dim);
  for (const auto& s : c.subsets()) {
    if (s.size() != k) continue;
    for (std::size_t size = lo; size < k; ++size)
      for_each_subtuple(s, size, [&](const Subset& sub) {
        if (!c.contains(sub)) report.missing_closures.push_back(sub);
      });
  }
  std::sort(report.missing_closures.begin(), report.missing_closures.end());
  report.missing_closures.erase(
      std::unique(report.missing_closures.begin(), report.missing_closures.end()),
      report.missing_closures.end());
  report.closure_ok = report.missing_closures.empty();
  return report;
}

SubsetCollection closure_completion(const SubsetCollection& c, std::size_t k, int skeleton_dim) {
  std::vector<Subset> all(c.subsets().begin(), c.subsets().end());
  const std::size_t lo = closure_floor(k, skeleton_dim);
  for (const auto& s : c.subsets()) {
    if (s.size() != k) continue;
    for (std::size_t size = lo; size < k; ++size)
      for_each_subtuple(s, size, [&](const Subset& sub) { all.push_back(sub); });
  }
  return SubsetCollection(c.ground_size(), std::move(all));
}

namespace {

void check_cover_domain(std::size_t n, std::size_t k, std::size_t p) {
  if (p < 1) throw DomainError("p must be >= 1");
  if (p > k) throw DomainError("p must satisfy p <= k");
  if (k > n) throw DomainError("k must satisfy k <= n");
}

double raw_bound(std::size_t n, std::size_t k, std::size_t p, std::size_t m_subsets) {
  const double ratio = static_cast<double>(k - p + 1) / static_cast<double>(n - p + 1);
  const double hit = std::min(1.0, std::pow(ratio, static_cast<double>(p)));
  return 1.0 - binomial(n, p) * std::pow(1.0 - hit, static_cast<double>(m_subsets));
}

}  // namespace

double cover_probability_raw(std::size_t n, std::size_t k, std::size_t p, std::size_t m_subsets) {
  check_cover_domain(n, k, p);
  if (m_subsets < 1) throw DomainError("number of subsets M must be >= 1");
  return raw_bound(n, k, p, m_subsets);
}

double cover_probability_lower_bound(std::size_t n, std::size_t k, std::size_t p,
                                     std::size_t m_subsets) {
  return std::clamp(cover_probability_raw(n, k, p, m_subsets), 0.0, 1.0);
}

std::size_t required_sample_count(std::size_t n, std::size_t k, std::size_t p, double eps) {
  check_cover_domain(n, k, p);
  if (!(eps > 0.0 && eps < 1.0)) throw DomainError("eps must lie in (0, 1)");
  const double pd = static_cast<double>(p);
  const double log_term = pd * std::log(static_cast<double>(n) * std::numbers::e / pd) - std::log1p(-eps);
  const double ratio = static_cast<double>(n - p + 1) / static_cast<double>(k - p + 1);
  return static_cast<std::size_t>(std::ceil(log_term * std::pow(ratio, pd)));
}

double dense_cover_probability_raw(std::size_t s, std::size_t k, std::size_t p,
                                   std::size_t m_subsets) {
  if (p < 1) throw DomainError("p must be >= 1");
  if (p > k) throw DomainError("p must satisfy p <= k");
  if (p > s) throw DomainError("p must satisfy p <= s");
  if (m_subsets < 1) throw DomainError("number of subsets M must be >= 1");
  return raw_bound(s, k, p, m_subsets);
}

double dense_cover_probability_bound(std::size_t s, std::size_t k, std::size_t p,
                                     std::size_t m_subsets) {
  return std::clamp(dense_cover_probability_raw(s, k, p, m_subsets), 0.0, 1.0);
}

MixedMeasureSampler::MixedMeasureSampler(const DistanceMatrix& x, const DistanceMatrix& y,
                                         const Bijection& phi, std::size_t centers,
                                         Index seed_index)
    : mixed_(x.size()) {
  if (x.size() != y.size() || phi.size() != x.size())
    throw DomainError("X, Y and phi must have the same size");
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) mixed_.set(i, j, std::max(x(i, j), y(phi[i], phi[j])));

  auto fps = furthest_point_sample(mixed_, centers, seed_index);
  centers_ = std::move(fps.indices);
  delta_ = fps.delta;

  cells_.assign(centers_.size(), {});
  std::vector<long> center_slot(n, -1);
  for (std::size_t c = 0; c < centers_.size(); ++c) center_slot[centers_[c]] = static_cast<long>(c);
  for (std::size_t i = 0; i < n; ++i) {
    if (center_slot[i] >= 0) {
      cells_[static_cast<std::size_t>(center_slot[i])].push_back(static_cast<Index>(i));
      continue;
    }
    std::size_t best = 0;
    for (std::size_t c = 1; c < centers_.size(); ++c) {
      const double dc = mixed_(i, centers_[c]), db = mixed_(i, centers_[best]);
      if (dc < db || (dc == db && centers_[c] < centers_[best])) best = c;
    }
    cells_[best].push_back(static_cast<Index>(i));
  }
}

std::vector<double> MixedMeasureSampler::point_probabilities() const {
  std::vector<double> out(mixed_.size(), 0.0);
  const double per_cell = 1.0 / static_cast<double>(cells_.size());
  for (const auto& cell : cells_)
    for (Index i : cell) out[i] += per_cell / static_cast<double>(cell.size());
  return out;
}

std::vector<double> MixedMeasureSampler::cell_measures() const {
  const auto prob = point_probabilities();
  std::vector<double> out;
  for (const auto& cell : cells_) {
    double total = 0.0;
    for (Index i : cell) total += prob[i];
    out.push_back(total);
  }
  return out;
}

Index MixedMeasureSampler::draw(std::mt19937_64& rng) const {
  std::uniform_int_distribution<std::size_t> pick_cell(0, cells_.size() - 1);
  const auto& cell = cells_[pick_cell(rng)];
  std::uniform_int_distribution<std::size_t> pick_point(0, cell.size() - 1);
  return cell[pick_point(rng)];
}

Subset MixedMeasureSampler::draw_subset(std::size_t k, std::mt19937_64& rng) const {
  if (k > mixed_.size()) throw DomainError("subset size must satisfy k <= n");
  Subset out;
  while (out.size() < k) {
    const Index i = draw(rng);
    const auto it = std::lower_bound(out.begin(), out.end(), i);
    if (it == out.end() || *it != i) out.insert(it, i);
  }
  return out;
}

SubsetCollection MixedMeasureSampler::sample_subsets(std::size_t k, std::size_t count,
                                                     std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  std::vector<Subset> subsets;
  for (std::size_t i = 0; i < count; ++i) subsets.push_back(draw_subset(k, rng));
  return SubsetCollection(mixed_.size(), std::move(subsets));
}

}  // namespace distop
