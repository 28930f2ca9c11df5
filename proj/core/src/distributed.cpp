#include "distop/distributed.hpp"

#include "distop/parallel.hpp"

#include <algorithm>
#include <cctype>

namespace distop {

std::string to_string(InvariantKind kind) {
  switch (kind) {
    case InvariantKind::RP: return "RP";
    case InvariantKind::CP: return "CP";
    case InvariantKind::RE: return "RE";
    case InvariantKind::CE: return "CE";
  }
  return "?";
}

InvariantKind parse_kind(std::string_view text) {
  std::string upper(text);
  for (char& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (upper == "RP") return InvariantKind::RP;
  if (upper == "CP") return InvariantKind::CP;
  if (upper == "RE") return InvariantKind::RE;
  if (upper == "CE") return InvariantKind::CE;
  throw DomainError("invariant kind must be one of rp, cp, re, ce (got '" + std::string(text) + "')");
}

std::size_t DistributedInvariant::ground_size() const {
  std::size_t n = 0;
  for (const auto& [subset, value] : entries)
    if (!subset.empty()) n = std::max<std::size_t>(n, subset.back() + 1u);
  return n;
}

namespace {

Subset normalized(Subset s, std::size_t n) {
  std::sort(s.begin(), s.end());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] >= n) throw DomainError("subset entry out of range");
    if (i > 0 && s[i] == s[i - 1]) throw DomainError("subset entries must be distinct");
  }
  return s;
}

}  // namespace

SubsetCollection::SubsetCollection(std::size_t n, std::vector<Subset> subsets) : n_(n) {
  subsets_.reserve(subsets.size());
  for (auto& s : subsets) subsets_.push_back(normalized(std::move(s), n_));
  std::sort(subsets_.begin(), subsets_.end());
  subsets_.erase(std::unique(subsets_.begin(), subsets_.end()), subsets_.end());
}

bool SubsetCollection::contains(const Subset& s) const {
  return std::binary_search(subsets_.begin(), subsets_.end(), s);
}

bool SubsetCollection::insert(Subset s) {
  s = normalized(std::move(s), n_);
  const auto it = std::lower_bound(subsets_.begin(), subsets_.end(), s);
  if (it != subsets_.end() && *it == s) return false;
  subsets_.insert(it, std::move(s));
  return true;
}

double binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  k = std::min(k, n - k);
  double out = 1.0;
  for (std::size_t i = 1; i <= k; ++i)
    out = out * static_cast<double>(n - k + i) / static_cast<double>(i);
  return std::round(out);
}

SubsetEnumerator::SubsetEnumerator(std::size_t n, std::size_t k) : n_(n), k_(k) {
  if (k > n) throw DomainError("subset size must satisfy 0 <= k <= n");
  current_.resize(k);
  for (std::size_t i = 0; i < k; ++i) current_[i] = static_cast<Index>(i);
}

bool SubsetEnumerator::next(Subset& out) {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    out = current_;
    return true;
  }
  std::size_t pos = k_;
  while (pos > 0 && current_[pos - 1] == n_ - k_ + pos - 1) --pos;
  if (pos == 0) {
    done_ = true;
    return false;
  }
  ++current_[pos - 1];
  for (std::size_t j = pos; j < k_; ++j) current_[j] = current_[j - 1] + 1;
  out = current_;
  return true;
}

std::vector<Subset> enumerate_subsets(std::size_t n, std::size_t k) {
  std::vector<Subset> out;
  SubsetEnumerator e(n, k);
  Subset s;
  while (e.next(s)) out.push_back(s);
  return out;
}

Subset random_subset(std::size_t n, std::size_t k, std::mt19937_64& rng) {
  if (k > n) throw DomainError("subset size must satisfy k <= n");
  // Partial Fisher-Yates over a scratch permutation.
  std::vector<Index> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = static_cast<Index>(i);
  for (std::size_t i = 0; i < k; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, n - 1);
    std::swap(pool[i], pool[pick(rng)]);
  }
  Subset out(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
  std::sort(out.begin(), out.end());
  return out;
}

SubsetCollection sample_subsets(std::size_t n, std::size_t k, std::size_t count,
                                std::uint64_t seed) {
  if (k > n) throw DomainError("subset size must satisfy k <= n");
  if (count < 1) throw DomainError("number of subsets M must be >= 1");
  std::mt19937_64 rng(seed);
  std::vector<Subset> subsets;
  subsets.reserve(count);
  for (std::size_t i = 0; i < count; ++i) subsets.push_back(random_subset(n, k, rng));
  return SubsetCollection(n, std::move(subsets));
}

InvariantValue compute_invariant(const PointCloud& cloud, InvariantKind kind, int skeleton_dim) {
  if (skeleton_dim < 0) throw DomainError("skeleton dimension must be non-negative");
  const FilteredComplex complex = is_rips_kind(kind)
                                      ? rips_filtration(pairwise_distances(cloud), skeleton_dim)
                                      : cech_filtration(cloud, skeleton_dim);
  if (is_persistence_kind(kind)) return compute_persistence(complex).diagram;
  return euler_curve(complex);
}

DistributedInvariant compute_distributed(const PointCloud& cloud, const SubsetCollection& subsets,
                                         InvariantKind kind, int skeleton_dim) {
  if (subsets.ground_size() > cloud.size())
    throw DomainError("subset collection ground set exceeds the point cloud");
  const auto members = subsets.subsets();
  std::vector<InvariantValue> values(members.size());
  parallel_for(members.size(), [&](std::size_t i) {
    values[i] = compute_invariant(cloud.restrict(members[i]), kind, skeleton_dim);
  });

  DistributedInvariant out;
  out.kind = kind;
  out.skeleton_dim = skeleton_dim;
  for (std::size_t i = 0; i < members.size(); ++i)
    out.entries.emplace_hint(out.entries.end(), members[i], std::move(values[i]));
  return out;
}

DistributedInvariant compute_distributed(const DistanceMatrix& d, const SubsetCollection& subsets,
                                         InvariantKind kind, int skeleton_dim) {
  if (!is_rips_kind(kind)) throw DomainError("Cech invariants need point coordinates");
  if (skeleton_dim < 0) throw DomainError("skeleton dimension must be non-negative");
  if (subsets.ground_size() > d.size())
    throw DomainError("subset collection ground set exceeds the distance matrix");
  const auto members = subsets.subsets();
  std::vector<InvariantValue> values(members.size());
  parallel_for(members.size(), [&](std::size_t i) {
    const FilteredComplex complex = rips_filtration(d.restrict(members[i]), skeleton_dim);
    if (kind == InvariantKind::RP)
      values[i] = compute_persistence(complex).diagram;
    else
      values[i] = euler_curve(complex);
  });

  DistributedInvariant out;
  out.kind = kind;
  out.skeleton_dim = skeleton_dim;
  for (std::size_t i = 0; i < members.size(); ++i)
    out.entries.emplace_hint(out.entries.end(), members[i], std::move(values[i]));
  return out;
}

}  // namespace distop
