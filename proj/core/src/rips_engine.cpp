// Rips persistence by cohomology reduction with clearing. Coboundaries are
// enumerated on demand, so only the simplices of the current dimension are
// ever stored. The simplex order is (time, dimension, lexicographic
// vertices); the anti-transposed reduction in that order yields exactly the
// persistence pairs of the homology reduction in compute_persistence.

#include "distop/persistence.hpp"

#include "persistence_internal.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <queue>
#include <unordered_map>
#include <unordered_set>

namespace distop {
namespace {

constexpr int kMaxVertices = 4;  // simplices up to dimension 3
constexpr unsigned kBits = 16;

// Vertex tuple packed most-significant-first, so integer order on codes of
// equal size is lexicographic order on the tuples.
using Code = std::uint64_t;

struct Entry {
  double time;
  Code code;
  friend bool operator<(const Entry& a, const Entry& b) noexcept {
    return a.time != b.time ? a.time < b.time : a.code < b.code;
  }
  friend bool operator>(const Entry& a, const Entry& b) noexcept { return b < a; }
  friend bool operator==(const Entry& a, const Entry& b) noexcept {
    return a.time == b.time && a.code == b.code;
  }
};

Code encode(std::span<const Index> vertices) {
  Code code = 0;
  for (std::size_t i = 0; i < kMaxVertices; ++i)
    code = (code << kBits) | (i < vertices.size() ? vertices[i] : 0);
  return code;
}

void decode(Code code, int size, Subset& out) {
  out.resize(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i)
    out[static_cast<std::size_t>(i)] =
        static_cast<Index>((code >> (kBits * (kMaxVertices - 1 - i))) & 0xFFFF);
}

class RipsEngine {
public:
  RipsEngine(const DistanceMatrix& d, double threshold) : d_(d), threshold_(threshold) {}

  PersistenceResult run(int max_degree) {
    if (max_degree < 0) throw DomainError("max degree must be non-negative");
    if (max_degree + 2 > kMaxVertices) throw DomainError("rips_persistence supports degrees up to 2");
    if (d_.size() >= (1u << kBits)) throw DomainError("rips_persistence supports at most 65535 points");

    std::vector<Entry> columns = edges();
    degree_zero(columns);
    for (int degree = 1; degree <= max_degree; ++degree) {
      if (degree > 1) columns = simplices_of_size(degree + 1);
      cohomology(degree, columns);
    }
    return collector_.finish(max_degree, -1);
  }

private:
  std::vector<Entry> edges() const {
    std::vector<Entry> out;
    const auto n = static_cast<Index>(d_.size());
    for (Index i = 0; i < n; ++i)
      for (Index j = i + 1; j < n; ++j)
        if (d_(i, j) <= threshold_) {
          const std::array<Index, 2> v{i, j};
          out.push_back({d_(i, j), encode(v)});
        }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<Entry> simplices_of_size(int size) const {
    std::vector<Entry> out;
    for_each_combination(d_.size(), static_cast<std::size_t>(size), [&](const Subset& s) {
      const double t = diameter(s);
      if (t <= threshold_) out.push_back({t, encode(s)});
      return true;
    });
    std::sort(out.begin(), out.end());
    return out;
  }

  double diameter(std::span<const Index> s) const {
    double t = 0.0;
    for (std::size_t a = 0; a < s.size(); ++a)
      for (std::size_t b = a + 1; b < s.size(); ++b) t = std::max(t, d_(s[a], s[b]));
    return t;
  }

  Simplex make_simplex(const Entry& e, int size) const {
    Simplex s;
    decode(e.code, size, s.vertices);
    s.time = size == 1 ? 0.0 : e.time;
    return s;
  }

  // Union-find with the oldest vertex (lowest index) as representative: the
  // pivot of a reduced edge column is the younger of the two roots.
  void degree_zero(const std::vector<Entry>& edges) {
    const std::size_t n = d_.size();
    std::vector<Index> parent(n);
    std::iota(parent.begin(), parent.end(), Index{0});
    auto find = [&](Index x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
      }
      return x;
    };

    Subset v;
    for (const auto& e : edges) {
      decode(e.code, 2, v);
      const Index a = find(v[0]);
      const Index b = find(v[1]);
      if (a == b) continue;
      const Index older = std::min(a, b);
      const Index younger = std::max(a, b);
      parent[younger] = older;
      cleared_.insert(e.code);
      const Simplex birth{{younger}, 0.0};
      const Simplex death = make_simplex(e, 2);
      collector_.add(0, birth, &death);
    }
    for (Index i = 0; i < n; ++i)
      if (find(i) == i) collector_.add(0, Simplex{{i}, 0.0}, nullptr);
  }

  void cofacets(const Entry& simplex, int size, std::vector<Entry>& out) const {
    Subset v;
    decode(simplex.code, size, v);
    out.clear();
    const auto n = static_cast<Index>(d_.size());
    std::array<Index, kMaxVertices> merged{};
    std::size_t pos = 0;
    for (Index w = 0; w < n; ++w) {
      while (pos < v.size() && v[pos] < w) ++pos;
      if (pos < v.size() && v[pos] == w) continue;
      double t = simplex.time;
      for (Index u : v) t = std::max(t, d_(u, w));
      if (t > threshold_) continue;
      std::copy(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(pos), merged.begin());
      merged[pos] = w;
      std::copy(v.begin() + static_cast<std::ptrdiff_t>(pos), v.end(),
                merged.begin() + static_cast<std::ptrdiff_t>(pos) + 1);
      out.push_back({t, encode(std::span<const Index>(merged.data(), v.size() + 1))});
    }
  }

  using Heap = std::priority_queue<Entry, std::vector<Entry>, std::greater<>>;

  static std::optional<Entry> pop_pivot(Heap& heap) {
    while (!heap.empty()) {
      const Entry top = heap.top();
      heap.pop();
      if (!heap.empty() && heap.top() == top) {
        heap.pop();
        continue;
      }
      return top;
    }
    return std::nullopt;
  }

  void cohomology(int degree, const std::vector<Entry>& columns) {
    const int size = degree + 1;
    std::unordered_map<Code, std::size_t> owner;  // pivot -> index into reductions
    std::vector<std::vector<Entry>> reductions;    // simplices summed into each stored column
    std::unordered_set<Code> next_cleared;
    std::vector<Entry> scratch;

    for (auto it = columns.rbegin(); it != columns.rend(); ++it) {
      const Entry& sigma = *it;
      if (cleared_.count(sigma.code)) continue;

      cofacets(sigma, size, scratch);
      std::optional<Entry> pivot;
      if (!scratch.empty()) pivot = *std::min_element(scratch.begin(), scratch.end());

      std::vector<Entry> combination{sigma};
      if (pivot && owner.count(pivot->code)) {
        Heap heap(std::greater<>{}, scratch);
        pivot = pop_pivot(heap);
        while (pivot) {
          const auto found = owner.find(pivot->code);
          if (found == owner.end()) break;
          heap.push(*pivot);
          for (const Entry& s : reductions[found->second]) {
            cofacets(s, size, scratch);
            for (const Entry& c : scratch) heap.push(c);
          }
          add_combination(combination, reductions[found->second]);
          pivot = pop_pivot(heap);
        }
      }

      const Simplex birth = make_simplex(sigma, size);
      if (!pivot) {
        collector_.add(degree, birth, nullptr);
        continue;
      }
      owner.emplace(pivot->code, reductions.size());
      reductions.push_back(std::move(combination));
      next_cleared.insert(pivot->code);
      const Simplex death = make_simplex(*pivot, size + 1);
      collector_.add(degree, birth, &death);
    }
    cleared_ = std::move(next_cleared);
  }

  static void add_combination(std::vector<Entry>& target, const std::vector<Entry>& source) {
    std::vector<Entry> merged;
    merged.reserve(target.size() + source.size());
    std::vector<Entry> a = target;
    std::vector<Entry> b = source;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(merged));
    target.swap(merged);
  }

  const DistanceMatrix& d_;
  double threshold_;
  std::unordered_set<Code> cleared_;
  detail::PairCollector collector_;
};

}  // namespace

PersistenceResult rips_persistence(const DistanceMatrix& d, int max_degree, double threshold) {
  return RipsEngine(d, threshold).run(max_degree);
}

}  // namespace distop
