#include "distop/persistence.hpp"

#include "persistence_internal.hpp"

#include <algorithm>
#include <unordered_map>

namespace distop {

std::span<const PersistencePair> PersistenceDiagram::points(int degree) const {
  const auto it = degrees.find(degree);
  if (it == degrees.end()) return {};
  return it->second;
}

std::vector<int> PersistenceDiagram::untruncated_degrees() const {
  std::vector<int> out;
  for (const auto& [degree, pts] : degrees)
    if (degree != truncated_degree) out.push_back(degree);
  return out;
}

std::size_t PersistenceDiagram::essential_count(int degree) const {
  const auto pts = points(degree);
  return static_cast<std::size_t>(
      std::count_if(pts.begin(), pts.end(), [](const PersistencePair& p) { return p.essential(); }));
}

namespace detail {

void PairCollector::add(int degree, const Simplex& birth, const Simplex* death) {
  const double death_time = death ? death->time : kInfinity;
  if (death && death_time <= birth.time) return;  // zero persistence
  auto& bucket = entries_[degree];
  bucket.push_back({{birth.time, death_time}, {birth, death ? std::optional<Simplex>(*death) : std::nullopt}});
}

PersistenceResult PairCollector::finish(int max_degree, int truncated_degree) {
  PersistenceResult result;
  result.diagram.truncated_degree = truncated_degree;
  for (int d = 0; d <= max_degree; ++d) {
    auto& bucket = entries_[d];
    std::sort(bucket.begin(), bucket.end(), [](const Entry& a, const Entry& b) {
      if (a.point != b.point) return a.point < b.point;
      if (a.critical.birth.vertices != b.critical.birth.vertices)
        return a.critical.birth.vertices < b.critical.birth.vertices;
      const Subset none;
      const auto& da = a.critical.death ? a.critical.death->vertices : none;
      const auto& db = b.critical.death ? b.critical.death->vertices : none;
      return da < db;
    });
    auto& pts = result.diagram.degrees[d];
    auto& crit = result.pairing.degrees[d];
    pts.reserve(bucket.size());
    crit.reserve(bucket.size());
    for (auto& e : bucket) {
      pts.push_back(e.point);
      crit.push_back(std::move(e.critical));
    }
  }
  return result;
}

}  // namespace detail

namespace {

struct SubsetHash {
  std::size_t operator()(const Subset& s) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (Index v : s) {
      h ^= v;
      h *= 0x100000001b3ULL;
    }
    return h;
  }
};

// Z/2 sum of two sorted columns.
void add_column(std::vector<std::size_t>& target, const std::vector<std::size_t>& source,
                std::vector<std::size_t>& scratch) {
  scratch.clear();
  std::set_symmetric_difference(target.begin(), target.end(), source.begin(), source.end(),
                                std::back_inserter(scratch));
  target.swap(scratch);
}

}  // namespace

PersistenceResult compute_persistence(const FilteredComplex& complex) {
  const auto simplices = complex.simplices();
  const std::size_t count = simplices.size();

  std::unordered_map<Subset, std::size_t, SubsetHash> position;
  position.reserve(count);
  for (std::size_t i = 0; i < count; ++i) position.emplace(simplices[i].vertices, i);

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::vector<std::size_t>> columns(count);
  std::vector<std::size_t> pivot_owner(count, kNone);
  std::vector<bool> negative(count, false);
  std::vector<std::size_t> scratch;

  for (std::size_t j = 0; j < count; ++j) {
    const auto& s = simplices[j];
    auto& column = columns[j];
    if (s.dim() > 0) {
      column.reserve(s.vertices.size());
      for (std::size_t drop = 0; drop < s.vertices.size(); ++drop) {
        Subset face = s.vertices;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
        column.push_back(position.at(face));
      }
      std::sort(column.begin(), column.end());
    }
    while (!column.empty() && pivot_owner[column.back()] != kNone)
      add_column(column, columns[pivot_owner[column.back()]], scratch);
    if (!column.empty()) {
      pivot_owner[column.back()] = j;
      negative[j] = true;
    }
  }

  detail::PairCollector collector;
  for (std::size_t i = 0; i < count; ++i) {
    if (negative[i]) continue;
    const auto& birth = simplices[i];
    if (pivot_owner[i] != kNone)
      collector.add(birth.dim(), birth, &simplices[pivot_owner[i]]);
    else
      collector.add(birth.dim(), birth, nullptr);
  }
  const int m = complex.skeleton_dim();
  return collector.finish(m, m);
}

PersistenceDiagram round_diagram(const PersistenceDiagram& diagram, const RoundingGrid& grid) {
  PersistenceDiagram out;
  out.truncated_degree = diagram.truncated_degree;
  for (const auto& [degree, pts] : diagram.degrees) {
    auto& target = out.degrees[degree];
    for (const auto& p : pts) {
      const PersistencePair r{grid.round(p.birth), p.essential() ? kInfinity : grid.round(p.death)};
      if (r.death > r.birth) target.push_back(r);
    }
    std::sort(target.begin(), target.end());
  }
  return out;
}

std::vector<EulerCurve> betti_curves(const PersistenceDiagram& diagram, int max_degree) {
  std::vector<EulerCurve> curves;
  for (int d = 0; d <= max_degree; ++d) {
    std::vector<std::pair<double, long>> increments;
    for (const auto& p : diagram.points(d)) {
      increments.emplace_back(p.birth, 1);
      if (!p.essential()) increments.emplace_back(p.death, -1);
    }
    curves.push_back(EulerCurve::from_increments(std::move(increments)));
  }
  return curves;
}

std::vector<EulerCurve> betti_curves(const FilteredComplex& complex) {
  return betti_curves(compute_persistence(complex).diagram, complex.skeleton_dim());
}

}  // namespace distop
