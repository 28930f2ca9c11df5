#include "distop/filtration.hpp"

#include "distop/enclosing_ball.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

namespace distop {

bool filtration_less(const Simplex& a, const Simplex& b) noexcept {
  if (a.time != b.time) return a.time < b.time;
  if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
  return a.vertices < b.vertices;
}

FilteredComplex::FilteredComplex(Trusted, std::size_t vertex_count, int skeleton_dim,
                                 std::vector<Simplex> simplices)
    : vertex_count_(vertex_count), skeleton_dim_(skeleton_dim), simplices_(std::move(simplices)) {
  std::sort(simplices_.begin(), simplices_.end(), filtration_less);
}

FilteredComplex::FilteredComplex(std::size_t vertex_count, int skeleton_dim,
                                 std::vector<Simplex> simplices)
    : FilteredComplex(Trusted{}, vertex_count, skeleton_dim, std::move(simplices)) {
  if (skeleton_dim_ < 0) throw DomainError("skeleton dimension must be non-negative");

  std::map<Subset, double> times;
  for (const auto& s : simplices_) {
    if (s.vertices.empty()) throw DomainError("simplex must have at least one vertex");
    if (s.dim() > skeleton_dim_) throw DomainError("simplex dimension exceeds the skeleton");
    if (!std::isfinite(s.time) || s.time < 0.0)
      throw DomainError("appearance times must be finite and non-negative");
    for (std::size_t i = 0; i < s.vertices.size(); ++i) {
      if (s.vertices[i] >= vertex_count_) throw DomainError("simplex vertex out of range");
      if (i > 0 && s.vertices[i - 1] >= s.vertices[i])
        throw DomainError("simplex vertices must be strictly increasing");
    }
    if (s.dim() == 0 && s.time != 0.0) throw DomainError("vertices must appear at time 0");
    if (!times.emplace(s.vertices, s.time).second) throw DomainError("duplicate simplex");
  }

  for (const auto& s : simplices_) {
    if (s.dim() == 0) continue;
    for (std::size_t drop = 0; drop < s.vertices.size(); ++drop) {
      Subset face = s.vertices;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
      const auto it = times.find(face);
      if (it == times.end()) throw DomainError("complex is not closed under faces");
      if (it->second > s.time) throw DomainError("filtration is not monotone");
    }
  }
}

RoundingGrid::RoundingGrid(std::vector<double> values, double density)
    : values_(std::move(values)), density_(density) {
  for (std::size_t i = 1; i < values_.size(); ++i)
    if (!(values_[i - 1] < values_[i]))
      throw DomainError("rounding grid values must be strictly increasing");
}

bool rounds_up(double x, double lower, double upper) noexcept {
  return !(x - lower < upper - x);
}

double RoundingGrid::round(double x) const {
  if (values_.empty()) throw DomainError("rounding grid must be non-empty");
  const auto it = std::lower_bound(values_.begin(), values_.end(), x);
  if (it == values_.end()) return values_.back();
  if (it == values_.begin() || *it == x) return *it;
  const double lower = *(it - 1);
  return rounds_up(x, lower, *it) ? *it : lower;
}

FilteredComplex RoundingGrid::round(const FilteredComplex& complex) const {
  std::vector<Simplex> rounded(complex.simplices().begin(), complex.simplices().end());
  for (auto& s : rounded) s.time = s.dim() == 0 ? 0.0 : round(s.time);
  return FilteredComplex(FilteredComplex::Trusted{}, complex.vertex_count(),
                         complex.skeleton_dim(), std::move(rounded));
}

FilteredComplex round_filtration(const FilteredComplex& complex, const RoundingGrid& grid) {
  return grid.round(complex);
}

namespace {

template <class TimeOf>
std::vector<Simplex> enumerate_skeleton(std::size_t n, int skeleton_dim, TimeOf&& time_of) {
  if (skeleton_dim < 0) throw DomainError("skeleton dimension must be non-negative");
  std::vector<Simplex> out;
  const std::size_t top = std::min<std::size_t>(n, static_cast<std::size_t>(skeleton_dim) + 1);
  for (std::size_t size = 1; size <= top; ++size)
    for_each_combination(n, size, [&](const Subset& s) {
      out.push_back({s, size == 1 ? 0.0 : time_of(s)});
      return true;
    });
  return out;
}

}  // namespace

FilteredComplex rips_filtration(const DistanceMatrix& d, int skeleton_dim) {
  auto simplices = enumerate_skeleton(d.size(), skeleton_dim, [&](const Subset& s) {
    double t = 0.0;
    for (std::size_t a = 0; a < s.size(); ++a)
      for (std::size_t b = a + 1; b < s.size(); ++b) t = std::max(t, d(s[a], s[b]));
    return t;
  });
  return FilteredComplex(FilteredComplex::Trusted{}, d.size(), skeleton_dim, std::move(simplices));
}

FilteredComplex cech_filtration(const PointCloud& cloud, int skeleton_dim) {
  // Sizes are enumerated in increasing order, so facet times are known when
  // a simplex is reached; clamping to them keeps the filtration monotone
  // under floating-point rounding of the ball radius.
  std::map<Subset, double> known;
  auto simplices = enumerate_skeleton(cloud.size(), skeleton_dim, [&](const Subset& s) {
    double t = 0.0;
    if (s.size() == 2) {
      t = euclidean_distance(cloud.point(s[0]), cloud.point(s[1]));
    } else {
      std::vector<std::span<const double>> pts;
      pts.reserve(s.size());
      for (Index v : s) pts.push_back(cloud.point(v));
      t = 2.0 * minimal_enclosing_ball(pts).radius;
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        Subset face = s;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
        t = std::max(t, known.at(face));
      }
    }
    known.emplace(s, t);
    return t;
  });
  return FilteredComplex(FilteredComplex::Trusted{}, cloud.size(), skeleton_dim,
                         std::move(simplices));
}

}  // namespace distop
