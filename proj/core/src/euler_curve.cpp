#include "distop/persistence.hpp"

#include <algorithm>

namespace distop {

EulerCurve::EulerCurve(std::vector<Breakpoint> breakpoints) {
  std::stable_sort(breakpoints.begin(), breakpoints.end(),
                   [](const Breakpoint& a, const Breakpoint& b) { return a.threshold < b.threshold; });
  long current = 0;
  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    if (i + 1 < breakpoints.size() && breakpoints[i + 1].threshold == breakpoints[i].threshold)
      continue;
    if (breakpoints[i].value == current) continue;
    current = breakpoints[i].value;
    breakpoints_.push_back(breakpoints[i]);
  }
}

EulerCurve EulerCurve::from_increments(std::vector<std::pair<double, long>> increments) {
  std::sort(increments.begin(), increments.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Breakpoint> points;
  long value = 0;
  for (std::size_t i = 0; i < increments.size(); ++i) {
    value += increments[i].second;
    if (i + 1 == increments.size() || increments[i + 1].first != increments[i].first)
      points.push_back({increments[i].first, value});
  }
  return EulerCurve(std::move(points));
}

EulerCurve EulerCurve::step(double r, long height) {
  return EulerCurve({{r, height}});
}

EulerCurve EulerCurve::constant(long value) {
  return step(-kInfinity, value);
}

long EulerCurve::operator()(double r) const noexcept {
  const auto it = std::upper_bound(
      breakpoints_.begin(), breakpoints_.end(), r,
      [](double x, const Breakpoint& b) { return x < b.threshold; });
  return it == breakpoints_.begin() ? 0 : std::prev(it)->value;
}

namespace {

template <class Op>
EulerCurve combine(const EulerCurve& a, const EulerCurve& b, Op op) {
  std::vector<double> thresholds;
  for (const auto& p : a.breakpoints()) thresholds.push_back(p.threshold);
  for (const auto& p : b.breakpoints()) thresholds.push_back(p.threshold);
  std::sort(thresholds.begin(), thresholds.end());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());
  std::vector<EulerCurve::Breakpoint> points;
  points.reserve(thresholds.size());
  for (double t : thresholds) points.push_back({t, op(a(t), b(t))});
  return EulerCurve(std::move(points));
}

}  // namespace

EulerCurve& EulerCurve::operator+=(const EulerCurve& other) {
  *this = combine(*this, other, [](long x, long y) { return x + y; });
  return *this;
}

EulerCurve& EulerCurve::operator-=(const EulerCurve& other) {
  *this = combine(*this, other, [](long x, long y) { return x - y; });
  return *this;
}

EulerCurve operator*(long factor, const EulerCurve& c) {
  std::vector<EulerCurve::Breakpoint> points(c.breakpoints().begin(), c.breakpoints().end());
  for (auto& p : points) p.value *= factor;
  return EulerCurve(std::move(points));
}

EulerCurve euler_curve(const FilteredComplex& complex) {
  std::vector<std::pair<double, long>> increments;
  increments.reserve(complex.size());
  for (const auto& s : complex.simplices())
    increments.emplace_back(s.time, s.dim() % 2 == 0 ? 1 : -1);
  return EulerCurve::from_increments(std::move(increments));
}

}  // namespace distop
