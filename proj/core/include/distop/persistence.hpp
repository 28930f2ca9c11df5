#pragma once

#include "distop/filtration.hpp"

#include <limits>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace distop {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct PersistencePair {
  double birth = 0.0;
  double death = kInfinity;

  bool essential() const noexcept { return death == kInfinity; }
  double persistence() const noexcept { return death - birth; }

  friend bool operator==(const PersistencePair&, const PersistencePair&) = default;
  friend auto operator<=>(const PersistencePair&, const PersistencePair&) = default;
};

/// Per-degree multisets of (birth, death) pairs. Zero-persistence pairs are
/// never stored. Points within a degree are kept in canonical sorted order.
struct PersistenceDiagram {
  std::map<int, std::vector<PersistencePair>> degrees;
  /// Degree whose classes are artifacts of skeleton truncation (the skeleton
  /// dimension of the source complex), or -1.
  int truncated_degree = -1;

  /// Points in the given degree; empty when the degree is absent.
  std::span<const PersistencePair> points(int degree) const;

  /// Degrees that carry points, excluding the truncated one.
  std::vector<int> untruncated_degrees() const;

  std::size_t essential_count(int degree) const;

  friend bool operator==(const PersistenceDiagram&, const PersistenceDiagram&) = default;
};

/// The simplices that create and destroy one diagram point.
struct CriticalPair {
  Simplex birth;
  std::optional<Simplex> death;
};

/// Parallel to PersistenceDiagram::degrees: pairs[d][i] explains
/// diagram.degrees[d][i].
struct CriticalPairing {
  std::map<int, std::vector<CriticalPair>> degrees;
};

struct PersistenceResult {
  PersistenceDiagram diagram;
  CriticalPairing pairing;
};

/// Z/2 column reduction of the boundary matrix in filtration order. Reports
/// degrees 0..m, with degree m marked as truncated.
PersistenceResult compute_persistence(const FilteredComplex& complex);

/// Rips persistence in degrees 0..max_degree using the (max_degree+1)-skeleton
/// with simplices up to `threshold`, computed by cohomology reduction over
/// implicitly enumerated coboundaries. Simplices are ordered exactly as in
/// filtration_less, so pairings match compute_persistence on
/// rips_filtration(d, max_degree + 1) (without its truncated degree).
PersistenceResult rips_persistence(const DistanceMatrix& d, int max_degree,
                                   double threshold = kInfinity);

/// Rounds births and deaths to the grid, dropping points that land on the
/// diagonal.
PersistenceDiagram round_diagram(const PersistenceDiagram& diagram, const RoundingGrid& grid);

/// Integer-valued right-continuous step function, zero before the first
/// breakpoint.
class EulerCurve {
public:
  struct Breakpoint {
    double threshold = 0.0;
    long value = 0;
    friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
  };

  EulerCurve() = default;
  /// Normalizes: sorts by threshold, keeps the last value per threshold and
  /// drops breakpoints that do not change the value.
  explicit EulerCurve(std::vector<Breakpoint> breakpoints);

  /// Curve from (threshold, increment) events.
  static EulerCurve from_increments(std::vector<std::pair<double, long>> increments);
  /// 0 before r, `height` from r on.
  static EulerCurve step(double r, long height = 1);
  static EulerCurve constant(long value);

  std::span<const Breakpoint> breakpoints() const noexcept { return breakpoints_; }
  long operator()(double r) const noexcept;

  EulerCurve& operator+=(const EulerCurve& other);
  EulerCurve& operator-=(const EulerCurve& other);
  friend EulerCurve operator+(EulerCurve a, const EulerCurve& b) { return a += b; }
  friend EulerCurve operator-(EulerCurve a, const EulerCurve& b) { return a -= b; }
  friend EulerCurve operator*(long factor, const EulerCurve& c);

  friend bool operator==(const EulerCurve&, const EulerCurve&) = default;

private:
  std::vector<Breakpoint> breakpoints_;
};

/// chi(r) = sum over simplices with time <= r of (-1)^dim.
EulerCurve euler_curve(const FilteredComplex& complex);

/// Betti curve per degree 0..m, from the persistence diagram.
std::vector<EulerCurve> betti_curves(const FilteredComplex& complex);
std::vector<EulerCurve> betti_curves(const PersistenceDiagram& diagram, int max_degree);

}  // namespace distop
