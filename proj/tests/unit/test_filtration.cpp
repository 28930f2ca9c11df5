#include "distop/filtration.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace distop;

TEST_CASE("filtration order") {
  CHECK(filtration_less({{0, 1}, 1.0}, {{0}, 2.0}));
  CHECK(filtration_less({{2}, 0.0}, {{0, 1}, 0.0}));
  CHECK(filtration_less({{0, 2}, 1.0}, {{1, 2}, 1.0}));
  CHECK_FALSE(filtration_less({{0, 1}, 1.0}, {{0, 1}, 1.0}));
}

TEST_CASE("filtered complex validation") {
  const std::vector<Simplex> good{{{0}, 0}, {{1}, 0}, {{0, 1}, 1}};
  CHECK_NOTHROW(FilteredComplex(2, 1, good));
  CHECK_THROWS_AS(FilteredComplex(2, 1, {{{0}, 0}, {{0, 1}, 1}}), DomainError);            // missing face
  CHECK_THROWS_AS(FilteredComplex(2, 1, {{{0}, 0}, {{1}, 2}, {{0, 1}, 1}}), DomainError);  // vertex late
  CHECK_THROWS_AS(FilteredComplex(3, 1, {{{0}, 0}, {{1}, 0}, {{2}, 0}, {{0, 1}, 1}, {{0, 2}, 1},
                                         {{1, 2}, 1}, {{0, 1, 2}, 1}}),
                  DomainError);  // exceeds skeleton
  CHECK_THROWS_AS(FilteredComplex(2, 1, {{{0}, 0}, {{1}, 0}, {{1, 0}, 1}}), DomainError);  // unsorted
  CHECK_THROWS_AS(FilteredComplex(2, 1, {{{0}, 0}, {{1}, 0}, {{0, 1}, 1}, {{0, 1}, 2}}), DomainError);
  CHECK_THROWS_AS(FilteredComplex(3, 2, {{{0}, 0}, {{1}, 0}, {{2}, 0}, {{0, 1}, 1}, {{0, 2}, 1},
                                         {{1, 2}, 3}, {{0, 1, 2}, 2}}),
                  DomainError);  // not monotone
  CHECK_THROWS_AS(FilteredComplex(1, 0, {{{0}, 0}, {{1}, 0}}), DomainError);  // vertex out of range
}

TEST_CASE("Rips filtration of a unit square") {
  const PointCloud sq = PointCloud::from_rows({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  const FilteredComplex k = rips_filtration(pairwise_distances(sq), 2);
  CHECK(k.size() == 4 + 6 + 4);
  for (const auto& s : k.simplices()) {
    if (s.dim() == 0) CHECK(s.time == 0.0);
    if (s.vertices == Subset{0, 1}) CHECK(s.time == 1.0);
    if (s.vertices == Subset{0, 2}) CHECK(s.time == doctest::Approx(std::sqrt(2.0)));
    if (s.dim() == 2) CHECK(s.time == doctest::Approx(std::sqrt(2.0)));
  }
  for (std::size_t i = 1; i < k.size(); ++i)
    CHECK_FALSE(filtration_less(k.simplices()[i], k.simplices()[i - 1]));
}

TEST_CASE("Cech filtration uses twice the enclosing radius") {
  const double h = std::sqrt(3.0) / 2;
  const PointCloud tri = PointCloud::from_rows({{0, 0}, {1, 0}, {0.5, h}});
  const FilteredComplex k = cech_filtration(tri, 2);
  for (const auto& s : k.simplices()) {
    if (s.dim() == 1) CHECK(s.time == doctest::Approx(1.0));
    if (s.dim() == 2) CHECK(s.time == doctest::Approx(2.0 / std::sqrt(3.0)));
  }
}

TEST_CASE("Cech and Rips containment in the plane and in space") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t d = 2 + trial % 2;
    const PointCloud c = oracle::random_cloud(7, d, rng);
    const FilteredComplex rips = rips_filtration(pairwise_distances(c), 3);
    const FilteredComplex cech = cech_filtration(c, 3);
    REQUIRE(rips.size() == cech.size());
    std::map<Subset, double> rt;
    for (const auto& s : rips.simplices()) rt[s.vertices] = s.time;
    const double factor = std::sqrt(2.0 * d / (d + 1.0));
    for (const auto& s : cech.simplices()) {
      CHECK(rt[s.vertices] <= s.time + 1e-12);
      CHECK(s.time <= factor * rt[s.vertices] + 1e-12);
    }
  }
}

TEST_CASE("rounding grid") {
  const RoundingGrid g({0.0, 1.0, 3.0}, 0.0);
  CHECK(g.round(-5) == 0.0);
  CHECK(g.round(0.49) == 0.0);
  CHECK(g.round(0.5) == 1.0);  // midpoint rounds up
  CHECK(g.round(2.0) == 3.0);
  CHECK(g.round(1.99) == 1.0);
  CHECK(g.round(100) == 3.0);
  CHECK(rounds_up(0.5, 0.0, 1.0));
  CHECK_FALSE(rounds_up(0.4999, 0.0, 1.0));
  CHECK_THROWS_AS(RoundingGrid({1.0, 1.0}, 0.0), DomainError);
  CHECK_THROWS_AS(RoundingGrid().round(1.0), DomainError);

  const PointCloud sq = PointCloud::from_rows({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  const FilteredComplex k = rips_filtration(pairwise_distances(sq), 2);
  const FilteredComplex r = round_filtration(k, RoundingGrid({0.0, 2.0}, 0.0));
  for (const auto& s : r.simplices()) {
    if (s.dim() == 0) CHECK(s.time == 0.0);
    if (s.dim() > 0) CHECK(s.time == 2.0);
  }
}

TEST_CASE("combinations are lexicographic and complete") {
  std::vector<Subset> seen;
  for_each_combination(5, 3, [&](const Subset& s) {
    seen.push_back(s);
    return true;
  });
  CHECK(seen.size() == 10);
  CHECK(seen.front() == Subset{0, 1, 2});
  CHECK(seen.back() == Subset{2, 3, 4});
  CHECK(std::is_sorted(seen.begin(), seen.end()));
  int count = 0;
  for_each_combination(5, 2, [&](const Subset&) { return ++count < 3; });
  CHECK(count == 3);
}
