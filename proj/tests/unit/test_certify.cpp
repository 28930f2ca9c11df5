#include "distop/bounds.hpp"
#include "distop/certify.hpp"
#include "distop/datasets.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace distop;

namespace {

SubsetCollection closed(std::size_t n, std::size_t k, int m, std::size_t count, std::uint64_t seed) {
  return closure_completion(sample_subsets(n, k, count, seed), k, m);
}

}  // namespace

TEST_CASE("identical clouds certify with zero") {
  std::mt19937_64 rng(3);
  const PointCloud x = oracle::random_cloud(12, 2, rng);
  const auto r = certify_alignment(x, x, Bijection::identity(12), closed(12, 5, 1, 200, 1), InvariantKind::RP, 1);
  CHECK(r.eps_obs == 0.0);
  CHECK(r.bound == 0.0);
  CHECK(r.distortion == 0.0);
  CHECK(r.k == 5);
}

TEST_CASE("rigid motions certify with almost zero") {
  std::mt19937_64 rng(5);
  const PointCloud x = oracle::random_cloud(12, 2, rng);
  const double shift[] = {3.0, -1.0};
  const PointCloud y = rigid_motion(x, 0.7, shift);
  for (auto flavor : {InvariantKind::RP, InvariantKind::CP}) {
    const auto r = certify_alignment(x, y, Bijection::identity(12), closed(12, 4, 1, 200, 2), flavor, 1);
    CHECK(r.eps_obs <= 1e-9);
    CHECK(r.distortion <= 1e-9);
  }
}

TEST_CASE("perturbations: eps_obs <= distortion <= bound") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const PointCloud x = oracle::random_cloud(10, 2, rng);
    const PointCloud y = add_uniform_noise(x, 0.02, trial);
    const auto r = certify_alignment(x, y, Bijection::identity(10), closed(10, 4, 1, 150, trial), InvariantKind::RP, 1);
    CHECK(r.eps_obs <= r.distortion + 1e-12);
    CHECK(r.distortion <= r.bound);
  }
}

TEST_CASE("a permuted correspondence is respected") {
  std::mt19937_64 rng(9);
  const PointCloud x = oracle::random_cloud(8, 2, rng);
  const std::vector<Index> perm{5, 2, 7, 0, 1, 6, 3, 4};
  std::vector<double> coords(16);
  for (Index i = 0; i < 8; ++i)
    for (int d = 0; d < 2; ++d) coords[perm[i] * 2 + d] = x.point(i)[d];
  const auto r = certify_alignment(x, PointCloud(2, coords), Bijection(perm), closed(8, 4, 1, 100, 3),
                                   InvariantKind::RP, 1);
  CHECK(r.eps_obs == 0.0);
  CHECK(r.distortion == 0.0);
}

TEST_CASE("certification rejects bad collections") {
  std::mt19937_64 rng(11);
  const PointCloud x = oracle::random_cloud(8, 2, rng);
  const SubsetCollection no_closure = sample_subsets(8, 4, 100, 1);
  CHECK_THROWS_AS(certify_alignment(x, x, Bijection::identity(8), no_closure, InvariantKind::RP, 1),
                  CoverClosureError);
  CHECK_THROWS_AS(certify_alignment(x, x, Bijection::identity(8), closed(8, 4, 1, 100, 1), InvariantKind::RE, 1),
                  DomainError);
}

TEST_CASE("sparse certification") {
  std::mt19937_64 rng(13);
  const PointCloud x = oracle::random_cloud(9, 2, rng);
  const auto same = certify_alignment_sparse(x, x, Bijection::identity(9), {0, 3, 5}, InvariantKind::RP);
  CHECK(same.k == 4);
  CHECK(same.eps1 == 0.0);
  CHECK(same.eps2 == 0.0);
  CHECK(same.bound == 0.0);

  const PointCloud y = add_uniform_noise(x, 0.01, 4);
  const auto r = certify_alignment_sparse(x, y, Bijection::identity(9), {0, 3, 5}, InvariantKind::RP);
  CHECK(r.distortion <= r.bound);
  CHECK(r.bound == doctest::Approx(sparse_quasi_isometry_bound(4, r.eps1, r.eps2)));
  CHECK_THROWS_AS(certify_alignment_sparse(x, y, Bijection::identity(9), {0, 0, 5}, InvariantKind::RP), DomainError);
}
