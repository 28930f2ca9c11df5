#include "distop/bounds.hpp"

#include "distop/distributed.hpp"
#include "distop/geometry.hpp"

#include <cmath>

namespace distop {
namespace {

void check_km(std::size_t k, int m) {
  if (!(m > 0 && static_cast<std::size_t>(m) < k)) throw DomainError("bounds require 0 < m < k");
}

void check_eps(double eps, const char* name) {
  if (!(eps >= 0.0) || !std::isfinite(eps)) throw DomainError(std::string(name) + " must be finite and >= 0");
}

}  // namespace

std::uint64_t s_km(std::size_t k, std::size_t m) {
  if (!(m > 0 && m < k)) throw DomainError("s_km requires 0 < m < k");
  std::uint64_t total = 0, c = 1;  // c = C(k, j)
  for (std::size_t j = 1; j <= m + 1; ++j) {
    c = c * (k - j + 1) / j;
    if (j >= 2) total += c;
  }
  return total;
}

BoundReport quasi_isometry_bound(InvariantKind flavor, std::size_t k, int m, double epsilon) {
  if (!is_persistence_kind(flavor)) throw DomainError("bound flavor must be RP or CP");
  check_km(k, m);
  check_eps(epsilon, "epsilon");
  BoundReport r{flavor, k, m, epsilon, 0.0, {}};
  const double kk = static_cast<double>(k);
  if (flavor == InvariantKind::RP) {
    r.bound = 112.0 * kk * kk * epsilon;
    r.formula = "112*k^2*eps";
  } else {
    r.bound = 224.0 * static_cast<double>(s_km(k, static_cast<std::size_t>(m))) *
              std::pow(kk, m + 1) * epsilon;
    r.formula = "224*S(k,m)*k^(m+1)*eps";
  }
  return r;
}

BoundReport gh_bound_dense_cover(InvariantKind flavor, std::size_t k, int m, double epsilon,
                                 double delta) {
  check_eps(delta, "delta");
  BoundReport r = quasi_isometry_bound(flavor, k, m, epsilon);
  r.bound += 2.0 * delta;
  r.formula += "+2*delta";
  return r;
}

BoundReport cech_via_rips_bound(std::size_t k, double epsilon, std::size_t d1, std::size_t d2) {
  if (d1 < 1 || d2 < 1) throw DomainError("ambient dimensions must be >= 1");
  if (k < 2) throw DomainError("k must be >= 2");
  check_eps(epsilon, "epsilon");
  auto c = [](std::size_t d) {
    const double x = static_cast<double>(d);
    return std::sqrt(2.0 * x / (x + 1.0));
  };
  const double kk = static_cast<double>(k);
  return {InvariantKind::CP, k, 1, epsilon, 112.0 * kk * kk * (epsilon + c(d1) + c(d2)),
          "112*k^2*(eps+sqrt(2*d1/(d1+1))+sqrt(2*d2/(d2+1)))"};
}

double sparse_quasi_isometry_bound(std::size_t k, double eps1, double eps2) {
  if (k < 2) throw DomainError("sparse bound requires k > 1");
  check_eps(eps1, "eps1");
  check_eps(eps2, "eps2");
  return 56.0 * static_cast<double>(k + 1) * eps1 + 28.0 * eps2;
}

}  // namespace distop
