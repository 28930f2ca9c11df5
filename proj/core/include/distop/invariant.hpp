#pragma once

#include "distop/persistence.hpp"

#include <map>
#include <string>
#include <string_view>
#include <variant>

namespace distop {

/// Rips/Cech persistence diagrams and Rips/Cech Euler curves.
enum class InvariantKind { RP, CP, RE, CE };

constexpr bool is_persistence_kind(InvariantKind k) noexcept {
  return k == InvariantKind::RP || k == InvariantKind::CP;
}
constexpr bool is_rips_kind(InvariantKind k) noexcept {
  return k == InvariantKind::RP || k == InvariantKind::RE;
}

std::string to_string(InvariantKind kind);
/// Accepts rp/cp/re/ce in either case.
InvariantKind parse_kind(std::string_view text);

using InvariantValue = std::variant<PersistenceDiagram, EulerCurve>;

/// Labeled map from subsets of a ground set to invariant values.
struct DistributedInvariant {
  InvariantKind kind = InvariantKind::RP;
  int skeleton_dim = 1;
  std::map<Subset, InvariantValue> entries;

  /// One more than the largest label that appears.
  std::size_t ground_size() const;
};

}  // namespace distop
