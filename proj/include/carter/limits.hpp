#pragma once

#include <cstddef>
#include <cstdint>

namespace carter {

/// Explicit caps carried by every operation whose cost grows with the group.
struct Limits {
  /// Largest degree accepted for groups built from user generators.
  std::size_t max_degree = 1024;
  /// Largest group order that may be enumerated element by element.
  std::uint64_t max_enumeration = 200000;
  /// Largest index [A:B] realized as an action on cosets.
  std::size_t max_cosets = 10000;
  /// Largest group order for exhaustive nilpotent-subgroup enumeration.
  std::uint64_t max_nilpotent_enumeration = 30000;
  /// Largest number of conjugacy classes of subgroups kept during search.
  std::size_t max_subgroup_classes = 10000;
  /// Candidate generator-image pairs tried by the isomorphism search.
  std::uint64_t iso_search_budget = 500000;
  /// Wall-clock guard on a single isomorphism search.
  std::uint64_t iso_search_timeout_ms = 60000;
};

} // namespace carter
