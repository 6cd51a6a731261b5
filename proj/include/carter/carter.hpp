#pragma once

#include "carter/group.hpp"

#include <compare>
#include <optional>
#include <vector>

namespace carter {

/// A nilpotent self-normalizing subgroup K of `ambient`.
struct CarterWitness {
  Group ambient;
  Group K;
  bool odd_order = false;
  bool three_divides = false;

  /// Verifies the Carter property; throws DomainError if K is not Carter in G.
  static CarterWitness make(Group ambient, Group K, Limits const &limits = {});
};

/// K is nilpotent and N_G(K) = K.
bool is_carter(Group const &G, Group const &K, Limits const &limits = {});

/// Conjugacy invariants used to skip most explicit conjugacy tests.
struct SubgroupFingerprint {
  std::uint64_t order = 1;
  std::vector<std::uint64_t> element_orders;
  std::vector<std::size_t> orbit_lengths;

  auto operator<=>(SubgroupFingerprint const &) const = default;
  bool operator==(SubgroupFingerprint const &) const = default;
};

SubgroupFingerprint fingerprint(Group const &H, Limits const &limits = {});

/// Some x in G with U^x = V, found by scanning G.
std::optional<Permutation> conjugating_element(Group const &G, Group const &U, Group const &V,
                                               Limits const &limits = {});

/**
 * Representatives of the conjugacy classes of nontrivial nilpotent subgroups
 * of G. Seeds are cyclic subgroups of prime order; a class H is extended by
 * g in N_G(H) \ H with g^p in H, keeping extensions that stay nilpotent.
 * Ordered by order, then fingerprint, then element ranks.
 */
std::vector<Group> nilpotent_subgroup_classes(Group const &G, Limits const &limits = {});

/// One witness per conjugacy class of Carter subgroups; empty if none exist.
std::vector<CarterWitness> carter_subgroups(Group const &G, Limits const &limits = {});

} // namespace carter
