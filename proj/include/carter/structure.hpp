#pragma once

#include "carter/group.hpp"

#include <cstdint>
#include <vector>

namespace carter {

/// A subgroup together with the group it was taken in.
struct SubgroupHandle {
  Group ambient;
  Group subgroup;

  /// Throws DomainError unless every generator of `subgroup` lies in `ambient`.
  static SubgroupHandle make(Group ambient, Group subgroup);
};

Group trivial_subgroup(Group const &g);

/// True iff every generator of `g` conjugates every generator of `n` into `n`.
bool is_normalized_by(Group const &n, Group const &g);

/// Smallest normal subgroup of G containing S. Throws DomainError if S is
/// not inside G.
Group normal_closure(Group const &G, std::vector<Permutation> const &S);

/// [A, G] for A normal in G: the normal closure of generator commutators.
Group commutator_with(Group const &G, Group const &A);
Group derived_subgroup(Group const &G);

/// G, G', G'', ... ending at the first repeated term.
std::vector<Group> derived_series(Group const &G);
bool is_solvable(Group const &G);

/// G, [G,G], [[G,G],G], ... ending at the first repeated term.
std::vector<Group> lower_central_series(Group const &G);
bool is_nilpotent(Group const &G);

/// {h in H : X^h = X} by element scan over H. X need not lie in H.
Group normalizer_in(Group const &H, Group const &X, Limits const &limits = {});
/// {h in H : h commutes with every generator of X} by element scan over H.
Group centralizer_in(Group const &H, Group const &X, Limits const &limits = {});

/// N_G(H). Requires H <= G.
Group normalizer(Group const &G, Group const &H, Limits const &limits = {});
/// C_G(H). Requires H <= G.
Group centralizer(Group const &G, Group const &H, Limits const &limits = {});

/// A ∩ B by scanning the smaller group.
Group intersection(Group const &A, Group const &B, Limits const &limits = {});

/// Orbits of G on itself under conjugation, ordered by their least-rank element.
std::vector<std::vector<Permutation>> conjugacy_classes(Group const &G,
                                                        Limits const &limits = {});

/**
 * All normal subgroups: normal closures of conjugacy classes closed under
 * joins, deduplicated by element set, ordered by order then element ranks.
 */
std::vector<Group> normal_subgroups(Group const &G, Limits const &limits = {});

/// Sorted ranks (relative to G) of the elements of H; identifies H as a set.
std::vector<std::uint64_t> subgroup_key(Group const &G, Group const &H,
                                        Limits const &limits = {});

/// Sylow p-subgroup by normalizer ascent from the lexicographically least
/// element of order p, adjoining at each step the least p-element of N_G(H)
/// outside H.
Group sylow_subgroup(Group const &G, std::uint64_t p, Limits const &limits = {});

/// The largest normal subgroup of order coprime to p.
Group o_pprime(Group const &G, std::uint64_t p, Limits const &limits = {});

/// Sorted multiset of element orders.
std::vector<std::uint64_t> element_orders(Group const &G, Limits const &limits = {});

} // namespace carter
