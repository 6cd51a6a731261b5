#pragma once

#include "carter/group.hpp"
#include "carter/series.hpp"

namespace carter {

/**
 * The group of H-induced automorphisms of a section A/B.
 *
 * x in N_H(A/B) = N_H(A) ∩ N_H(B) acts on the cosets by Ba -> B x^-1 a x.
 * `image` is that action on all |A/B| cosets, labelled by the section's
 * canonical coset space, so for H <= G the image for H is literally a
 * subgroup of the image for G.
 */
struct InducedAutGroup {
  Section section;
  Group acting;
  /// N_H(A/B)
  Group normalizer_part;
  /// C_H(A/B), the kernel of the action.
  Group kernel;
  /// Aut_H(A/B), a permutation group on |A/B| points.
  Group image;
};

InducedAutGroup induced_aut(Group const &H, Section const &sec, Limits const &limits = {});

/// The permutation of cosets induced by x (x must normalize A and B).
Permutation induced_permutation(Section const &sec, Permutation const &x);

/// C_H(A/B) = C_G(A/B) ∩ H, with both sides computed independently.
bool centralizer_restriction_check(Group const &G, Group const &H, Section const &sec,
                                   Limits const &limits = {});

/// Every generator of Aut_H(A/B) lies in Aut_G(A/B).
bool aut_subgroup_embedding(Group const &G, Group const &H, Section const &sec,
                            Limits const &limits = {});

} // namespace carter
