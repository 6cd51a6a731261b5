#pragma once

#include "carter/epimorphism.hpp"
#include "carter/group.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace carter {

/**
 * The right cosets Ba of B in A with a canonical labelling: coset 0 is B,
 * and the rest are numbered in breadth-first order from B under right
 * multiplication by A's generators, taken in their stored order. The labels
 * are therefore a pure function of the (A, B) pair, so every group acting on
 * the same section acts on the same numbered points.
 */
class CosetSpace {
public:
  /// Requires B <= A and [A:B] <= limits.max_cosets.
  CosetSpace(Group A, Group B, Limits const &limits = {});

  Group const &top() const noexcept { return top_; }
  Group const &bottom() const noexcept { return bottom_; }
  std::size_t size() const noexcept { return reps_.size(); }

  /// Canonical representative of coset k (least base image under B's chain).
  Permutation const &representative(std::size_t k) const { return reps_.at(k); }

  /// The canonical element of the coset B*a.
  Permutation canonical(Permutation const &a) const;
  /// Label of the coset B*a. Throws DomainError if a is outside A.
  std::uint32_t index_of(Permutation const &a) const;

  /// Right multiplication: Ba -> Bax, for x in A.
  Permutation right_action(Permutation const &x) const;
  /// Ba -> B x^-1 a x, for x normalizing both A and B.
  Permutation conjugation_action(Permutation const &x) const;

private:
  Group top_;
  Group bottom_;
  std::vector<Permutation> reps_;
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> index_;
};

/// A realized quotient G/N together with the natural epimorphism.
struct QuotientAction {
  Group group;
  Epimorphism map;
  /// Null when N is trivial (the quotient is G itself).
  std::shared_ptr<CosetSpace const> cosets;

  /// Some preimage of an element of `group`.
  Permutation lift(Permutation const &q) const;
  /// Full preimage of a subgroup of `group`.
  Group preimage(Group const &Q) const;
};

/**
 * G acting on the right cosets of N, kernel exactly N. When N is trivial the
 * quotient is G itself with the identity map, which avoids the regular
 * representation.
 */
QuotientAction quotient_action(Group const &G, Group const &N, Limits const &limits = {});

/// Limits for groups whose points are cosets: the degree cap becomes the coset cap.
Limits coset_limits(Limits limits);

std::vector<Group> minimal_normal_subgroups(Group const &G, Limits const &limits = {});
std::vector<Group> maximal_normal_subgroups(Group const &G, Limits const &limits = {});

enum class SeriesKind { chief, composition, rc };
std::string to_string(SeriesKind kind);

/// G = terms[0] > terms[1] > ... > terms.back() = 1.
struct Series {
  Group ambient;
  std::vector<Group> terms;
  SeriesKind kind = SeriesKind::composition;
  /// For kind == rc: the chief series this one refines.
  std::vector<Group> chief_witness;

  std::vector<std::uint64_t> term_orders() const;
  /// |terms[i-1]| / |terms[i]| for i = 1..n.
  std::vector<std::uint64_t> factor_orders() const;
};

/// B normal in A, A inside the ambient group, with its canonical coset space.
class Section {
public:
  /// Throws DomainError unless B ⊴ A ≤ ambient.
  static Section make(Group ambient, Group A, Group B, Limits const &limits = {});

  Group const &ambient() const noexcept { return ambient_; }
  Group const &top() const noexcept { return cosets_->top(); }
  Group const &bottom() const noexcept { return cosets_->bottom(); }
  std::uint64_t order() const noexcept { return cosets_->size(); }
  CosetSpace const &cosets() const noexcept { return *cosets_; }

private:
  Group ambient_;
  std::shared_ptr<CosetSpace const> cosets_;
};

Series chief_series(Group const &G, Limits const &limits = {});
Series composition_series(Group const &G, std::uint64_t choice_seed,
                          Limits const &limits = {});
Series rc_series(Group const &G, Limits const &limits = {});
std::vector<Section> sections_of(Series const &s, Limits const &limits = {});

/**
 * The chief series refined by a composition series, if any: the terms normal
 * in G must form a chief series. Used to recognize sampled composition
 * series that happen to be rc-series.
 */
std::optional<std::vector<Group>> refined_chief_series(Series const &s,
                                                       Limits const &limits = {});

} // namespace carter
