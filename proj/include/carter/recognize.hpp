#pragma once

#include "carter/group.hpp"
#include "carter/series.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace carter {

enum class Family { symmetric, alternating, cyclic, dihedral, frobenius, psl2, psigma_l2 };

/// A named group family with its parameters:
///   symmetric(n), alternating(n), cyclic(m), dihedral(m) of order 2m,
///   frobenius(p, k) = Z_p ⋊ Z_k, psl2(q), psigma_l2(p, f).
struct GroupSpec {
  Family family = Family::cyclic;
  std::vector<std::uint64_t> params;

  /// Throws DomainError on out-of-range parameters.
  void validate() const;
  /// Conventional short name, e.g. "S4", "D8", "Z7:Z3", "PSL(2,27)".
  std::string name() const;
  /// Textbook order.
  std::uint64_t expected_order() const;
};

/// Parses a family keyword ("symmetric", "psl2", ...) plus numeric parameters.
GroupSpec parse_group_spec(std::string const &family,
                           std::vector<std::uint64_t> const &params);
std::string family_keyword(Family f);

/// Builds the permutation group. PSL(2,q) and PΣL(2,p^f) act on the q + 1
/// points of the projective line: field elements are points 0..q-1 and
/// infinity is point q.
Group construct(GroupSpec const &spec, Limits const &limits = {});

/// Irreducible polynomial used for GF(q) in the PSL constructions, as text.
std::string field_modulus_for(std::uint64_t q);

/// Isomorphism-type label of a composition factor.
struct FactorId {
  enum class Kind { cyclic_prime, l2_3odd, other_nonabelian_simple };

  Kind kind = Kind::cyclic_prime;
  std::uint64_t order = 1;
  /// p for cyclic_prime, n for l2_3odd (q = 3^(2n+1)), 0 otherwise.
  std::uint64_t parameter = 0;

  static FactorId cyclic_prime(std::uint64_t p);
  static FactorId l2_3odd(std::uint64_t n);
  static FactorId other_nonabelian_simple(std::uint64_t order);

  bool is_abelian() const noexcept { return kind == Kind::cyclic_prime; }
  std::string to_string() const;

  bool operator==(FactorId const &) const = default;
  auto operator<=>(FactorId const &) const = default;
};

/// The unique n >= 1 with m = q(q^2 - 1)/2, q = 3^(2n+1), if any.
std::optional<std::uint64_t> is_L2_3odd_order(std::uint64_t m);

/// Order of L_2(q) for odd q.
std::uint64_t psl2_order(std::uint64_t q);

/**
 * Labels a simple section. Nonabelian simplicity is verified on the
 * quotient-action group through its normal-subgroup lattice; throws
 * DomainError if the section is not simple.
 */
FactorId identify_factor(Section const &sec, Limits const &limits = {});

/// Compares the element-order multiset of A/B with that of construct(psl2(q)).
bool matches_psl2_spectrum(Section const &sec, std::uint64_t q, Limits const &limits = {});

} // namespace carter
