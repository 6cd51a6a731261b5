#pragma once

#include "carter/limits.hpp"
#include "carter/permutation.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace carter {

/// One level of a stabilizer chain: the stabilizer of the earlier base points,
/// its strong generators, and the orbit of `base` with explicit transversal.
struct ChainLevel {
  Point base = 0;
  std::vector<Permutation> generators;
  std::vector<Point> orbit;
  /// position[x] is the index of x in `orbit`, or -1.
  std::vector<std::int32_t> position;
  /// transversal[k] maps `base` to orbit[k].
  std::vector<Permutation> transversal;
};

/**
 * A permutation group given by generators together with a deterministic
 * Schreier-Sims stabilizer chain. Immutable after construction.
 */
class Group {
public:
  /// The trivial group on `degree` points.
  explicit Group(std::size_t degree = 1);

  /**
   * Builds the stabilizer chain of <gens>. When `known_order` is set the
   * construction stops as soon as the chain certifies that order; a chain
   * whose basic-orbit product reaches the true order is complete.
   */
  static Group from_generators(std::size_t degree, std::vector<Permutation> gens,
                               Limits const &limits = {},
                               std::optional<std::uint64_t> known_order = {});

  std::size_t degree() const noexcept { return data_->degree; }
  std::vector<Permutation> const &generators() const noexcept { return data_->generators; }
  std::vector<ChainLevel> const &chain() const noexcept { return data_->chain; }
  std::vector<Point> base() const;
  std::vector<Permutation> strong_generators() const;

  std::uint64_t order() const noexcept { return data_->order; }
  bool is_trivial() const noexcept { return data_->order == 1; }
  bool is_abelian() const;

  /// Membership by sifting. Throws DomainError on degree mismatch.
  bool contains(Permutation const &p) const;
  bool is_subgroup_of(Group const &other) const;
  /// Same element set.
  bool same_elements(Group const &other) const;

  /// Mixed-radix index of an element from its sifting positions, in [0, order).
  std::uint64_t rank(Permutation const &p) const;
  Permutation unrank(std::uint64_t r) const;

  /**
   * Calls `visit` once per element in increasing rank order. `visit` returns
   * false to stop early. Throws CapacityError if order exceeds the cap.
   */
  void for_each_element(Limits const &limits,
                        std::function<bool(Permutation const &)> const &visit) const;
  std::vector<Permutation> elements(Limits const &limits = {}) const;

  /// Exactly uniform: an independent uniform transversal choice per level.
  Permutation random_element(std::uint64_t seed) const;
  Permutation random_element(std::mt19937_64 &rng) const;

  /// <this, extra>, reusing this chain.
  Group with_generators(std::vector<Permutation> const &extra) const;
  Group with_generator(Permutation const &extra) const { return with_generators({extra}); }

  /// Sizes of the orbits of the group on {0..degree-1}, sorted.
  std::vector<std::size_t> orbit_lengths() const;

private:
  // Shared so that copies are cheap; never mutated after construction.
  struct Data {
    std::size_t degree = 1;
    std::vector<Permutation> generators;
    std::vector<ChainLevel> chain;
    std::uint64_t order = 1;
  };
  std::shared_ptr<Data const> data_;

  static Group make(std::size_t degree, std::vector<Permutation> gens,
                    std::vector<ChainLevel> chain);
};

/// Uniform integer in [0, n) with rejection, independent of the standard
/// library's distribution implementation.
std::uint64_t uniform_index(std::mt19937_64 &rng, std::uint64_t n);

std::string describe(Group const &g);

} // namespace carter
