#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace carter {

using Point = std::uint32_t;

/**
 * A bijection on {0, ..., d-1} stored as an image table.
 *
 * Products are read left to right: `p * q` applies p first, then q, so
 * `(p * q)[i] == q[p[i]]`. Conjugation `x ^ g` is `g^-1 * x * g`.
 */
class Permutation {
public:
  /// The identity on one point.
  Permutation() : images_{0} {}

  /// Validates that `images` is a bijection on {0..size-1}; throws DomainError.
  explicit Permutation(std::vector<Point> images);

  Permutation(std::initializer_list<Point> images)
      : Permutation(std::vector<Point>(images)) {}

  static Permutation identity(std::size_t degree);

  /// Builds from disjoint cycles, e.g. `from_cycles(4, {{0, 1, 2, 3}})`.
  static Permutation from_cycles(std::size_t degree,
                                 std::vector<std::vector<Point>> const &cycles);

  /// Skips validation. The caller guarantees a bijection.
  static Permutation from_images_unchecked(std::vector<Point> images) {
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point i) const noexcept { return images_[i]; }
  std::span<Point const> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;

  /// Order as a group element (lcm of cycle lengths). Throws on overflow.
  std::uint64_t order() const;

  /// Smallest point moved, or degree() if none.
  Point first_moved_point() const noexcept;

  std::vector<std::vector<Point>> cycles() const;

  bool operator==(Permutation const &) const = default;
  /// Lexicographic order on image tables.
  std::strong_ordering operator<=>(Permutation const &other) const {
    return images_ <=> other.images_;
  }

private:
  std::vector<Point> images_;
};

/// Apply p, then q. Throws DomainError on degree mismatch.
Permutation compose(Permutation const &p, Permutation const &q);
Permutation inverse(Permutation const &p);

inline Permutation operator*(Permutation const &p, Permutation const &q) {
  return compose(p, q);
}

/// g^-1 x g
Permutation conjugate(Permutation const &x, Permutation const &g);
/// a^-1 b^-1 a b
Permutation commutator(Permutation const &a, Permutation const &b);
Permutation power(Permutation const &p, std::int64_t exponent);

/// Writes `p * q^-1` into `out` without materializing the inverse of q.
void compose_inverse_into(Permutation const &p, Permutation const &q,
                          std::vector<Point> &out);

/// Cycle notation, e.g. "(0 1 2)(3 4)"; the identity prints as "()".
std::string to_string(Permutation const &p);

struct PermutationHash {
  std::size_t operator()(Permutation const &p) const noexcept;
};

} // namespace carter
