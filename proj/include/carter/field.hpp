#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace carter {

/**
 * GF(p^f) with elements encoded as integers 0..q-1 whose base-p digits are
 * the coefficients of a polynomial in the generator x, lowest degree first.
 * Multiplication uses log/exp tables over a primitive element.
 */
class FiniteField {
public:
  using Element = std::uint32_t;

  /// For p = 3 and f <= 7 the modulus is a fixed table entry; otherwise the
  /// lexicographically least monic irreducible polynomial of degree f.
  FiniteField(std::uint32_t p, unsigned f);

  std::uint32_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return f_; }
  std::uint32_t size() const noexcept { return q_; }
  /// Monic modulus coefficients, lowest degree first (length f + 1).
  std::vector<std::uint32_t> const &modulus() const noexcept { return modulus_; }
  std::string modulus_string() const;

  Element add(Element a, Element b) const;
  Element neg(Element a) const;
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  Element mul(Element a, Element b) const;
  Element inv(Element a) const;
  Element pow(Element a, std::uint64_t e) const;
  Element frobenius(Element a) const { return pow(a, p_); }
  Element primitive_element() const noexcept { return primitive_; }

private:
  std::uint32_t p_;
  unsigned f_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  Element primitive_ = 0;
  std::vector<Element> exp_;
  std::vector<std::uint32_t> log_;

  Element mul_poly(Element a, Element b) const;
};

/// Trial division by all monic polynomials of degree <= f/2 over GF(p).
bool is_irreducible_mod_p(std::vector<std::uint32_t> const &coeffs, std::uint32_t p);

} // namespace carter
