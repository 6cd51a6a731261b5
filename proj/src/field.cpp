#include "carter/field.hpp"

#include "carter/arith.hpp"
#include "carter/errors.hpp"

#include <sstream>

namespace carter {

namespace
{

// Conway polynomials for GF(3^f), lowest degree first.
std::vector<std::uint32_t> const kTernaryModuli[] = {
    {},
    {1, 1},                // x + 1
    {2, 2, 1},             // x^2 + 2x + 2
    {1, 2, 0, 1},          // x^3 + 2x + 1
    {2, 0, 0, 2, 1},       // x^4 + 2x^3 + 2
    {1, 2, 0, 0, 0, 1},    // x^5 + 2x + 1
    {2, 2, 1, 0, 2, 0, 1}, // x^6 + 2x^4 + x^2 + 2x + 2
    {1, 0, 2, 0, 0, 0, 0, 1}, // x^7 + 2x^2 + 1
};

using Poly = std::vector<std::uint32_t>;

void trim(Poly &a)
{
  while (!a.empty() && a.back() == 0)
    a.pop_back();
}

/// Remainder of a modulo monic-or-not b over GF(p).
Poly poly_mod(Poly a, Poly const &b, std::uint32_t p)
{
  trim(a);
  std::uint32_t lead_inv = 1;
  while ((lead_inv * b.back()) % p != 1)
    ++lead_inv;
  while (a.size() >= b.size()) {
    std::uint32_t factor = (a.back() * lead_inv) % p;
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] = (a[shift + i] + (p - factor) * b[i]) % p;
    trim(a);
  }
  return a;
}

} // namespace

bool is_irreducible_mod_p(std::vector<std::uint32_t> const &coeffs, std::uint32_t p)
{
  Poly f = coeffs;
  trim(f);
  std::size_t const deg = f.size() - 1;
  if (deg <= 1)
    return deg == 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    // Enumerate monic polynomials of degree d.
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i)
      count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty())
        return false;
    }
  }
  return true;
}

FiniteField::FiniteField(std::uint32_t p, unsigned f) : p_(p), f_(f)
{
  if (!is_prime(p))
    throw DomainError("field characteristic must be prime");
  if (f == 0)
    throw DomainError("field degree must be positive");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < f; ++i) {
    q *= p;
    if (q > (1u << 20))
      throw CapacityError("field order too large");
  }
  q_ = static_cast<std::uint32_t>(q);
  if (p == 3 && f < std::size(kTernaryModuli)) {
    modulus_ = kTernaryModuli[f];
  } else {
    // Least monic irreducible of degree f, coefficients read as base-p digits.
    for (std::uint64_t code = 0; code < q; ++code) {
      Poly g(f + 1, 0);
      std::uint64_t c = code;
      for (unsigned i = 0; i < f; ++i) {
        g[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      g[f] = 1;
      if (is_irreducible_mod_p(g, p)) {
        modulus_ = std::move(g);
        break;
      }
    }
  }
  // Least element of multiplicative order q - 1.
  auto const factors = prime_divisors(q_ - 1);
  for (Element g = 1; g < q_ && primitive_ == 0; ++g) {
    bool generates = true;
    for (auto r : factors) {
      Element x = 1;
      Element base = g;
      for (std::uint64_t e = (q_ - 1) / r; e > 0; e >>= 1) {
        if (e & 1u)
          x = mul_poly(x, base);
        base = mul_poly(base, base);
      }
      if (x == 1) {
        generates = false;
        break;
      }
    }
    if (generates)
      primitive_ = g;
  }
  if (primitive_ == 0)
    throw InternalError("no primitive element: modulus is not irreducible");
  exp_.resize(q_ - 1);
  log_.assign(q_, 0);
  Element x = 1;
  for (std::uint32_t i = 0; i + 1 < q_; ++i) {
    exp_[i] = x;
    log_[x] = i;
    x = mul_poly(x, primitive_);
  }
}

std::string FiniteField::modulus_string() const
{
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = modulus_.size(); i-- > 0;) {
    if (modulus_[i] == 0)
      continue;
    if (!first)
      os << " + ";
    first = false;
    if (modulus_[i] != 1 || i == 0)
      os << modulus_[i];
    if (i >= 1)
      os << "x";
    if (i >= 2)
      os << "^" << i;
  }
  return os.str();
}

FiniteField::Element FiniteField::add(Element a, Element b) const
{
  Element r = 0;
  Element place = 1;
  for (unsigned i = 0; i < f_; ++i) {
    r += ((a % p_ + b % p_) % p_) * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return r;
}

FiniteField::Element FiniteField::neg(Element a) const
{
  Element r = 0;
  Element place = 1;
  for (unsigned i = 0; i < f_; ++i) {
    r += ((p_ - a % p_) % p_) * place;
    a /= p_;
    place *= p_;
  }
  return r;
}

FiniteField::Element FiniteField::mul_poly(Element a, Element b) const
{
  if (f_ == 1)
    return static_cast<Element>((static_cast<std::uint64_t>(a) * b) % p_);
  Poly x(f_, 0), y(f_, 0);
  for (unsigned i = 0; i < f_; ++i) {
    x[i] = a % p_;
    y[i] = b % p_;
    a /= p_;
    b /= p_;
  }
  Poly prod(2 * f_, 0);
  for (unsigned i = 0; i < f_; ++i)
    for (unsigned j = 0; j < f_; ++j)
      prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
  Poly r = poly_mod(prod, modulus_, p_);
  Element out = 0;
  for (std::size_t i = r.size(); i-- > 0;)
    out = out * p_ + r[i];
  return out;
}

FiniteField::Element FiniteField::mul(Element a, Element b) const
{
  if (a == 0 || b == 0)
    return 0;
  return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

FiniteField::Element FiniteField::inv(Element a) const
{
  if (a == 0)
    throw DomainError("inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

FiniteField::Element FiniteField::pow(Element a, std::uint64_t e) const
{
  if (e == 0)
    return 1;
  if (a == 0)
    return 0;
  return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1)];
}

} // namespace carter
