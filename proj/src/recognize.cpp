#include "carter/recognize.hpp"

#include "carter/arith.hpp"
#include "carter/errors.hpp"
#include "carter/field.hpp"
#include "carter/structure.hpp"

#include <sstream>

namespace carter {

namespace
{

std::uint64_t factorial(std::uint64_t n)
{
  std::uint64_t r = 1;
  for (std::uint64_t i = 2; i <= n; ++i)
    r *= i;
  return r;
}

/// q = p^f for an odd prime p, or nullopt.
std::optional<std::pair<std::uint32_t, unsigned>> odd_prime_power(std::uint64_t q)
{
  auto primes = prime_divisors(q);
  if (primes.size() != 1 || primes.front() == 2)
    return std::nullopt;
  unsigned f = 0;
  for (std::uint64_t x = q; x > 1; x /= primes.front())
    ++f;
  return std::make_pair(static_cast<std::uint32_t>(primes.front()), f);
}

std::uint64_t ipow(std::uint64_t b, std::uint64_t e)
{
  std::uint64_t r = 1;
  while (e-- > 0)
    r *= b;
  return r;
}

Permutation cycle_perm(std::size_t n)
{
  std::vector<Point> images(n);
  for (std::size_t i = 0; i < n; ++i)
    images[i] = static_cast<Point>((i + 1) % n);
  return Permutation::from_images_unchecked(std::move(images));
}

/// Generators of PSL(2, p^f) on the projective line, optionally with the
/// Frobenius x -> x^p.
std::vector<Permutation> projective_generators(FiniteField const &F, bool frobenius)
{
  std::uint32_t const q = F.size();
  Point const infinity = q;
  auto make = [&](auto &&map) {
    std::vector<Point> images(q + 1);
    for (Point x = 0; x <= q; ++x)
      images[x] = map(x);
    return Permutation(std::move(images));
  };
  FiniteField::Element const lambda = F.mul(F.primitive_element(), F.primitive_element());
  std::vector<Permutation> gens;
  // x -> x + 1
  gens.push_back(make([&](Point x) { return x == infinity ? infinity : F.add(x, 1); }));
  // x -> lambda x, lambda a generator of the nonzero squares
  gens.push_back(make([&](Point x) { return x == infinity ? infinity : F.mul(lambda, x); }));
  // x -> -1/x
  gens.push_back(make([&](Point x) -> Point {
    if (x == infinity)
      return 0;
    if (x == 0)
      return infinity;
    return F.neg(F.inv(x));
  }));
  if (frobenius && F.degree() > 1)
    gens.push_back(make([&](Point x) { return x == infinity ? infinity : F.frobenius(x); }));
  return gens;
}

} // namespace

std::string family_keyword(Family f)
{
  switch (f) {
  case Family::symmetric:
    return "symmetric";
  case Family::alternating:
    return "alternating";
  case Family::cyclic:
    return "cyclic";
  case Family::dihedral:
    return "dihedral";
  case Family::frobenius:
    return "frobenius";
  case Family::psl2:
    return "psl2";
  case Family::psigma_l2:
    return "psigma_l2";
  }
  return "?";
}

GroupSpec parse_group_spec(std::string const &family, std::vector<std::uint64_t> const &params)
{
  static std::pair<char const *, Family> const table[] = {
      {"symmetric", Family::symmetric}, {"alternating", Family::alternating},
      {"cyclic", Family::cyclic},       {"dihedral", Family::dihedral},
      {"frobenius", Family::frobenius}, {"psl2", Family::psl2},
      {"psigma_l2", Family::psigma_l2},
  };
  for (auto const &[key, fam] : table)
    if (family == key) {
      GroupSpec spec{fam, params};
      spec.validate();
      return spec;
    }
  throw DomainError("unknown group family '" + family + "'");
}

void GroupSpec::validate() const
{
  auto need = [&](std::size_t n) {
    if (params.size() != n)
      throw DomainError(family_keyword(family) + " takes " + std::to_string(n) +
                        " parameter(s)");
  };
  switch (family) {
  case Family::symmetric:
  case Family::alternating:
  case Family::cyclic:
    need(1);
    if (params[0] < 1)
      throw DomainError("parameter must be positive");
    break;
  case Family::dihedral:
    need(1);
    if (params[0] < 3)
      throw DomainError("dihedral(m) needs m >= 3");
    break;
  case Family::frobenius:
    need(2);
    if (!is_prime(params[0]) || params[1] < 1 || (params[0] - 1) % params[1] != 0)
      throw DomainError("frobenius(p, k) needs p prime and k | p - 1");
    break;
  case Family::psl2:
    need(1);
    if (params[0] < 5 || !odd_prime_power(params[0]))
      throw DomainError("psl2(q) needs an odd prime power q >= 5");
    break;
  case Family::psigma_l2:
    need(2);
    if (!is_prime(params[0]) || params[0] == 2 || params[1] < 1 ||
        ipow(params[0], params[1]) < 5)
      throw DomainError("psigma_l2(p, f) needs an odd prime p and p^f >= 5");
    break;
  }
}

std::string GroupSpec::name() const
{
  std::ostringstream os;
  switch (family) {
  case Family::symmetric:
    os << "S" << params[0];
    break;
  case Family::alternating:
    os << "A" << params[0];
    break;
  case Family::cyclic:
    os << "Z" << params[0];
    break;
  case Family::dihedral:
    os << "D" << 2 * params[0];
    break;
  case Family::frobenius:
    os << "Z" << params[0] << ":Z" << params[1];
    break;
  case Family::psl2:
    os << "PSL(2," << params[0] << ")";
    break;
  case Family::psigma_l2:
    os << "PSigmaL(2," << ipow(params[0], params[1]) << ")";
    break;
  }
  return os.str();
}

std::uint64_t psl2_order(std::uint64_t q) { return q * (q * q - 1) / 2; }

std::uint64_t GroupSpec::expected_order() const
{
  switch (family) {
  case Family::symmetric:
    return factorial(params[0]);
  case Family::alternating:
    return params[0] < 2 ? 1 : factorial(params[0]) / 2;
  case Family::cyclic:
    return params[0];
  case Family::dihedral:
    return 2 * params[0];
  case Family::frobenius:
    return params[0] * params[1];
  case Family::psl2:
    return psl2_order(params[0]);
  case Family::psigma_l2:
    return params[1] * psl2_order(ipow(params[0], params[1]));
  }
  return 0;
}

std::string field_modulus_for(std::uint64_t q)
{
  auto pf = odd_prime_power(q);
  if (!pf)
    throw DomainError("not an odd prime power");
  return FiniteField(pf->first, pf->second).modulus_string();
}

Group construct(GroupSpec const &spec, Limits const &limits)
{
  spec.validate();
  std::uint64_t const a = spec.params[0];
  std::vector<Permutation> gens;
  std::size_t degree = 1;
  switch (spec.family) {
  case Family::symmetric:
    degree = a;
    if (a >= 2) {
      gens.push_back(cycle_perm(a));
      gens.push_back(Permutation::from_cycles(a, {{0, 1}}));
    }
    break;
  case Family::alternating:
    degree = a;
    for (Point i = 2; i < a; ++i)
      gens.push_back(Permutation::from_cycles(a, {{0, 1, i}}));
    break;
  case Family::cyclic:
    degree = a;
    if (a >= 2)
      gens.push_back(cycle_perm(a));
    break;
  case Family::dihedral: {
    degree = a;
    gens.push_back(cycle_perm(a));
    std::vector<Point> reflection(a);
    for (std::uint64_t i = 0; i < a; ++i)
      reflection[i] = static_cast<Point>((a - i) % a);
    gens.emplace_back(std::move(reflection));
    break;
  }
  case Family::frobenius: {
    FiniteField F(static_cast<std::uint32_t>(a), 1);
    degree = a;
    gens.push_back(cycle_perm(a));
    if (spec.params[1] > 1) {
      auto mult = F.pow(F.primitive_element(), (a - 1) / spec.params[1]);
      std::vector<Point> images(a);
      for (Point x = 0; x < a; ++x)
        images[x] = F.mul(mult, x);
      gens.emplace_back(std::move(images));
    }
    break;
  }
  case Family::psl2: {
    auto pf = odd_prime_power(a);
    FiniteField F(pf->first, pf->second);
    degree = F.size() + 1;
    gens = projective_generators(F, false);
    break;
  }
  case Family::psigma_l2: {
    FiniteField F(static_cast<std::uint32_t>(a), static_cast<unsigned>(spec.params[1]));
    degree = F.size() + 1;
    gens = projective_generators(F, true);
    break;
  }
  }
  return Group::from_generators(degree, std::move(gens), limits);
}

FactorId FactorId::cyclic_prime(std::uint64_t p) { return {Kind::cyclic_prime, p, p}; }

FactorId FactorId::l2_3odd(std::uint64_t n)
{
  std::uint64_t q = ipow(3, 2 * n + 1);
  return {Kind::l2_3odd, psl2_order(q), n};
}

FactorId FactorId::other_nonabelian_simple(std::uint64_t order)
{
  return {Kind::other_nonabelian_simple, order, 0};
}

std::string FactorId::to_string() const
{
  switch (kind) {
  case Kind::cyclic_prime:
    return "CyclicPrime(" + std::to_string(parameter) + ")";
  case Kind::l2_3odd:
    return "L2_3odd(" + std::to_string(parameter) + ")";
  case Kind::other_nonabelian_simple:
    return "OtherNonabelianSimple(" + std::to_string(order) + ")";
  }
  return "?";
}

std::optional<std::uint64_t> is_L2_3odd_order(std::uint64_t m)
{
  for (std::uint64_t n = 1;; ++n) {
    unsigned __int128 q = 1;
    for (std::uint64_t i = 0; i < 2 * n + 1; ++i)
      q *= 3;
    unsigned __int128 value = q * (q * q - 1) / 2;
    if (value == m)
      return n;
    if (value > m)
      return std::nullopt;
  }
}

FactorId identify_factor(Section const &sec, Limits const &limits)
{
  std::uint64_t const m = sec.order();
  if (m == 1)
    throw DomainError("identify_factor: trivial section");
  if (is_prime(m))
    return FactorId::cyclic_prime(m);
  QuotientAction q = quotient_action(sec.top(), sec.bottom(), limits);
  if (normal_subgroups(q.group, limits).size() != 2)
    throw DomainError("identify_factor: section of order " + std::to_string(m) +
                      " is not simple");
  if (auto n = is_L2_3odd_order(m))
    return FactorId::l2_3odd(*n);
  return FactorId::other_nonabelian_simple(m);
}

bool matches_psl2_spectrum(Section const &sec, std::uint64_t q, Limits const &limits)
{
  QuotientAction quotient = quotient_action(sec.top(), sec.bottom(), limits);
  Group reference = construct(GroupSpec{Family::psl2, {q}}, limits);
  return element_orders(quotient.group, limits) == element_orders(reference, limits);
}

} // namespace carter
