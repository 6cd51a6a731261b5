#include "carter/carter.hpp"

#include "carter/arith.hpp"
#include "carter/errors.hpp"
#include "carter/structure.hpp"

#include <algorithm>
#include <set>

namespace carter {

namespace
{

struct ClassRecord {
  Group rep;
  SubgroupFingerprint fp;
  Group normalizer;
};

/// Nilpotent-subgroup class search shared by the two public entry points.
std::vector<ClassRecord> enumerate_nilpotent_classes(Group const &G, Limits const &limits)
{
  if (G.order() > limits.max_nilpotent_enumeration)
    throw CapacityError("order " + std::to_string(G.order()) +
                        " exceeds the nilpotent enumeration cap " +
                        std::to_string(limits.max_nilpotent_enumeration));
  std::vector<ClassRecord> classes;

  auto add_class = [&](Group U) {
    SubgroupFingerprint fp = fingerprint(U, limits);
    for (auto const &c : classes)
      if (c.fp == fp && conjugating_element(G, U, c.rep, limits))
        return;
    if (classes.size() >= limits.max_subgroup_classes)
      throw CapacityError("more than " + std::to_string(limits.max_subgroup_classes) +
                          " subgroup classes");
    classes.push_back({std::move(U), std::move(fp), Group(G.degree())});
  };

  for (auto const &cls : conjugacy_classes(G, limits)) {
    Permutation const &x = cls.front();
    if (is_prime(x.order()))
      add_class(Group(G.degree()).with_generator(x));
  }

  for (std::size_t i = 0; i < classes.size(); ++i) {
    Group const H = classes[i].rep;
    Group const N = normalizer_in(G, H, limits);
    classes[i].normalizer = N;
    std::uint64_t const index = N.order() / H.order();
    if (index == 1)
      continue;
    auto const primes = prime_divisors(index);
    std::vector<Group> extensions;
    N.for_each_element(limits, [&](Permutation const &g) {
      if (H.contains(g))
        return true;
      // g lies in an earlier extension U = <H, g'>; since U/H has prime
      // order, <H, g> = U.
      for (auto const &U : extensions)
        if (U.contains(g))
          return true;
      for (auto p : primes) {
        if (!H.contains(power(g, static_cast<std::int64_t>(p))))
          continue;
        Group U = H.with_generator(g);
        extensions.push_back(U);
        if (is_nilpotent(U))
          add_class(std::move(U));
        break;
      }
      return true;
    });
  }

  std::vector<std::pair<std::vector<std::uint64_t>, std::size_t>> keyed;
  for (std::size_t i = 0; i < classes.size(); ++i)
    keyed.emplace_back(subgroup_key(G, classes[i].rep, limits), i);
  std::sort(keyed.begin(), keyed.end(), [&](auto const &a, auto const &b) {
    auto const &fa = classes[a.second].fp;
    auto const &fb = classes[b.second].fp;
    if (fa != fb)
      return fa < fb;
    return a.first < b.first;
  });
  std::vector<ClassRecord> sorted;
  for (auto const &[key, i] : keyed)
    sorted.push_back(classes[i]);
  return sorted;
}

} // namespace

CarterWitness CarterWitness::make(Group ambient, Group K, Limits const &limits)
{
  if (!is_carter(ambient, K, limits))
    throw DomainError("subgroup is not a Carter subgroup");
  bool const odd = K.order() % 2 == 1;
  bool const three = K.order() % 3 == 0;
  return CarterWitness{std::move(ambient), std::move(K), odd, three};
}

bool is_carter(Group const &G, Group const &K, Limits const &limits)
{
  if (K.degree() != G.degree() || !K.is_subgroup_of(G))
    throw DomainError("is_carter: K is not inside G");
  if (!is_nilpotent(K))
    return false;
  return normalizer(G, K, limits).order() == K.order();
}

SubgroupFingerprint fingerprint(Group const &H, Limits const &limits)
{
  return SubgroupFingerprint{H.order(), element_orders(H, limits), H.orbit_lengths()};
}

std::optional<Permutation> conjugating_element(Group const &G, Group const &U, Group const &V,
                                               Limits const &limits)
{
  if (U.order() != V.order())
    return std::nullopt;
  std::optional<Permutation> found;
  G.for_each_element(limits, [&](Permutation const &x) {
    for (auto const &u : U.generators())
      if (!V.contains(conjugate(u, x)))
        return true;
    found = x;
    return false;
  });
  return found;
}

std::vector<Group> nilpotent_subgroup_classes(Group const &G, Limits const &limits)
{
  std::vector<Group> out;
  for (auto &c : enumerate_nilpotent_classes(G, limits))
    out.push_back(std::move(c.rep));
  return out;
}

std::vector<CarterWitness> carter_subgroups(Group const &G, Limits const &limits)
{
  if (G.is_trivial())
    return {CarterWitness{G, G, true, false}};
  std::vector<CarterWitness> out;
  for (auto const &c : enumerate_nilpotent_classes(G, limits))
    if (c.normalizer.order() == c.rep.order()) {
      bool const odd = c.rep.order() % 2 == 1;
      bool const three = c.rep.order() % 3 == 0;
      out.push_back(CarterWitness{G, c.rep, odd, three});
    }
  return out;
}

} // namespace carter
