#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "carter/arith.hpp"
#include "carter/errors.hpp"
#include "carter/structure.hpp"
#include "support.hpp"

#include <algorithm>

using namespace carter;
using test_support::generated;
using test_support::named;

namespace
{

std::vector<std::uint64_t> orders(std::vector<Group> const &gs)
{
  std::vector<std::uint64_t> out;
  for (auto const &g : gs)
    out.push_back(g.order());
  return out;
}

Group const V4 = generated(4, {{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}});

} // namespace

TEST_CASE("normal_closure")
{
  Group const S4 = named("symmetric", {4});
  CHECK(normal_closure(S4, {Permutation::from_cycles(4, {{0, 1}})}).order() == 24);
  Group const N = normal_closure(S4, {Permutation::from_cycles(4, {{0, 1}, {2, 3}})});
  CHECK(N.same_elements(V4));
  CHECK(normal_closure(S4, {Permutation::identity(4)}).is_trivial());
  CHECK_THROWS_AS(normal_closure(named("alternating", {4}), {Permutation::from_cycles(4, {{0, 1}})}),
                  DomainError);
}

TEST_CASE("derived_series")
{
  auto const s4 = derived_series(named("symmetric", {4}));
  CHECK(orders(s4) == std::vector<std::uint64_t>{24, 12, 4, 1});
  CHECK(is_solvable(named("symmetric", {4})));
  CHECK(orders(derived_series(named("alternating", {5}))) == std::vector<std::uint64_t>{60, 60});
  CHECK_FALSE(is_solvable(named("alternating", {5})));
  CHECK(orders(derived_series(named("cyclic", {6}))) == std::vector<std::uint64_t>{6, 1});
}

TEST_CASE("lower_central_series and nilpotency")
{
  CHECK(is_nilpotent(named("dihedral", {4})));
  CHECK_FALSE(is_nilpotent(named("symmetric", {3})));
  CHECK(orders(lower_central_series(named("symmetric", {3}))) ==
        std::vector<std::uint64_t>{6, 3, 3});
  CHECK(is_nilpotent(Group(3)));
}

TEST_CASE("normalizer")
{
  Group const S4 = named("symmetric", {4});
  Group const C4 = generated(4, {{{0, 1, 2, 3}}});
  Group const N = normalizer(S4, C4);
  CHECK(N.order() == 8);
  CHECK_FALSE(N.is_abelian());
  Group const S3 = named("symmetric", {3});
  Group const T = generated(3, {{{0, 1}}});
  CHECK(normalizer(S3, T).same_elements(T));
  CHECK(normalizer(S4, S4).same_elements(S4));
  CHECK_THROWS_AS(normalizer(named("alternating", {4}), generated(4, {{{0, 1}}})), DomainError);
}

TEST_CASE("centralizer")
{
  Group const S4 = named("symmetric", {4});
  CHECK(centralizer(S4, V4).same_elements(V4));
  CHECK(centralizer(S4, Group(4)).same_elements(S4));
  Group const Z6 = named("cyclic", {6});
  CHECK(centralizer(Z6, Z6).same_elements(Z6));
}

TEST_CASE("conjugacy_classes")
{
  auto sizes = [](Group const &g) {
    std::vector<std::size_t> out;
    for (auto const &c : conjugacy_classes(g))
      out.push_back(c.size());
    std::sort(out.begin(), out.end());
    return out;
  };
  CHECK(sizes(named("symmetric", {3})) == std::vector<std::size_t>{1, 2, 3});
  CHECK(sizes(named("cyclic", {5})) == std::vector<std::size_t>(5, 1));
  CHECK(sizes(named("symmetric", {4})) == std::vector<std::size_t>{1, 3, 6, 6, 8});
}

TEST_CASE("normal_subgroups")
{
  CHECK(orders(normal_subgroups(named("symmetric", {4}))) ==
        std::vector<std::uint64_t>{1, 4, 12, 24});
  CHECK(orders(normal_subgroups(named("alternating", {5}))) == std::vector<std::uint64_t>{1, 60});
  CHECK(orders(normal_subgroups(named("cyclic", {6}))) == std::vector<std::uint64_t>{1, 2, 3, 6});
}

TEST_CASE("sylow_subgroup")
{
  Group const S4 = named("symmetric", {4});
  CHECK(sylow_subgroup(S4, 2).order() == 8);
  CHECK(sylow_subgroup(S4, 5).is_trivial());
  CHECK(sylow_subgroup(named("psigma_l2", {3, 3}), 3).order() == 81);
  CHECK_THROWS_AS(sylow_subgroup(S4, 4), DomainError);
}

TEST_CASE("o_pprime")
{
  Group const O = o_pprime(named("frobenius", {7, 3}), 3);
  CHECK(O.order() == 7);
  CHECK(o_pprime(named("symmetric", {4}), 2).is_trivial());
  CHECK(o_pprime(named("cyclic", {6}), 5).order() == 6);
}

TEST_CASE("intersection")
{
  Group const S4 = named("symmetric", {4});
  Group const D8 = sylow_subgroup(S4, 2);
  Group const A4 = named("alternating", {4});
  Group const I = intersection(D8, A4);
  CHECK(I.same_elements(V4));
}

TEST_CASE("subgroup invariants across the corpus")
{
  for (auto const &spec : test_support::corpus_specs(400)) {
    CAPTURE(spec.name());
    Group const G = construct(spec);
    for (auto p : prime_divisors(G.order())) {
      Group const P = sylow_subgroup(G, p);
      CHECK(P.order() == p_part(G.order(), p));
      Group const N = normalizer(G, P);
      Group const C = centralizer(G, P);
      CHECK(P.is_subgroup_of(N));
      CHECK(is_normalized_by(P, N));
      CHECK(C.is_subgroup_of(N));

      Group const O = o_pprime(G, p);
      CHECK(O.order() % p != 0);
      CHECK(is_normalized_by(O, G));
    }
    auto const normals = normal_subgroups(G);
    for (auto const &N : normals) {
      CHECK(is_normalized_by(N, G));
      for (auto p : prime_divisors(G.order()))
        if (N.order() % p != 0)
          CHECK(N.is_subgroup_of(o_pprime(G, p)));
    }
    if (G.order() <= 100) {
      auto in_list = [&](Group const &X) {
        return std::any_of(normals.begin(), normals.end(),
                           [&](Group const &N) { return N.same_elements(X); });
      };
      for (auto const &A : normals)
        for (auto const &B : normals) {
          CHECK(in_list(intersection(A, B)));
          CHECK(in_list(A.with_generators(B.generators())));
        }
    }
    if (is_nilpotent(G))
      CHECK(is_solvable(G));
  }
}

TEST_CASE("nilpotent implies solvable on the full corpus")
{
  for (auto const &spec : test_support::corpus_specs(30000)) {
    Group const G = construct(spec);
    if (is_nilpotent(G))
      CHECK(is_solvable(G));
  }
}

TEST_CASE("structure agrees with the brute-force oracle")
{
  for (auto const &spec : test_support::corpus_specs(200)) {
    CAPTURE(spec.name());
    Group const G = construct(spec);
    auto const O = test_support::to_oracle(G);
    REQUIRE(O.order() == G.order());

    oracle::Subset const all(O.order(), true);
    CHECK(O.is_solvable(all) == is_solvable(G));
    CHECK(O.is_nilpotent(all) == is_nilpotent(G));
    CHECK(O.count(O.commutator_subgroup(all, all)) == derived_subgroup(G).order());

    std::vector<std::size_t> sizes;
    for (auto const &c : conjugacy_classes(G))
      sizes.push_back(c.size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == O.conjugacy_class_sizes());

    auto const normals = normal_subgroups(G);
    auto const expected = O.normal_subgroups();
    CHECK(normals.size() == expected.size());
    for (auto const &N : normals)
      CHECK(std::find(expected.begin(), expected.end(), test_support::subset_of(O, N)) !=
            expected.end());

    for (auto p : prime_divisors(G.order())) {
      Group const P = sylow_subgroup(G, p);
      auto const sp = test_support::subset_of(O, P);
      CHECK(O.count(O.normalizer(sp)) == normalizer(G, P).order());
      CHECK(O.count(O.centralizer(sp)) == centralizer(G, P).order());
    }
  }
}
