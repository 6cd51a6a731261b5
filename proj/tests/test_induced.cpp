#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "carter/errors.hpp"
#include "carter/induced.hpp"
#include "carter/structure.hpp"
#include "support.hpp"

#include <random>

using namespace carter;
using test_support::generated;
using test_support::named;

namespace
{

Group const S4 = named("symmetric", {4});
Group const V4 = generated(4, {{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}});

} // namespace

TEST_CASE("induced_aut on S4 acting on V4")
{
  Section const sec = Section::make(S4, V4, Group(4));
  InducedAutGroup const all = induced_aut(S4, sec);
  CHECK(all.image.degree() == 4);
  CHECK(all.image.order() == 6);
  CHECK(all.normalizer_part.order() == 24);
  CHECK(all.kernel.same_elements(V4));

  Group const T = generated(4, {{{0, 1}}});
  InducedAutGroup const t = induced_aut(T, sec);
  CHECK(t.image.order() == 2);

  Section const degenerate = Section::make(S4, V4, V4);
  InducedAutGroup const d = induced_aut(T, degenerate);
  CHECK(d.image.degree() == 1);
  CHECK(d.image.is_trivial());

  CHECK_THROWS_AS(induced_aut(named("symmetric", {5}), sec), DomainError);
}

TEST_CASE("the identity coset is fixed and the rule is Ba -> B x^-1 a x")
{
  Group const A4 = named("alternating", {4});
  Section const sec = Section::make(S4, A4, V4);
  for (auto const &x : S4.elements()) {
    Permutation const p = induced_permutation(sec, x);
    CHECK(p[0] == 0);
    for (std::size_t k = 0; k < sec.order(); ++k) {
      Permutation const &a = sec.cosets().representative(k);
      CHECK(p[static_cast<Point>(k)] == sec.cosets().index_of(conjugate(a, x)));
    }
  }
}

TEST_CASE("centralizer_restriction_check and aut_subgroup_embedding")
{
  Section const sec = Section::make(S4, V4, Group(4));
  Group const D8 = sylow_subgroup(S4, 2);
  CHECK(centralizer_restriction_check(S4, D8, sec));
  CHECK(centralizer_restriction_check(S4, S4, sec));
  CHECK(centralizer_restriction_check(S4, Group(4), sec));
  CHECK(aut_subgroup_embedding(S4, D8, sec));
  CHECK(aut_subgroup_embedding(S4, S4, sec));

  // H meets N_G(A/B) trivially: the image is trivial and the embedding holds.
  Group const C3 = generated(4, {{{0, 1, 2}}});
  Section const small = Section::make(S4, C3, Group(4));
  Group const H = generated(4, {{{0, 3}}});
  CHECK(induced_aut(H, small).normalizer_part.is_trivial());
  CHECK(aut_subgroup_embedding(S4, H, small));

  CHECK_THROWS_AS(aut_subgroup_embedding(named("alternating", {4}), H, small), DomainError);
}

TEST_CASE("induced automorphisms agree with the brute-force oracle")
{
  std::mt19937_64 rng(11);
  for (auto const &spec : test_support::corpus_specs(200)) {
    CAPTURE(spec.name());
    Group const G = construct(spec);
    auto const O = test_support::to_oracle(G);
    Series const chief = chief_series(G);
    std::vector<Section> sections;
    for (std::size_t i = 0; i < chief.terms.size(); ++i)
      for (std::size_t j = i + 1; j < chief.terms.size(); ++j)
        sections.push_back(Section::make(G, chief.terms[i], chief.terms[j]));
    for (auto const &sec : sections) {
      for (int k = 0; k < 3; ++k) {
        Group const H = Group::from_generators(
            G.degree(), {G.random_element(rng), G.random_element(rng)});
        InducedAutGroup const aut = induced_aut(H, sec);
        auto const [n, c] = O.induced_orders(test_support::subset_of(O, H),
                                             test_support::subset_of(O, sec.top()),
                                             test_support::subset_of(O, sec.bottom()));
        CHECK(aut.normalizer_part.order() == n);
        CHECK(aut.kernel.order() == c);
        CHECK(aut.image.order() * aut.kernel.order() == aut.normalizer_part.order());
        CHECK(aut.image.degree() == sec.order());
        CHECK(centralizer_restriction_check(G, H, sec));
        CHECK(aut_subgroup_embedding(G, H, sec));
      }
      // Prime-order sections: Aut_G lies in the cyclic group Aut(Z_p).
      if (sec.order() > 1 && oracle::primes_of(sec.order()) ==
                                 std::vector<std::uint64_t>{sec.order()})
        CHECK((sec.order() - 1) % induced_aut(G, sec).image.order() == 0);
    }
  }
}

TEST_CASE("Aut_G of the PSL(2,27) section of PSigmaL(2,27)")
{
  Group const G = named("psigma_l2", {3, 3});
  Series const chief = chief_series(G);
  Section const sec = Section::make(G, chief.terms[1], chief.terms[2]);
  InducedAutGroup const aut = induced_aut(G, sec);
  CHECK(aut.image.degree() == 9828);
  CHECK(aut.image.order() == 29484);
  CHECK(aut.kernel.is_trivial());
}
