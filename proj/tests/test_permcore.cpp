#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "carter/epimorphism.hpp"
#include "carter/errors.hpp"
#include "carter/group_io.hpp"
#include "carter/series.hpp"
#include "support.hpp"

#include <map>
#include <random>
#include <set>

using namespace carter;
using test_support::generated;
using test_support::named;

TEST_CASE("compose applies the left factor first")
{
  CHECK(compose({1, 0}, {1, 0}) == Permutation{0, 1});
  CHECK(compose({1, 2, 3, 0}, {1, 0, 2, 3}) == Permutation{0, 2, 3, 1});
  Permutation const p{2, 0, 1};
  CHECK(compose(p, Permutation::identity(3)) == p);
  CHECK(compose(Permutation::identity(3), p) == p);
  CHECK_THROWS_AS(compose({1, 0}, {0, 1, 2}), DomainError);
}

TEST_CASE("inverse")
{
  CHECK(inverse({1, 2, 0}) == Permutation{2, 0, 1});
  CHECK(inverse({0, 1, 2}) == Permutation{0, 1, 2});
  CHECK(inverse({1, 0, 3, 2}) == Permutation{1, 0, 3, 2});
}

TEST_CASE("permutation validation")
{
  CHECK_THROWS_AS(Permutation({0, 0, 1}), DomainError);
  CHECK_THROWS_AS(Permutation({0, 3}), DomainError);
  CHECK_THROWS_AS(Permutation(std::vector<Point>{}), DomainError);
  CHECK_THROWS_AS(Permutation::from_cycles(3, {{0, 1}, {1, 2}}), DomainError);
  CHECK(Permutation::from_cycles(4, {{0, 1, 2, 3}}) == Permutation{1, 2, 3, 0});
}

TEST_CASE("cycle notation, order and conjugation")
{
  Permutation const p = Permutation::from_cycles(6, {{0, 1, 2}, {3, 4}});
  CHECK(to_string(p) == "(0 1 2)(3 4)");
  CHECK(to_string(Permutation::identity(4)) == "()");
  CHECK(p.order() == 6);
  CHECK(power(p, 6).is_identity());
  CHECK(power(p, -1) == p.inverse());
  // conjugate(x, g) sends g(i) to g(x(i)).
  Permutation const x = Permutation::from_cycles(4, {{0, 1}});
  Permutation const g = Permutation::from_cycles(4, {{1, 2, 3}});
  CHECK(conjugate(x, g) == Permutation::from_cycles(4, {{0, 2}}));
  CHECK(conjugate(x, g) == g.inverse() * x * g);
  Permutation const a = Permutation::from_cycles(3, {{0, 1}});
  Permutation const b = Permutation::from_cycles(3, {{1, 2}});
  CHECK(commutator(a, b) == a.inverse() * b.inverse() * a * b);
}

TEST_CASE("compose is associative and inverse is two-sided on samples")
{
  std::mt19937_64 rng(7);
  Group const S7 = named("symmetric", {7});
  for (int k = 0; k < 200; ++k) {
    Permutation const a = S7.random_element(rng);
    Permutation const b = S7.random_element(rng);
    Permutation const c = S7.random_element(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a * a.inverse()).is_identity());
    CHECK((a.inverse() * a).is_identity());
  }
}

TEST_CASE("group_from_generators")
{
  Group const S4 = generated(4, {{{0, 1, 2, 3}}, {{0, 1}}});
  CHECK(S4.order() == 24);
  CHECK(Group::from_generators(3, {}).order() == 1);
  CHECK(named("psl2", {27}).degree() == 28);
  CHECK(named("psl2", {27}).order() == 9828);

  Limits tight;
  tight.max_degree = 5;
  CHECK_THROWS_AS(Group::from_generators(6, {Permutation::identity(6)}, tight), CapacityError);
  CHECK_THROWS_AS(Group::from_generators(4, {Permutation::identity(3)}), DomainError);
  CHECK_THROWS_AS(Group::from_generators(4, {Permutation::from_cycles(4, {{0, 1}})}, {}, 3),
                  InternalError);
}

TEST_CASE("contains")
{
  Group const A4 = named("alternating", {4});
  Group const S4 = named("symmetric", {4});
  CHECK_FALSE(A4.contains(Permutation::from_cycles(4, {{0, 1}})));
  CHECK(S4.contains(Permutation::from_cycles(4, {{0, 1}})));
  CHECK(Group(3).contains(Permutation::identity(3)));
  CHECK_THROWS_AS(S4.contains(Permutation::identity(5)), DomainError);
}

TEST_CASE("contains agrees with a scan of the elements")
{
  Group const D5 = named("dihedral", {5});
  Group const S5 = named("symmetric", {5});
  std::set<Permutation> listed;
  for (auto const &g : D5.elements())
    listed.insert(g);
  for (auto const &g : S5.elements())
    CHECK(D5.contains(g) == listed.contains(g));
}

TEST_CASE("elements")
{
  auto const s3 = named("symmetric", {3}).elements();
  CHECK(std::set<Permutation>(s3.begin(), s3.end()).size() == 6);

  Group const V4 = generated(4, {{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}});
  auto const v = V4.elements();
  std::set<Permutation> const expected{
      Permutation::identity(4), Permutation::from_cycles(4, {{0, 1}, {2, 3}}),
      Permutation::from_cycles(4, {{0, 2}, {1, 3}}),
      Permutation::from_cycles(4, {{0, 3}, {1, 2}})};
  CHECK(std::set<Permutation>(v.begin(), v.end()) == expected);

  Group const G = named("psigma_l2", {3, 3});
  std::uint64_t count = 0;
  G.for_each_element({}, [&](Permutation const &) {
    ++count;
    return true;
  });
  CHECK(count == 29484);

  Limits tight;
  tight.max_enumeration = 100;
  CHECK_THROWS_AS(named("symmetric", {5}).elements(tight), CapacityError);
}

TEST_CASE("order equals the number of distinct elements")
{
  for (auto const &spec : test_support::corpus_specs(400)) {
    Group const g = construct(spec);
    auto const els = g.elements();
    CHECK(std::set<Permutation>(els.begin(), els.end()).size() == g.order());
    CHECK(g.order() == spec.expected_order());
  }
}

TEST_CASE("rank and unrank are inverse")
{
  Group const G = named("symmetric", {5});
  for (std::uint64_t r = 0; r < G.order(); ++r)
    CHECK(G.rank(G.unrank(r)) == r);
  auto const els = G.elements();
  for (std::size_t r = 0; r < els.size(); ++r)
    CHECK(G.unrank(r) == els[r]);
}

TEST_CASE("chain verification: strong generators fix earlier base points")
{
  for (auto const &spec : test_support::corpus_specs(30000)) {
    Group const g = construct(spec);
    std::uint64_t product = 1;
    auto const base = g.base();
    for (std::size_t level = 0; level < g.chain().size(); ++level) {
      auto const &L = g.chain()[level];
      product *= L.orbit.size();
      for (auto const &s : L.generators)
        for (std::size_t earlier = 0; earlier < level; ++earlier)
          CHECK(s[base[earlier]] == base[earlier]);
      for (std::size_t k = 0; k < L.orbit.size(); ++k)
        CHECK(L.transversal[k][L.base] == L.orbit[k]);
    }
    CHECK(product == g.order());
    for (auto const &gen : g.generators())
      CHECK(g.contains(gen));
  }
}

TEST_CASE("uniform random elements")
{
  CHECK(Group(4).random_element(std::uint64_t{5}).is_identity());
  Group const S3 = named("symmetric", {3});
  CHECK(S3.random_element(std::uint64_t{42}) == S3.random_element(std::uint64_t{42}));

  std::mt19937_64 rng(2024);
  std::map<Permutation, int> freq;
  for (int k = 0; k < 6000; ++k)
    ++freq[S3.random_element(rng)];
  CHECK(freq.size() == 6);
  double const sigma = std::sqrt(6000.0 * (1.0 / 6) * (5.0 / 6));
  for (auto const &[g, n] : freq)
    CHECK(std::abs(n - 1000) <= 5 * sigma);
}

TEST_CASE("epimorphism onto S4/V4")
{
  Group const S4 = named("symmetric", {4});
  Group const V4 = generated(4, {{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}});
  QuotientAction const q = quotient_action(S4, V4);
  CHECK(q.group.order() == 6);
  CHECK(apply_epimorphism(q.map, Permutation::identity(4)).is_identity());
  Permutation const img = apply_epimorphism(q.map, Permutation::from_cycles(4, {{0, 1, 2}}));
  CHECK(img.order() == 3);
  CHECK(q.group.contains(img));

  std::mt19937_64 rng(3);
  for (int k = 0; k < 100; ++k) {
    Permutation const g = S4.random_element(rng);
    Permutation const h = S4.random_element(rng);
    CHECK(q.map(g * h) == q.map(g) * q.map(h));
  }
  CHECK_THROWS_AS(q.map(Permutation::identity(5)), DomainError);
}

TEST_CASE("epimorphism construction is validated")
{
  Group const S3 = named("symmetric", {3});
  Group const Z2 = named("cyclic", {2});
  Permutation const t = Z2.generators().front();
  std::vector<Permutation> sign;
  for (auto const &g : S3.generators())
    sign.push_back(g.order() == 2 ? t : Permutation::identity(2));
  Epimorphism const phi(S3, Z2, sign);
  for (auto const &g : S3.elements()) {
    std::size_t transpositions = 0;
    for (auto const &c : g.cycles())
      transpositions += c.size() - 1;
    CHECK(phi(g).is_identity() == (transpositions % 2 == 0));
  }
  CHECK(phi(Permutation::from_cycles(3, {{0, 1}})) == t);
  CHECK(phi(Permutation::from_cycles(3, {{0, 1, 2}})).is_identity());

  // Sending the 3-cycle to the transposition is not a homomorphism.
  std::vector<Permutation> bad(S3.generators().size(), t);
  CHECK_THROWS_AS(Epimorphism(S3, Z2, bad), DomainError);
  // Not onto.
  std::vector<Permutation> trivial(S3.generators().size(), Permutation::identity(2));
  CHECK_THROWS_AS(Epimorphism(S3, Z2, trivial), DomainError);
  CHECK_THROWS_AS(Epimorphism(S3, Z2, {t}), DomainError);
  CHECK(Epimorphism::identity(S3)(Permutation::from_cycles(3, {{1, 2}})) ==
        Permutation::from_cycles(3, {{1, 2}}));
}

TEST_CASE("group files round-trip")
{
  Group const G = named("frobenius", {7, 3});
  NamedGroup const back = parse_group_json(group_to_json("F21", G));
  CHECK(back.name == "F21");
  CHECK(back.group.same_elements(G));
  CHECK_THROWS_AS(parse_group_json("{"), DomainError);
  CHECK_THROWS_AS(parse_group_json(R"({"degree": 3})"), DomainError);
  CHECK_THROWS_AS(parse_group_json(R"({"degree": 3, "generators": [[0, 1]]})"), DomainError);
  CHECK_THROWS_AS(parse_group_json(R"({"degree": 3, "generators": [[0, 0, 1]]})"), DomainError);
  CHECK_THROWS_AS(read_group_file("/nonexistent/group.json"), DomainError);
}
