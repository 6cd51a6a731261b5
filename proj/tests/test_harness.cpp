#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "carter/errors.hpp"
#include "carter/group_io.hpp"
#include "carter/harness.hpp"
#include "carter/structure.hpp"
#include "support.hpp"

#include <filesystem>
#include <fstream>

using namespace carter;
using test_support::generated;
using test_support::named;

namespace
{

Series series_of(Group const &G, std::vector<Group> terms, SeriesKind kind)
{
  Series s{G, std::move(terms), kind, {}};
  if (kind == SeriesKind::rc) {
    auto witness = refined_chief_series(s);
    s.chief_witness = witness ? *witness : s.terms;
  }
  return s;
}

/// A5 x A5 on ten points, with its two direct factors.
struct DoubleA5 {
  Group G = generated(10, {{{0, 1, 2}}, {{2, 3, 4}}, {{5, 6, 7}}, {{7, 8, 9}}});
  Group left = generated(10, {{{0, 1, 2}}, {{2, 3, 4}}});
  Group right = generated(10, {{{5, 6, 7}}, {{7, 8, 9}}});
};

std::filesystem::path scratch_dir(std::string const &name)
{
  auto dir = std::filesystem::temp_directory_path() / ("carter_kit_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

} // namespace

TEST_CASE("gjh on Z6 matches the two factor orders crosswise")
{
  Group const Z6 = named("cyclic", {6});
  Permutation const g = Z6.generators().front();
  Group const Z3 = Group::from_generators(6, {power(g, 2)});
  Group const Z2 = Group::from_generators(6, {power(g, 3)});
  Series const rc = series_of(Z6, {Z6, Z3, Group(6)}, SeriesKind::rc);
  Series const comp = series_of(Z6, {Z6, Z2, Group(6)}, SeriesKind::composition);
  auto const [sigma, report] = check_gjh(Z6, rc, comp);
  CHECK(report.verdict == Verdict::pass);
  CHECK(sigma.sigma == std::vector<std::size_t>{1, 0});
  CHECK(sigma.verdicts == std::vector<PairVerdict>(2, PairVerdict::containment_verified));
  for (auto const &s : report.evidence["rc_sections"])
    CHECK(s["aut_order"] == 1);
}

TEST_CASE("gjh on S4 across the three Klein-level choices")
{
  Group const S4 = named("symmetric", {4});
  Group const A4 = named("alternating", {4});
  Group const V4 = generated(4, {{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}});
  Group const a = generated(4, {{{0, 1}, {2, 3}}});
  Group const b = generated(4, {{{0, 2}, {1, 3}}});
  Series const rc = series_of(S4, {S4, A4, V4, a, Group(4)}, SeriesKind::rc);
  Series const comp = series_of(S4, {S4, A4, V4, b, Group(4)}, SeriesKind::composition);
  auto const [sigma, report] = check_gjh(S4, rc, comp);
  CHECK(report.verdict == Verdict::pass);
  CHECK(sigma.sigma.size() == 4);
  Series const rc2 = series_of(S4, {S4, A4, V4, b, Group(4)}, SeriesKind::rc);
  auto const [sigma2, report2] = check_gjh(S4, rc, rc2);
  CHECK(report2.verdict == Verdict::pass);
  CHECK(report2.check == "gjh_rc");
}

TEST_CASE("gjh on a simple group")
{
  Group const A5 = named("alternating", {5});
  Series const rc = rc_series(A5);
  auto const [sigma, report] = check_gjh(A5, rc, composition_series(A5, 1));
  CHECK(report.verdict == Verdict::pass);
  CHECK(sigma.sigma == std::vector<std::size_t>{0});
}

TEST_CASE("gjh finds an isomorphism between different copies of A5")
{
  DoubleA5 const d;
  Series const rc = series_of(d.G, {d.G, d.left, Group(10)}, SeriesKind::rc);
  Series const comp = series_of(d.G, {d.G, d.right, Group(10)}, SeriesKind::composition);
  auto const [sigma, report] = check_gjh(d.G, rc, comp);
  CHECK(report.verdict == Verdict::pass);
  CHECK(sigma.verdicts == std::vector<PairVerdict>(2, PairVerdict::containment_verified));
  for (auto const &s : report.evidence["comp_sections"])
    CHECK(s["aut_order"] == 60);
}

TEST_CASE("gjh reports unresolved, never pass, when the search budget runs out")
{
  DoubleA5 const d;
  Series const rc = series_of(d.G, {d.G, d.left, Group(10)}, SeriesKind::rc);
  Series const comp = series_of(d.G, {d.G, d.right, Group(10)}, SeriesKind::composition);
  Limits none;
  none.iso_search_budget = 0;
  auto const [sigma, report] = check_gjh(d.G, rc, comp, none);
  CHECK(report.verdict == Verdict::unresolved);
  CHECK(sigma.verdicts == std::vector<PairVerdict>(2, PairVerdict::containment_unresolved));

  Limits instant;
  instant.iso_search_timeout_ms = 0;
  CHECK(check_gjh(d.G, rc, comp, instant).second.verdict == Verdict::unresolved);
}

TEST_CASE("gjh fails with a payload when the first series is not really an rc-series")
{
  // S3 x Z3: the diagonal Z3 is not normal, so a series through it refines
  // no chief series; its factors carry smaller Aut_G than A3.
  Group const G = generated(6, {{{0, 1, 2}}, {{0, 1}}, {{3, 4, 5}}});
  Group const A3Z3 = generated(6, {{{0, 1, 2}}, {{3, 4, 5}}});
  Group const diag = generated(6, {{{0, 1, 2}, {3, 4, 5}}});
  Group const A3 = generated(6, {{{0, 1, 2}}});
  Series const fake{G, {G, A3Z3, diag, Group(6)}, SeriesKind::rc, {}};
  Series const comp = series_of(G, {G, A3Z3, A3, Group(6)}, SeriesKind::composition);
  auto const [sigma, report] = check_gjh(G, fake, comp);
  CHECK(report.verdict == Verdict::fail);
  CHECK(sigma.sigma.empty());
  CHECK(report.evidence.contains("compatibility"));
  CHECK_FALSE(report.note.empty());
}

TEST_CASE("gjh rejects malformed inputs")
{
  Group const S4 = named("symmetric", {4});
  Series const comp = composition_series(S4, 0);
  CHECK_THROWS_AS(check_gjh(S4, comp, comp), DomainError);
  Group const S3 = named("symmetric", {3});
  CHECK_THROWS_AS(check_gjh(S3, rc_series(S3), comp), DomainError);
}

TEST_CASE("check_carter_induced")
{
  Group const S4 = named("symmetric", {4});
  CarterWitness const d8 = CarterWitness::make(S4, sylow_subgroup(S4, 2));
  CHECK(check_carter_induced(S4, d8).verdict == Verdict::vacuous);
  Report const a5 = check_carter_induced(named("alternating", {5}), std::nullopt);
  CHECK(a5.verdict == Verdict::vacuous);
  CHECK(a5.note == "no Carter subgroup");
  CHECK_THROWS_AS(check_carter_induced(named("symmetric", {3}), d8), DomainError);
}

TEST_CASE("check_main_theorem")
{
  Report const f21 = check_main_theorem(named("frobenius", {7, 3}), std::nullopt);
  CHECK(f21.verdict == Verdict::pass);
  CHECK(f21.evidence["factors"] ==
        nlohmann::ordered_json::array({"CyclicPrime(3)", "CyclicPrime(7)"}));

  Report const f55 = check_main_theorem(named("frobenius", {11, 5}), std::nullopt);
  CHECK(f55.verdict == Verdict::pass);
  CHECK(f55.evidence["solvable"] == true);

  CHECK(check_main_theorem(named("alternating", {5}), std::nullopt).verdict == Verdict::vacuous);
  CHECK(check_main_theorem(named("symmetric", {4}), std::nullopt).verdict == Verdict::vacuous);

  Group const S4 = named("symmetric", {4});
  CHECK_THROWS_AS(check_main_theorem(S4, named("alternating", {4})), DomainError);

  Limits tight;
  tight.max_nilpotent_enumeration = 10;
  CHECK(check_main_theorem(S4, std::nullopt, tight).verdict == Verdict::capacity_exceeded);
}

TEST_CASE("check_sylow_theorems")
{
  Report const f21 = check_sylow_theorems(named("frobenius", {7, 3}), 3);
  CHECK(f21.verdict == Verdict::pass);
  CHECK(f21.evidence["self_normalizing"] == true);
  CHECK(f21.evidence["solvable"] == true);

  Report const z9 = check_sylow_theorems(named("cyclic", {9}), 3);
  CHECK(z9.verdict == Verdict::pass);
  CHECK(z9.evidence["N_equals_PC"] == true);
  CHECK(z9.evidence["quotient_solvable"] == true);

  Report const a5 = check_sylow_theorems(named("alternating", {5}), 5);
  CHECK(a5.verdict == Verdict::vacuous);

  CHECK_THROWS_AS(check_sylow_theorems(named("symmetric", {4}), 2), DomainError);
  CHECK_THROWS_AS(check_sylow_theorems(named("symmetric", {4}), 9), DomainError);
}

TEST_CASE("check_induced_identities, check_series_invariants, check_carter_classes")
{
  Group const S4 = named("symmetric", {4});
  Report const induced = check_induced_identities(S4, 40, 5);
  CHECK(induced.verdict == Verdict::pass);
  CHECK(induced.evidence["samples"] == 40);
  CHECK(check_series_invariants(S4, 1, 4).verdict == Verdict::pass);
  Report const carter = check_carter_classes(S4, std::nullopt);
  CHECK(carter.verdict == Verdict::pass);
  CHECK(carter.evidence["class_orders"] == nlohmann::ordered_json::array({8}));
  CHECK(check_carter_classes(S4, sylow_subgroup(S4, 2)).evidence["hint_matched"] == true);
}

TEST_CASE("report serialization has a fixed field order")
{
  Report r;
  r.group = "G";
  r.check = "c";
  r.verdict = Verdict::unresolved;
  r.evidence["z"] = 1;
  r.evidence["a"] = 2;
  CHECK(r.to_json().dump() ==
        R"({"group":"G","check":"c","verdict":"unresolved","note":"","evidence":{"z":1,"a":2}})");
  CHECK(catalog_to_json({}) == "[]\n");
  for (auto v : {Verdict::pass, Verdict::fail, Verdict::vacuous, Verdict::capacity_exceeded,
                 Verdict::unresolved, Verdict::error})
    CHECK_FALSE(to_string(v).empty());
}

TEST_CASE("corpus parsing")
{
  auto const entries = default_corpus();
  CHECK(entries.size() == 56);
  CHECK(entries.back().hint == std::optional<std::string>{"sylow:3"});
  CHECK(entries.front().checks == all_check_names());

  auto const parsed = parse_corpus(R"([{"family": "cyclic", "params": [4], "checks": ["sylow"]},
                                       {"file": "g.json"}])",
                                   "/base");
  REQUIRE(parsed.size() == 2);
  CHECK(parsed[0].checks == std::vector<std::string>{"sylow"});
  CHECK(parsed[1].file == std::filesystem::path("/base/g.json"));

  CHECK_THROWS_AS(parse_corpus("{", "."), DomainError);
  CHECK_THROWS_AS(parse_corpus(R"({"groups": []})", "."), DomainError);
  CHECK_THROWS_AS(parse_corpus(R"([{"checks": ["series"]}])", "."), DomainError);
  CHECK_THROWS_AS(parse_corpus(R"([{"family": "cyclic", "params": [4], "checks": ["nope"]}])",
                               "."),
                  DomainError);
  CHECK_THROWS_AS(parse_corpus(R"([{"family": "cyclic", "params": [4], "hint": "x"}])", "."),
                  DomainError);
  CHECK_THROWS_AS(parse_corpus(R"([{"family": "cyclic", "params": "4"}])", "."), DomainError);
}

TEST_CASE("run_corpus on an empty corpus")
{
  auto const dir = scratch_dir("empty");
  std::ofstream(dir / "corpus.json") << "[]";
  auto const reports = run_corpus(dir / "corpus.json", dir / "catalog.json");
  CHECK(reports.empty());
  CHECK_FALSE(any_failure(reports));
  std::ifstream in(dir / "catalog.json");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(text == "[]\n");
  CHECK_THROWS_AS(run_corpus(dir / "missing.json", dir / "out.json"), DomainError);
}

TEST_CASE("a malformed group file becomes one error entry")
{
  auto const dir = scratch_dir("malformed");
  std::ofstream(dir / "bad.json") << R"({"degree": 3, "generators": [[0, 0, 1]]})";
  write_group_file(dir / "s3.json", "S3", named("symmetric", {3}));
  std::ofstream(dir / "corpus.json")
      << R"([{"file": "bad.json"}, {"file": "s3.json", "checks": ["carter", "series"]}])";
  auto const reports = run_corpus(dir / "corpus.json", dir / "catalog.json");
  REQUIRE(reports.size() == 3);
  CHECK(reports[0].verdict == Verdict::error);
  CHECK(reports[0].group == "bad.json");
  CHECK(reports[1].group == "S3");
  CHECK(reports[1].check == "series");
  CHECK(reports[1].verdict == Verdict::pass);
  CHECK(reports[2].check == "carter");
  CHECK(reports[2].verdict == Verdict::pass);
}

TEST_CASE("catalogs do not depend on scheduling")
{
  std::vector<CorpusEntry> entries;
  for (auto const &e : default_corpus())
    if (e.spec && e.spec->expected_order() <= 60)
      entries.push_back(e);
  RunConfig serial;
  RunConfig parallel;
  parallel.jobs = 4;
  std::string const a = catalog_to_json(run_corpus(entries, serial));
  std::string const b = catalog_to_json(run_corpus(entries, parallel));
  CHECK(a == b);
  CHECK(a == catalog_to_json(run_corpus(entries, serial)));
}

TEST_CASE("checks that hit a cap report capacity_exceeded")
{
  CorpusEntry e;
  e.spec = parse_group_spec("symmetric", {5});
  e.checks = {"carter"};
  RunConfig config;
  config.limits.max_nilpotent_enumeration = 10;
  auto const reports = run_corpus({e}, config);
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].verdict == Verdict::capacity_exceeded);
  CHECK(reports[0].check == "carter");
}
