#include "carter/harness.hpp"

#include "carter/arith.hpp"
#include "carter/errors.hpp"
#include "carter/induced.hpp"
#include "carter/structure.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace carter {

using json = nlohmann::ordered_json;

std::string to_string(Verdict v)
{
  switch (v) {
  case Verdict::pass:
    return "pass";
  case Verdict::fail:
    return "fail";
  case Verdict::vacuous:
    return "vacuous";
  case Verdict::capacity_exceeded:
    return "capacity_exceeded";
  case Verdict::unresolved:
    return "unresolved";
  case Verdict::error:
    return "error";
  }
  return "?";
}

json Report::to_json() const
{
  json j;
  j["group"] = group;
  j["check"] = check;
  j["verdict"] = to_string(verdict);
  j["note"] = note;
  j["evidence"] = evidence;
  return j;
}

json series_to_json(Series const &s)
{
  json j;
  j["kind"] = to_string(s.kind);
  j["term_orders"] = s.term_orders();
  j["factor_orders"] = s.factor_orders();
  if (s.kind == SeriesKind::rc) {
    std::vector<std::uint64_t> witness;
    for (auto const &t : s.chief_witness)
      witness.push_back(t.order());
    j["chief_witness_orders"] = witness;
  }
  return j;
}

namespace
{

Report make_report(std::string check)
{
  Report r;
  r.check = std::move(check);
  return r;
}

void fail(Report &r, std::string note)
{
  r.verdict = Verdict::fail;
  r.note = std::move(note);
}

std::vector<FactorId> factor_ids(Series const &s, Limits const &limits)
{
  std::vector<FactorId> ids;
  for (auto const &sec : sections_of(s, limits))
    ids.push_back(identify_factor(sec, limits));
  return ids;
}

json ids_to_json(std::vector<FactorId> const &ids)
{
  json arr = json::array();
  for (auto const &id : ids)
    arr.push_back(id.to_string());
  return arr;
}

std::vector<std::uint64_t> sorted(std::vector<std::uint64_t> v)
{
  std::sort(v.begin(), v.end());
  return v;
}

bool contains_all(std::vector<Group> const &haystack, std::vector<Group> const &needles)
{
  return std::all_of(needles.begin(), needles.end(), [&](Group const &n) {
    return std::any_of(haystack.begin(), haystack.end(),
                       [&](Group const &h) { return h.same_elements(n); });
  });
}

} // namespace

Report check_carter_induced(Group const &G, std::optional<CarterWitness> const &K,
                            Limits const &limits)
{
  Report r = make_report("carter_induced");
  if (!K) {
    r.verdict = Verdict::vacuous;
    r.note = "no Carter subgroup";
    return r;
  }
  if (!K->ambient.same_elements(G))
    throw DomainError("check_carter_induced: witness belongs to another group");
  r.evidence["K_order"] = K->K.order();
  Series const rc = rc_series(G, limits);
  std::vector<Section> const secs = sections_of(rc, limits);
  std::map<FactorId, std::vector<std::size_t>> by_type;
  for (std::size_t i = 0; i < secs.size(); ++i) {
    FactorId id = identify_factor(secs[i], limits);
    if (!id.is_abelian())
      by_type[id].push_back(i);
  }
  r.evidence["rc"] = series_to_json(rc);
  if (by_type.empty()) {
    r.verdict = Verdict::vacuous;
    r.note = "all composition factors are abelian";
    return r;
  }
  json types = json::array();
  for (auto const &[id, indices] : by_type) {
    json entry;
    entry["factor"] = id.to_string();
    json tried = json::array();
    std::optional<std::size_t> found;
    for (std::size_t i : indices) {
      Group const autG = induced_aut(G, secs[i], limits).image;
      Group const autK = induced_aut(K->K, secs[i], limits).image;
      bool const ok = is_carter(autG, autK, coset_limits(limits));
      tried.push_back({{"section", i},
                       {"aut_G_order", autG.order()},
                       {"aut_K_order", autK.order()},
                       {"carter", ok}});
      if (ok) {
        found = i;
        break;
      }
    }
    entry["sections"] = std::move(tried);
    types.push_back(std::move(entry));
    if (!found) {
      r.evidence["types"] = std::move(types);
      fail(r, "no section of type " + id.to_string() + " has Aut_K Carter in Aut_G");
      return r;
    }
  }
  r.evidence["types"] = std::move(types);
  return r;
}

Report check_main_theorem(Group const &G, std::optional<Group> const &K_hint,
                          Limits const &limits)
{
  Report r = make_report("main_theorem");
  std::vector<CarterWitness> carters;
  if (K_hint) {
    carters.push_back(CarterWitness::make(G, *K_hint, limits));
    r.evidence["K_source"] = "hint";
  } else {
    try {
      carters = carter_subgroups(G, limits);
    } catch (CapacityError const &e) {
      r.verdict = Verdict::capacity_exceeded;
      r.note = e.what();
      return r;
    }
    r.evidence["K_source"] = "enumeration";
  }
  std::vector<CarterWitness> odd;
  for (auto const &c : carters)
    if (c.odd_order)
      odd.push_back(c);
  r.evidence["carter_orders"] = [&] {
    std::vector<std::uint64_t> v;
    for (auto const &c : carters)
      v.push_back(c.K.order());
    return v;
  }();
  if (odd.empty()) {
    r.verdict = Verdict::vacuous;
    r.note = "no Carter subgroup of odd order";
    return r;
  }
  Series const rc = rc_series(G, limits);
  std::vector<FactorId> const ids = factor_ids(rc, limits);
  bool const solvable = is_solvable(G);
  r.evidence["factors"] = ids_to_json(ids);
  r.evidence["solvable"] = solvable;

  bool has_l2 = false;
  for (auto const &id : ids) {
    if (id.kind == FactorId::Kind::other_nonabelian_simple) {
      fail(r, "composition factor " + id.to_string() + " is neither abelian nor L2(3^(2n+1))");
      r.evidence["counterexample_factor"] = id.to_string();
      return r;
    }
    has_l2 = has_l2 || id.kind == FactorId::Kind::l2_3odd;
  }
  for (auto const &c : odd) {
    if (has_l2 && !c.three_divides) {
      fail(r, "an L2(3^(2n+1)) factor is present but 3 does not divide |K|");
      r.evidence["counterexample_K_order"] = c.K.order();
      return r;
    }
    if (!c.three_divides && !solvable) {
      fail(r, "3 does not divide |K| yet G is not solvable");
      r.evidence["counterexample_K_order"] = c.K.order();
      return r;
    }
  }
  return r;
}

Report check_sylow_theorems(Group const &G, std::uint64_t p, Limits const &limits)
{
  if (p < 3 || !is_prime(p))
    throw DomainError("check_sylow_theorems: p must be an odd prime");
  Report r = make_report("sylow");
  r.evidence["p"] = p;
  Group const P = sylow_subgroup(G, p, limits);
  Group const N = normalizer(G, P, limits);
  Group const C = centralizer(G, P, limits);
  Group const PC = intersection(P, C, limits);
  bool const self_normalizing = N.order() == P.order();
  bool const n_equals_pc = P.is_subgroup_of(N) && C.is_subgroup_of(N) &&
                           N.order() * PC.order() == P.order() * C.order();
  bool const solvable = is_solvable(G);
  r.evidence["P_order"] = P.order();
  r.evidence["N_order"] = N.order();
  r.evidence["C_order"] = C.order();
  r.evidence["self_normalizing"] = self_normalizing;
  r.evidence["N_equals_PC"] = n_equals_pc;
  r.evidence["solvable"] = solvable;

  if (p == 3) {
    std::vector<FactorId> const ids = factor_ids(composition_series(G, 0, limits), limits);
    for (auto const &id : ids)
      if (id.kind == FactorId::Kind::l2_3odd && is_power_of(2 * id.parameter + 1, 3)) {
        r.verdict = Verdict::vacuous;
        r.note = "exclusion applies: composition factor " + id.to_string() +
                 " is L2(3^f) with f a power of 3";
        r.evidence["excluded_factor"] = id.to_string();
        return r;
      }
  }
  if (!self_normalizing && !n_equals_pc) {
    r.verdict = Verdict::vacuous;
    r.note = "neither hypothesis holds";
    return r;
  }
  if (self_normalizing && !solvable) {
    fail(r, "P is self-normalizing but G is not solvable");
    return r;
  }
  if (n_equals_pc) {
    Group const O = o_pprime(G, p, limits);
    bool const quotient_solvable = is_solvable(quotient_action(G, O, limits).group);
    r.evidence["O_pprime_order"] = O.order();
    r.evidence["quotient_solvable"] = quotient_solvable;
    if (!quotient_solvable) {
      fail(r, "N_G(P) = P C_G(P) but G/O_p'(G) is not solvable");
      return r;
    }
  }
  return r;
}

Report check_induced_identities(Group const &G, std::size_t samples, std::uint64_t seed,
                                Limits const &limits)
{
  Report r = make_report("induced");
  std::mt19937_64 rng(seed);

  // Sections drawn from pairs of chief terms and adjacent composition terms.
  std::vector<Section> sections;
  auto add = [&](Group const &A, Group const &B) {
    if (A.order() / B.order() > limits.max_cosets)
      return;
    for (auto const &s : sections)
      if (s.top().same_elements(A) && s.bottom().same_elements(B))
        return;
    sections.push_back(Section::make(G, A, B, limits));
  };
  Series const chief = chief_series(G, limits);
  for (std::size_t i = 0; i < chief.terms.size(); ++i)
    for (std::size_t j = i + 1; j < chief.terms.size(); ++j)
      add(chief.terms[i], chief.terms[j]);
  Series const comp = composition_series(G, seed, limits);
  for (std::size_t i = 1; i < comp.terms.size(); ++i)
    add(comp.terms[i - 1], comp.terms[i]);
  r.evidence["sections"] = sections.size();
  if (sections.empty()) {
    r.verdict = Verdict::vacuous;
    r.note = "no section within the coset cap";
    return r;
  }

  std::vector<std::optional<InducedAutGroup>> g_side(sections.size());
  std::size_t checked = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    Permutation const x = G.random_element(rng);
    Permutation const y = G.random_element(rng);
    Group const H = Group::from_generators(G.degree(), {x, y}, limits);
    std::size_t const k = uniform_index(rng, sections.size());
    Section const &sec = sections[k];
    if (!g_side[k])
      g_side[k] = induced_aut(G, sec, limits);
    InducedAutGroup const &autG = *g_side[k];
    InducedAutGroup const autH = induced_aut(H, sec, limits);
    ++checked;

    auto counterexample = [&](std::string note) {
      fail(r, std::move(note));
      r.evidence["H_generators"] = {to_string(x), to_string(y)};
      r.evidence["section_orders"] = {sec.top().order(), sec.bottom().order()};
      r.evidence["N_H_order"] = autH.normalizer_part.order();
      r.evidence["C_H_order"] = autH.kernel.order();
      r.evidence["aut_H_order"] = autH.image.order();
    };
    if (!autH.kernel.same_elements(intersection(autG.kernel, H, limits))) {
      counterexample("C_H(A/B) differs from C_G(A/B) ∩ H");
      return r;
    }
    for (auto const &g : autH.image.generators())
      if (!autG.image.contains(g)) {
        counterexample("Aut_H(A/B) is not inside Aut_G(A/B)");
        return r;
      }
    if (autH.image.order() * autH.kernel.order() != autH.normalizer_part.order()) {
      counterexample("|Aut_H| |C_H| differs from |N_H|");
      return r;
    }
  }
  r.evidence["samples"] = checked;
  return r;
}

Report check_series_invariants(Group const &G, std::uint64_t seed, std::size_t seeds,
                               Limits const &limits)
{
  Report r = make_report("series");
  Series const chief = chief_series(G, limits);
  Series const rc = rc_series(G, limits);
  std::vector<Series> comps;
  for (std::size_t s = 0; s < seeds; ++s)
    comps.push_back(composition_series(G, seed + s, limits));

  json listed = json::array();
  listed.push_back(series_to_json(chief));
  listed.push_back(series_to_json(rc));
  for (auto const &c : comps)
    listed.push_back(series_to_json(c));
  r.evidence["series"] = std::move(listed);

  auto product = [](std::vector<std::uint64_t> const &v) {
    std::uint64_t p = 1;
    for (auto x : v)
      p *= x;
    return p;
  };
  for (Series const *s : {&chief, &rc}) {
    if (product(s->factor_orders()) != G.order()) {
      fail(r, "factor orders of the " + to_string(s->kind) + " series do not multiply to |G|");
      return r;
    }
  }
  for (std::size_t i = 1; i < chief.terms.size(); ++i)
    if (!chief.terms[i].is_subgroup_of(chief.terms[i - 1]) ||
        !is_normalized_by(chief.terms[i], G)) {
      fail(r, "chief term " + std::to_string(i) + " is not normal in G");
      return r;
    }
  if (!contains_all(rc.terms, rc.chief_witness) ||
      rc.chief_witness.size() != chief.terms.size()) {
    fail(r, "rc-series does not contain its chief witness");
    return r;
  }
  // Each chief factor is a minimal normal subgroup of the quotient, and is
  // covered by its own minimal normal subgroups, all of one order.
  for (std::size_t i = 1; i < chief.terms.size(); ++i) {
    QuotientAction const q = quotient_action(G, chief.terms[i], limits);
    std::vector<Permutation> images;
    for (auto const &g : chief.terms[i - 1].generators())
      images.push_back(q.map(g));
    Group const M = Group::from_generators(q.group.degree(), images, coset_limits(limits));
    auto const minimal = minimal_normal_subgroups(q.group, coset_limits(limits));
    if (!contains_all(minimal, {M})) {
      fail(r, "chief factor " + std::to_string(i) + " is not minimal normal in the quotient");
      return r;
    }
    auto const parts = minimal_normal_subgroups(M, coset_limits(limits));
    Group cover(M.degree());
    for (auto const &part : parts) {
      if (part.order() != parts.front().order()) {
        fail(r, "chief factor " + std::to_string(i) +
                    " has minimal normal subgroups of different orders");
        return r;
      }
      for (auto const &g : part.generators())
        cover = cover.with_generator(g);
    }
    if (cover.order() != M.order()) {
      fail(r, "minimal normal subgroups of chief factor " + std::to_string(i) +
                  " do not cover it");
      return r;
    }
  }
  auto const reference = sorted(rc.factor_orders());
  for (Series const *s : {&rc}) {
    for (std::size_t i = 1; i < s->terms.size(); ++i)
      if (!is_normalized_by(s->terms[i], s->terms[i - 1])) {
        fail(r, "rc term " + std::to_string(i) + " is not normal in its predecessor");
        return r;
      }
  }
  for (std::size_t k = 0; k < comps.size(); ++k) {
    Series const &c = comps[k];
    if (product(c.factor_orders()) != G.order()) {
      fail(r, "composition factor orders do not multiply to |G|");
      r.evidence["seed"] = seed + k;
      return r;
    }
    for (std::size_t i = 1; i < c.terms.size(); ++i)
      if (!c.terms[i].is_subgroup_of(c.terms[i - 1]) ||
          !is_normalized_by(c.terms[i], c.terms[i - 1])) {
        fail(r, "composition term " + std::to_string(i) + " is not normal in its predecessor");
        r.evidence["seed"] = seed + k;
        return r;
      }
    try {
      for (auto const &sec : sections_of(c, limits))
        identify_factor(sec, limits);
    } catch (DomainError const &e) {
      fail(r, std::string("composition factor is not simple: ") + e.what());
      r.evidence["seed"] = seed + k;
      return r;
    }
    if (sorted(c.factor_orders()) != reference) {
      fail(r, "factor-order multisets differ between series");
      r.evidence["seed"] = seed + k;
      return r;
    }
  }
  return r;
}

Report check_carter_classes(Group const &G, std::optional<Group> const &K_hint,
                            Limits const &limits)
{
  Report r = make_report("carter");
  std::vector<CarterWitness> found;
  try {
    found = carter_subgroups(G, limits);
  } catch (CapacityError const &e) {
    if (!K_hint) {
      r.verdict = Verdict::capacity_exceeded;
      r.note = e.what();
      return r;
    }
    CarterWitness const w = CarterWitness::make(G, *K_hint, limits);
    r.note = "enumeration capped; hint verified as a Carter subgroup";
    r.evidence["hint_order"] = w.K.order();
    return r;
  }
  std::vector<std::uint64_t> orders;
  for (auto const &w : found) {
    orders.push_back(w.K.order());
    if (!is_carter(G, w.K, limits)) {
      fail(r, "enumerated witness is not a Carter subgroup");
      r.evidence["witness_generators"] = [&] {
        std::vector<std::string> v;
        for (auto const &g : w.K.generators())
          v.push_back(to_string(g));
        return v;
      }();
      return r;
    }
  }
  bool const solvable = is_solvable(G);
  r.evidence["class_orders"] = orders;
  r.evidence["solvable"] = solvable;
  if (solvable && found.size() != 1) {
    fail(r, "a solvable group must have exactly one class of Carter subgroups");
    return r;
  }
  if (K_hint) {
    CarterWitness const w = CarterWitness::make(G, *K_hint, limits);
    bool const matched = std::any_of(found.begin(), found.end(), [&](CarterWitness const &c) {
      return conjugating_element(G, w.K, c.K, limits).has_value();
    });
    r.evidence["hint_matched"] = matched;
    if (!matched) {
      fail(r, "hinted Carter subgroup is conjugate to no enumerated class");
      return r;
    }
  }
  return r;
}

} // namespace carter
