#include "carter/harness.hpp"

#include "carter/errors.hpp"
#include "carter/induced.hpp"
#include "carter/structure.hpp"

#include <algorithm>
#include <chrono>
#include <set>

namespace carter {

namespace
{

/// A section realized as a group of its own, plus Aut_G of the section.
struct SectionView {
  Section sec;
  QuotientAction quotient;
  Group aut;
  FactorId id;

  /// The element of the quotient group standing for coset label k.
  Permutation element_of_label(std::size_t k) const
  {
    Permutation const &rep = sec.cosets().representative(k);
    if (!quotient.cosets)
      return rep;
    return quotient.cosets->right_action(rep);
  }

  std::uint32_t label_of(Permutation const &y) const
  {
    if (!quotient.cosets)
      return sec.cosets().index_of(y);
    return y[0];
  }
};

SectionView make_view(Group const &G, Section const &sec, Limits const &limits)
{
  FactorId id = identify_factor(sec, limits);
  QuotientAction q = quotient_action(sec.top(), sec.bottom(), limits);
  Group aut = induced_aut(G, sec, limits).image;
  return SectionView{sec, std::move(q), std::move(aut), id};
}

enum class Edge { none, unresolved, verified };

std::set<std::uint64_t> order_set(Group const &g, Limits const &limits)
{
  auto v = element_orders(g, limits);
  return {v.begin(), v.end()};
}

/// A small generating tuple of Q: its first nontrivial generator plus the
/// least-rank element completing it to a generating pair, when one exists.
std::vector<Permutation> generating_tuple(Group const &Q, Limits const &limits)
{
  std::vector<Permutation> gens;
  for (auto const &g : Q.generators())
    if (!g.is_identity()) {
      gens.push_back(g);
      break;
    }
  if (gens.empty())
    return gens;
  Group const cyclic = Group(Q.degree()).with_generator(gens.front());
  if (cyclic.order() == Q.order())
    return gens;
  std::optional<Permutation> partner;
  Q.for_each_element(limits, [&](Permutation const &y) {
    if (cyclic.with_generator(y).order() == Q.order()) {
      partner = y;
      return false;
    }
    return true;
  });
  if (partner) {
    gens.push_back(*partner);
    return gens;
  }
  return Q.generators();
}

struct SearchState {
  std::uint64_t tried = 0;
  std::uint64_t budget;
  std::chrono::steady_clock::time_point deadline;
  bool exhausted = false;

  bool out_of_budget()
  {
    if (tried >= budget || std::chrono::steady_clock::now() > deadline)
      exhausted = true;
    return exhausted;
  }
};

/// Given an isomorphism psi: Q_T -> Q_S, transport Aut_G(T) onto S's coset
/// labels and test containment in Aut_G(S).
bool transported_containment(SectionView const &T, SectionView const &S, Epimorphism const &psi)
{
  std::size_t const n = T.sec.order();
  std::vector<Point> pi(n);
  for (std::size_t k = 0; k < n; ++k)
    pi[k] = S.label_of(psi(T.element_of_label(k)));
  for (auto const &alpha : T.aut.generators()) {
    std::vector<Point> beta(n);
    for (std::size_t k = 0; k < n; ++k)
      beta[pi[k]] = pi[alpha[static_cast<Point>(k)]];
    if (!S.aut.contains(Permutation::from_images_unchecked(std::move(beta))))
      return false;
  }
  return true;
}

std::optional<Epimorphism> try_isomorphism(SectionView const &T, SectionView const &S,
                                           std::vector<Permutation> const &gens,
                                           std::vector<Permutation> const &images,
                                           Limits const &limits)
{
  Group const &QT = T.quotient.group;
  Group sub = Group::from_generators(QT.degree(), gens, coset_limits(limits));
  try {
    Epimorphism psi(sub, S.quotient.group, images, coset_limits(limits));
    return psi;
  } catch (DomainError const &) {
    return std::nullopt;
  }
}

/// Bounded search for an isomorphism T -> S realizing the containment.
Edge nonabelian_edge(SectionView const &T, SectionView const &S, Limits const &limits)
{
  Group const &QT = T.quotient.group;
  Group const &QS = S.quotient.group;
  if (QT.order() != QS.order())
    return Edge::none;
  std::vector<Permutation> const gens = generating_tuple(QT, limits);
  SearchState state{0, limits.iso_search_budget,
                    std::chrono::steady_clock::now() +
                        std::chrono::milliseconds(limits.iso_search_timeout_ms)};

  // The natural map first when both sections are the same pair of subgroups.
  if (T.sec.top().same_elements(S.sec.top()) && T.sec.bottom().same_elements(S.sec.bottom())) {
    std::vector<Permutation> images;
    for (auto const &g : gens)
      images.push_back(S.quotient.map(T.quotient.lift(g)));
    ++state.tried;
    if (auto psi = try_isomorphism(T, S, gens, images, limits))
      if (transported_containment(T, S, *psi))
        return Edge::verified;
  }

  // Candidate images share the element order of their generator.
  std::vector<std::vector<Permutation>> candidates(gens.size());
  QS.for_each_element(limits, [&](Permutation const &y) {
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (y.order() == gens[i].order())
        candidates[i].push_back(y);
    return true;
  });
  std::uint64_t const product_order =
      gens.size() >= 2 ? (gens[0] * gens[1]).order() : 0;

  std::vector<std::size_t> choice(gens.size(), 0);
  std::vector<Permutation> images(gens.size());
  // Odometer over candidate tuples.
  while (true) {
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (candidates[i].empty())
        return Edge::none;
      images[i] = candidates[i][choice[i]];
    }
    if (state.out_of_budget())
      return Edge::unresolved;
    ++state.tried;
    bool plausible = gens.size() < 2 || (images[0] * images[1]).order() == product_order;
    if (plausible)
      if (auto psi = try_isomorphism(T, S, gens, images, limits))
        if (transported_containment(T, S, *psi))
          return Edge::verified;
    std::size_t i = gens.size();
    while (i > 0) {
      --i;
      if (++choice[i] < candidates[i].size())
        break;
      choice[i] = 0;
      if (i == 0)
        return Edge::none;
    }
  }
}

Edge edge_between(SectionView const &T, SectionView const &S, bool equal_orders,
                  Limits const &limits)
{
  if (T.id != S.id)
    return Edge::none;
  if (equal_orders) {
    if (T.aut.order() != S.aut.order() ||
        element_orders(T.aut, limits) != element_orders(S.aut, limits))
      return Edge::none;
  }
  if (T.id.is_abelian()) {
    // Both are subgroups of the cyclic group Aut(Z_p), where a subgroup is
    // determined by its order.
    if (S.aut.order() % T.aut.order() != 0)
      return Edge::none;
    auto const t = order_set(T.aut, limits);
    auto const s = order_set(S.aut, limits);
    return std::includes(s.begin(), s.end(), t.begin(), t.end()) ? Edge::verified : Edge::none;
  }
  return nonabelian_edge(T, S, limits);
}

/// Kuhn's augmenting-path matching over edges at least `floor`.
bool augment(std::size_t i, std::vector<std::vector<Edge>> const &edges, Edge floor,
             std::vector<bool> &visited, std::vector<std::ptrdiff_t> &match_of_s)
{
  for (std::size_t j = 0; j < edges[i].size(); ++j) {
    if (edges[i][j] < floor || visited[j])
      continue;
    visited[j] = true;
    if (match_of_s[j] < 0 ||
        augment(static_cast<std::size_t>(match_of_s[j]), edges, floor, visited, match_of_s)) {
      match_of_s[j] = static_cast<std::ptrdiff_t>(i);
      return true;
    }
  }
  return false;
}

std::optional<std::vector<std::size_t>> perfect_matching(std::vector<std::vector<Edge>> const &edges,
                                                         Edge floor)
{
  std::size_t const n = edges.size();
  std::vector<std::ptrdiff_t> match_of_s(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<bool> visited(n, false);
    if (!augment(i, edges, floor, visited, match_of_s))
      return std::nullopt;
  }
  std::vector<std::size_t> sigma(n);
  for (std::size_t j = 0; j < n; ++j)
    sigma[static_cast<std::size_t>(match_of_s[j])] = j;
  return sigma;
}

std::string edge_name(Edge e)
{
  switch (e) {
  case Edge::verified:
    return "containment_verified";
  case Edge::unresolved:
    return "containment_unresolved";
  case Edge::none:
    return "none";
  }
  return "?";
}

} // namespace

std::pair<SigmaWitness, Report> check_gjh(Group const &G, Series const &rc, Series const &comp,
                                          Limits const &limits)
{
  if (rc.kind != SeriesKind::rc)
    throw DomainError("check_gjh: first series must be an rc-series");
  if (!rc.ambient.same_elements(G) || !comp.ambient.same_elements(G))
    throw DomainError("check_gjh: series of a different ambient group");
  bool const both_rc = comp.kind == SeriesKind::rc;

  Report report;
  report.check = both_rc ? "gjh_rc" : "gjh";
  auto &ev = report.evidence;
  ev["rc_orders"] = rc.term_orders();
  ev["comp_orders"] = comp.term_orders();
  ev["comp_kind"] = to_string(comp.kind);

  std::vector<SectionView> S, T;
  for (auto const &sec : sections_of(rc, limits))
    S.push_back(make_view(G, sec, limits));
  for (auto const &sec : sections_of(comp, limits))
    T.push_back(make_view(G, sec, limits));

  auto describe_views = [](std::vector<SectionView> const &views) {
    auto arr = nlohmann::ordered_json::array();
    for (auto const &v : views)
      arr.push_back({{"factor", v.id.to_string()}, {"aut_order", v.aut.order()}});
    return arr;
  };
  ev["rc_sections"] = describe_views(S);
  ev["comp_sections"] = describe_views(T);

  SigmaWitness witness;
  if (S.size() != T.size()) {
    report.verdict = Verdict::fail;
    report.note = "series lengths differ";
    return {witness, report};
  }

  std::size_t const n = S.size();
  std::vector<std::vector<Edge>> edges(n, std::vector<Edge>(n, Edge::none));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      edges[i][j] = edge_between(T[i], S[j], both_rc, limits);

  auto sigma = perfect_matching(edges, Edge::verified);
  if (sigma) {
    report.verdict = Verdict::pass;
  } else if ((sigma = perfect_matching(edges, Edge::unresolved))) {
    report.verdict = Verdict::unresolved;
    report.note = "a matching exists only through unresolved isomorphism searches";
  } else {
    report.verdict = Verdict::fail;
    report.note = "no permutation matches every factor with a containing Aut_G";
    auto matrix = nlohmann::ordered_json::array();
    for (auto const &row : edges) {
      auto r = nlohmann::ordered_json::array();
      for (auto e : row)
        r.push_back(edge_name(e));
      matrix.push_back(std::move(r));
    }
    ev["compatibility"] = std::move(matrix);
    return {witness, report};
  }
  witness.sigma = *sigma;
  auto verdicts = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < n; ++i) {
    Edge e = edges[i][witness.sigma[i]];
    witness.verdicts.push_back(e == Edge::verified ? PairVerdict::containment_verified
                                                   : PairVerdict::containment_unresolved);
    verdicts.push_back(edge_name(e));
  }
  ev["sigma"] = witness.sigma;
  ev["pairs"] = std::move(verdicts);
  return {witness, report};
}

} // namespace carter
