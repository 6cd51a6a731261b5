#include "carter/series.hpp"

#include "carter/errors.hpp"
#include "carter/group.hpp"
#include "carter/structure.hpp"

#include <algorithm>

namespace carter {

CosetSpace::CosetSpace(Group A, Group B, Limits const &limits)
    : top_(std::move(A)), bottom_(std::move(B))
{
  if (bottom_.degree() != top_.degree() || !bottom_.is_subgroup_of(top_))
    throw DomainError("coset space: B is not inside A");
  std::uint64_t const index = top_.order() / bottom_.order();
  if (index > limits.max_cosets)
    throw CapacityError("index " + std::to_string(index) + " exceeds coset cap " +
                        std::to_string(limits.max_cosets));
  reps_.reserve(index);
  reps_.push_back(canonical(Permutation::identity(top_.degree())));
  index_.emplace(reps_.back(), 0);
  for (std::size_t k = 0; k < reps_.size(); ++k)
    for (auto const &a : top_.generators()) {
      Permutation c = canonical(reps_[k] * a);
      if (index_.contains(c))
        continue;
      index_.emplace(c, static_cast<std::uint32_t>(reps_.size()));
      reps_.push_back(std::move(c));
    }
  if (reps_.size() != index)
    throw InternalError("coset enumeration did not reach the index");
}

Permutation CosetSpace::canonical(Permutation const &a) const
{
  // Walk B's chain choosing, level by level, the coset element whose image of
  // the base point is least; earlier base images are preserved.
  Permutation c = a;
  for (auto const &level : bottom_.chain()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < level.orbit.size(); ++k)
      if (c[level.orbit[k]] < c[level.orbit[best]])
        best = k;
    if (best != 0)
      c = level.transversal[best] * c;
  }
  return c;
}

std::uint32_t CosetSpace::index_of(Permutation const &a) const
{
  auto it = index_.find(canonical(a));
  if (it == index_.end())
    throw DomainError("element does not lie in the top group of the coset space");
  return it->second;
}

Permutation CosetSpace::right_action(Permutation const &x) const
{
  std::vector<Point> images(reps_.size());
  for (std::size_t k = 0; k < reps_.size(); ++k)
    images[k] = index_of(reps_[k] * x);
  return Permutation::from_images_unchecked(std::move(images));
}

Permutation CosetSpace::conjugation_action(Permutation const &x) const
{
  std::vector<Point> images(reps_.size());
  for (std::size_t k = 0; k < reps_.size(); ++k)
    images[k] = index_of(conjugate(reps_[k], x));
  return Permutation::from_images_unchecked(std::move(images));
}

Permutation QuotientAction::lift(Permutation const &q) const
{
  if (!cosets)
    return q;
  return cosets->representative(q[0]);
}

Group QuotientAction::preimage(Group const &Q) const
{
  if (!cosets)
    return Q;
  std::vector<Permutation> lifts;
  for (auto const &q : Q.generators())
    lifts.push_back(lift(q));
  return cosets->bottom().with_generators(lifts);
}

Limits coset_limits(Limits limits)
{
  limits.max_degree = std::max(limits.max_degree, limits.max_cosets);
  return limits;
}

QuotientAction quotient_action(Group const &G, Group const &N, Limits const &limits)
{
  if (N.degree() != G.degree() || !N.is_subgroup_of(G) || !is_normalized_by(N, G))
    throw DomainError("quotient_action: N is not a normal subgroup of G");
  if (N.is_trivial())
    return QuotientAction{G, Epimorphism::identity(G), nullptr};
  auto cosets = std::make_shared<CosetSpace const>(G, N, limits);
  std::vector<Permutation> images;
  for (auto const &g : G.generators())
    images.push_back(cosets->right_action(g));
  Limits const wide = coset_limits(limits);
  Group Q = Group::from_generators(cosets->size(), images, wide, cosets->size());
  Epimorphism map(G, Q, std::move(images), wide);
  return QuotientAction{std::move(Q), std::move(map), std::move(cosets)};
}

std::vector<Group> minimal_normal_subgroups(Group const &G, Limits const &limits)
{
  std::vector<Group> all = normal_subgroups(G, limits);
  std::vector<Group> out;
  for (auto const &N : all) {
    if (N.is_trivial())
      continue;
    bool minimal = std::none_of(out.begin(), out.end(),
                                [&](Group const &M) { return M.is_subgroup_of(N); });
    // `all` is sorted by order, so any smaller nontrivial normal subgroup
    // inside N is already in `out` or contains one that is.
    if (minimal)
      out.push_back(N);
  }
  return out;
}

std::vector<Group> maximal_normal_subgroups(Group const &G, Limits const &limits)
{
  std::vector<Group> all = normal_subgroups(G, limits);
  std::vector<Group> out;
  for (auto it = all.rbegin(); it != all.rend(); ++it) {
    if (it->order() == G.order())
      continue;
    bool maximal = std::none_of(out.begin(), out.end(),
                                [&](Group const &M) { return it->is_subgroup_of(M); });
    if (maximal)
      out.push_back(*it);
  }
  // Report in the same (order, rank key) order as normal_subgroups.
  std::reverse(out.begin(), out.end());
  return out;
}

std::string to_string(SeriesKind kind)
{
  switch (kind) {
  case SeriesKind::chief:
    return "chief";
  case SeriesKind::composition:
    return "composition";
  case SeriesKind::rc:
    return "rc";
  }
  return "?";
}

std::vector<std::uint64_t> Series::term_orders() const
{
  std::vector<std::uint64_t> out;
  for (auto const &t : terms)
    out.push_back(t.order());
  return out;
}

std::vector<std::uint64_t> Series::factor_orders() const
{
  std::vector<std::uint64_t> out;
  for (std::size_t i = 1; i < terms.size(); ++i)
    out.push_back(terms[i - 1].order() / terms[i].order());
  return out;
}

Section Section::make(Group ambient, Group A, Group B, Limits const &limits)
{
  if (A.degree() != ambient.degree() || !A.is_subgroup_of(ambient))
    throw DomainError("section: A is not inside the ambient group");
  if (B.degree() != A.degree() || !B.is_subgroup_of(A) || !is_normalized_by(B, A))
    throw DomainError("section: B is not normal in A");
  Section s;
  s.ambient_ = std::move(ambient);
  s.cosets_ = std::make_shared<CosetSpace const>(std::move(A), std::move(B), limits);
  return s;
}

Series chief_series(Group const &G, Limits const &limits)
{
  // Built bottom-up: pull back a minimal normal subgroup of G/N each step.
  std::vector<Group> ascending{Group(G.degree())};
  while (ascending.back().order() != G.order()) {
    QuotientAction q = quotient_action(G, ascending.back(), limits);
    std::vector<Group> mins = minimal_normal_subgroups(q.group, limits);
    // Sorted by order, then by element ranks.
    ascending.push_back(q.preimage(mins.front()));
  }
  std::reverse(ascending.begin(), ascending.end());
  return Series{G, std::move(ascending), SeriesKind::chief, {}};
}

Series composition_series(Group const &G, std::uint64_t choice_seed, Limits const &limits)
{
  std::mt19937_64 rng(choice_seed);
  std::vector<Group> terms{G};
  while (!terms.back().is_trivial()) {
    std::vector<Group> candidates = maximal_normal_subgroups(terms.back(), limits);
    std::size_t pick = uniform_index(rng, candidates.size());
    terms.push_back(candidates[pick]);
  }
  return Series{G, std::move(terms), SeriesKind::composition, {}};
}

Series rc_series(Group const &G, Limits const &limits)
{
  Series chief = chief_series(G, limits);
  std::vector<Group> terms{G};
  for (std::size_t i = 1; i < chief.terms.size(); ++i) {
    Group const &A = chief.terms[i - 1];
    Group const &B = chief.terms[i];
    // Refine A/B inside its own quotient: join minimal normal subgroups of
    // the factor one at a time, each one adding a single simple factor.
    QuotientAction q = quotient_action(A, B, limits);
    std::vector<Group> mins = minimal_normal_subgroups(q.group, limits);
    std::vector<Group> inner;
    Group M(q.group.degree());
    while (M.order() != q.group.order()) {
      auto next = std::find_if(mins.begin(), mins.end(),
                               [&](Group const &X) { return !X.is_subgroup_of(M); });
      if (next == mins.end())
        throw InternalError("chief factor is not a product of minimal normal subgroups");
      M = M.with_generators(next->generators());
      inner.push_back(M);
    }
    inner.pop_back(); // the last join is the whole factor, i.e. A itself
    for (auto it = inner.rbegin(); it != inner.rend(); ++it)
      terms.push_back(q.preimage(*it));
    terms.push_back(B);
  }
  return Series{G, std::move(terms), SeriesKind::rc, std::move(chief.terms)};
}

std::vector<Section> sections_of(Series const &s, Limits const &limits)
{
  std::vector<Section> out;
  for (std::size_t i = 1; i < s.terms.size(); ++i)
    out.push_back(Section::make(s.ambient, s.terms[i - 1], s.terms[i], limits));
  return out;
}

std::optional<std::vector<Group>> refined_chief_series(Series const &s, Limits const &limits)
{
  Group const &G = s.ambient;
  std::vector<Group> normal_terms;
  for (auto const &t : s.terms)
    if (is_normalized_by(t, G))
      normal_terms.push_back(t);
  std::vector<Group> const lattice = normal_subgroups(G, limits);
  for (std::size_t i = 1; i < normal_terms.size(); ++i) {
    Group const &upper = normal_terms[i - 1];
    Group const &lower = normal_terms[i];
    for (auto const &N : lattice)
      if (N.order() > lower.order() && N.order() < upper.order() &&
          lower.is_subgroup_of(N) && N.is_subgroup_of(upper))
        return std::nullopt;
  }
  return normal_terms;
}

} // namespace carter
