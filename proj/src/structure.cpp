#include "carter/structure.hpp"

#include "carter/arith.hpp"
#include "carter/errors.hpp"

#include <algorithm>
#include <optional>

namespace carter {

namespace
{

bool commutes(Permutation const &a, Permutation const &b)
{
  for (std::size_t i = 0; i < a.degree(); ++i) {
    Point x = static_cast<Point>(i);
    if (b[a[x]] != a[b[x]])
      return false;
  }
  return true;
}

/// True iff X^h = X, i.e. every generator of X conjugated by h lies in X.
bool normalizes(Permutation const &h, Group const &X, std::vector<Point> &hinv)
{
  if (X.is_trivial())
    return true;
  std::size_t const d = h.degree();
  hinv.resize(d);
  for (std::size_t i = 0; i < d; ++i)
    hinv[h[static_cast<Point>(i)]] = static_cast<Point>(i);
  auto const &top = X.chain().front();
  for (auto const &x : X.generators()) {
    // (h^-1 x h)(base) lands outside the first basic orbit: cheap rejection.
    Point y = h[x[hinv[top.base]]];
    if (top.position[y] < 0)
      return false;
  }
  for (auto const &x : X.generators())
    if (!X.contains(conjugate(x, h)))
      return false;
  return true;
}

void require_inside(Group const &G, Group const &H, char const *what)
{
  if (H.degree() != G.degree() || !H.is_subgroup_of(G))
    throw DomainError(std::string(what) + ": subgroup is not inside the group");
}

} // namespace

SubgroupHandle SubgroupHandle::make(Group ambient, Group subgroup)
{
  require_inside(ambient, subgroup, "SubgroupHandle");
  return {std::move(ambient), std::move(subgroup)};
}

Group trivial_subgroup(Group const &g) { return Group(g.degree()); }

bool is_normalized_by(Group const &n, Group const &g)
{
  for (auto const &x : n.generators())
    for (auto const &s : g.generators())
      if (!n.contains(conjugate(x, s)))
        return false;
  return true;
}

Group normal_closure(Group const &G, std::vector<Permutation> const &S)
{
  Group N(G.degree());
  std::vector<Permutation> queue;
  for (auto const &s : S) {
    if (s.degree() != G.degree() || !G.contains(s))
      throw DomainError("normal_closure: element outside the group");
    if (!N.contains(s)) {
      N = N.with_generator(s);
      queue.push_back(s);
    }
  }
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (auto const &g : G.generators()) {
      Permutation c = conjugate(queue[i], g);
      if (!N.contains(c)) {
        N = N.with_generator(c);
        queue.push_back(std::move(c));
      }
    }
  }
  return N;
}

Group commutator_with(Group const &G, Group const &A)
{
  std::vector<Permutation> comms;
  for (auto const &a : A.generators())
    for (auto const &g : G.generators()) {
      Permutation c = commutator(a, g);
      if (!c.is_identity())
        comms.push_back(std::move(c));
    }
  return normal_closure(G, comms);
}

Group derived_subgroup(Group const &G) { return commutator_with(G, G); }

std::vector<Group> derived_series(Group const &G)
{
  // A perfect term shows up twice, marking stabilization.
  std::vector<Group> series{G};
  while (!series.back().is_trivial()) {
    Group next = derived_subgroup(series.back());
    bool const stable = next.order() == series.back().order();
    series.push_back(std::move(next));
    if (stable)
      break;
  }
  return series;
}

bool is_solvable(Group const &G)
{
  Group current = G;
  while (!current.is_trivial()) {
    Group next = derived_subgroup(current);
    if (next.order() == current.order())
      return false;
    current = std::move(next);
  }
  return true;
}

std::vector<Group> lower_central_series(Group const &G)
{
  std::vector<Group> series{G};
  while (!series.back().is_trivial()) {
    Group next = commutator_with(G, series.back());
    bool const stable = next.order() == series.back().order();
    series.push_back(std::move(next));
    if (stable)
      break;
  }
  return series;
}

bool is_nilpotent(Group const &G) { return lower_central_series(G).back().is_trivial(); }

Group normalizer_in(Group const &H, Group const &X, Limits const &limits)
{
  if (H.degree() != X.degree())
    throw DomainError("normalizer: degree mismatch");
  Group result = X.is_subgroup_of(H) ? X : Group(H.degree());
  if (result.order() == H.order())
    return result;
  std::vector<Point> hinv;
  H.for_each_element(limits, [&](Permutation const &h) {
    if (!result.contains(h) && normalizes(h, X, hinv))
      result = result.with_generator(h);
    return result.order() != H.order();
  });
  return result;
}

Group centralizer_in(Group const &H, Group const &X, Limits const &limits)
{
  if (H.degree() != X.degree())
    throw DomainError("centralizer: degree mismatch");
  Group result(H.degree());
  H.for_each_element(limits, [&](Permutation const &h) {
    if (result.contains(h))
      return true;
    for (auto const &x : X.generators())
      if (!commutes(h, x))
        return true;
    result = result.with_generator(h);
    return result.order() != H.order();
  });
  return result;
}

Group normalizer(Group const &G, Group const &H, Limits const &limits)
{
  require_inside(G, H, "normalizer");
  return normalizer_in(G, H, limits);
}

Group centralizer(Group const &G, Group const &H, Limits const &limits)
{
  require_inside(G, H, "centralizer");
  return centralizer_in(G, H, limits);
}

Group intersection(Group const &A, Group const &B, Limits const &limits)
{
  if (A.degree() != B.degree())
    throw DomainError("intersection: degree mismatch");
  Group const &small = A.order() <= B.order() ? A : B;
  Group const &large = A.order() <= B.order() ? B : A;
  if (small.is_subgroup_of(large))
    return small;
  Group result(A.degree());
  small.for_each_element(limits, [&](Permutation const &x) {
    if (!result.contains(x) && large.contains(x))
      result = result.with_generator(x);
    return true;
  });
  return result;
}

std::vector<std::vector<Permutation>> conjugacy_classes(Group const &G,
                                                        Limits const &limits)
{
  std::vector<std::vector<Permutation>> classes;
  std::vector<bool> seen(G.order(), false);
  G.for_each_element(limits, [&](Permutation const &x) {
    std::uint64_t r = G.rank(x);
    if (seen[r])
      return true;
    seen[r] = true;
    std::vector<Permutation> cls{x};
    for (std::size_t i = 0; i < cls.size(); ++i)
      for (auto const &g : G.generators()) {
        Permutation y = conjugate(cls[i], g);
        std::uint64_t ry = G.rank(y);
        if (!seen[ry]) {
          seen[ry] = true;
          cls.push_back(std::move(y));
        }
      }
    classes.push_back(std::move(cls));
    return true;
  });
  return classes;
}

std::vector<std::uint64_t> subgroup_key(Group const &G, Group const &H,
                                        Limits const &limits)
{
  std::vector<std::uint64_t> key;
  key.reserve(H.order());
  H.for_each_element(limits, [&](Permutation const &h) {
    key.push_back(G.rank(h));
    return true;
  });
  std::sort(key.begin(), key.end());
  return key;
}

std::vector<Group> normal_subgroups(Group const &G, Limits const &limits)
{
  std::vector<Group> found{Group(G.degree())};
  auto add = [&](Group N) {
    for (auto const &M : found)
      if (M.same_elements(N))
        return false;
    found.push_back(std::move(N));
    return true;
  };
  for (auto const &cls : conjugacy_classes(G, limits))
    if (!cls.front().is_identity())
      add(normal_closure(G, {cls.front()}));
  // Close under joins; the join of two normal subgroups is normal.
  for (std::size_t i = 0; i < found.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      if (found[j].is_subgroup_of(found[i]) || found[i].is_subgroup_of(found[j]))
        continue;
      add(found[i].with_generators(found[j].generators()));
    }
  std::vector<std::pair<std::vector<std::uint64_t>, std::size_t>> keyed;
  for (std::size_t i = 0; i < found.size(); ++i)
    keyed.emplace_back(subgroup_key(G, found[i], limits), i);
  std::sort(keyed.begin(), keyed.end(), [](auto const &a, auto const &b) {
    if (a.first.size() != b.first.size())
      return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  std::vector<Group> out;
  for (auto const &[key, i] : keyed)
    out.push_back(found[i]);
  return out;
}

Group sylow_subgroup(Group const &G, std::uint64_t p, Limits const &limits)
{
  if (!is_prime(p))
    throw DomainError("sylow_subgroup: p must be prime");
  std::uint64_t const target = p_part(G.order(), p);
  if (target == 1)
    return Group(G.degree());
  std::optional<Permutation> start;
  G.for_each_element(limits, [&](Permutation const &x) {
    if ((!start || x < *start) && x.order() == p)
      start = x;
    return true;
  });
  Group H = Group(G.degree()).with_generator(*start);
  while (H.order() < target) {
    Group N = normalizer_in(G, H, limits);
    std::optional<Permutation> best;
    N.for_each_element(limits, [&](Permutation const &x) {
      if ((!best || x < *best) && !H.contains(x) && is_power_of(x.order(), p))
        best = x;
      return true;
    });
    if (!best)
      throw InternalError("sylow ascent found no p-element in N_G(H) outside H");
    H = H.with_generator(*best);
  }
  if (H.order() != target)
    throw InternalError("sylow ascent overshot the p-part");
  return H;
}

Group o_pprime(Group const &G, std::uint64_t p, Limits const &limits)
{
  if (!is_prime(p))
    throw DomainError("o_pprime: p must be prime");
  std::vector<Group> coprime;
  for (auto &N : normal_subgroups(G, limits))
    if (N.order() % p != 0)
      coprime.push_back(std::move(N));
  // normal_subgroups is ordered by order, so the last one is largest.
  Group const &largest = coprime.back();
  for (auto const &N : coprime)
    if (!N.is_subgroup_of(largest))
      throw InternalError("p'-core is not unique");
  return largest;
}

std::vector<std::uint64_t> element_orders(Group const &G, Limits const &limits)
{
  std::vector<std::uint64_t> orders;
  G.for_each_element(limits, [&](Permutation const &x) {
    orders.push_back(x.order());
    return true;
  });
  std::sort(orders.begin(), orders.end());
  return orders;
}

} // namespace carter
