#include "carter/induced.hpp"

#include "carter/errors.hpp"
#include "carter/structure.hpp"

namespace carter {

namespace
{

/// x induces the identity on A/B iff (x^-1 a x) a^-1 lies in B for every
/// generator a of A.
bool acts_trivially(Permutation const &x, Section const &sec)
{
  for (auto const &a : sec.top().generators())
    if (!sec.bottom().contains(conjugate(a, x) * a.inverse()))
      return false;
  return true;
}

} // namespace

Permutation induced_permutation(Section const &sec, Permutation const &x)
{
  return sec.cosets().conjugation_action(x);
}

InducedAutGroup induced_aut(Group const &H, Section const &sec, Limits const &limits)
{
  if (H.degree() != sec.ambient().degree() || !H.is_subgroup_of(sec.ambient()))
    throw DomainError("induced_aut: acting group is not inside the ambient group");
  Group N = intersection(normalizer_in(H, sec.top(), limits),
                         normalizer_in(H, sec.bottom(), limits), limits);
  Group C(H.degree());
  N.for_each_element(limits, [&](Permutation const &x) {
    if (!C.contains(x) && acts_trivially(x, sec))
      C = C.with_generator(x);
    return true;
  });
  std::vector<Permutation> images;
  for (auto const &x : N.generators()) {
    Permutation p = induced_permutation(sec, x);
    if (!p.is_identity())
      images.push_back(std::move(p));
  }
  Group image = Group::from_generators(sec.order(), std::move(images), coset_limits(limits),
                                       N.order() / C.order());
  return InducedAutGroup{sec, H, std::move(N), std::move(C), std::move(image)};
}

bool centralizer_restriction_check(Group const &G, Group const &H, Section const &sec,
                                   Limits const &limits)
{
  if (!H.is_subgroup_of(G))
    throw DomainError("centralizer_restriction_check: H is not inside G");
  Group const cH = induced_aut(H, sec, limits).kernel;
  Group const cG = induced_aut(G, sec, limits).kernel;
  return cH.same_elements(intersection(cG, H, limits));
}

bool aut_subgroup_embedding(Group const &G, Group const &H, Section const &sec,
                            Limits const &limits)
{
  if (!H.is_subgroup_of(G))
    throw DomainError("aut_subgroup_embedding: H is not inside G");
  Group const autH = induced_aut(H, sec, limits).image;
  Group const autG = induced_aut(G, sec, limits).image;
  for (auto const &p : autH.generators())
    if (!autG.contains(p))
      return false;
  return true;
}

} // namespace carter
