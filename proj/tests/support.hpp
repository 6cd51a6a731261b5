#pragma once

#include "carter/group.hpp"
#include "carter/harness.hpp"
#include "carter/recognize.hpp"
#include "oracle/brute_force.hpp"

#include <vector>

namespace test_support {

inline carter::Group named(std::string const &family, std::vector<std::uint64_t> params)
{
  return carter::construct(carter::parse_group_spec(family, params));
}

inline carter::Group generated(std::size_t degree,
                               std::vector<std::vector<std::vector<carter::Point>>> cycles)
{
  std::vector<carter::Permutation> gens;
  for (auto const &c : cycles)
    gens.push_back(carter::Permutation::from_cycles(degree, c));
  return carter::Group::from_generators(degree, gens);
}

/// Named groups of the default corpus with order at most `max_order`.
inline std::vector<carter::GroupSpec> corpus_specs(std::uint64_t max_order)
{
  std::vector<carter::GroupSpec> out;
  for (auto const &e : carter::default_corpus())
    if (e.spec && e.spec->expected_order() <= max_order)
      out.push_back(*e.spec);
  return out;
}

inline oracle::FiniteGroup to_oracle(carter::Group const &g)
{
  std::vector<oracle::Perm> gens;
  for (auto const &p : g.generators())
    gens.emplace_back(p.images().begin(), p.images().end());
  return oracle::FiniteGroup(g.degree(), gens);
}

inline oracle::Subset subset_of(oracle::FiniteGroup const &O, carter::Group const &H)
{
  oracle::Subset s(O.order(), false);
  for (auto const &p : H.elements())
    s[O.index_of(oracle::Perm(p.images().begin(), p.images().end()))] = true;
  return s;
}

} // namespace test_support
