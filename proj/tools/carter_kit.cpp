#include "carter/carter.hpp"
#include "carter/errors.hpp"
#include "carter/group_io.hpp"
#include "carter/harness.hpp"
#include "carter/induced.hpp"
#include "carter/recognize.hpp"
#include "carter/series.hpp"
#include "carter/structure.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace carter;
using json = nlohmann::ordered_json;

namespace
{

enum Exit { ok = 0, failed = 1, usage = 2, capacity = 3 };

struct Options {
  std::uint64_t cap_order = Limits{}.max_enumeration;
  std::uint64_t cap_nilpotent = Limits{}.max_nilpotent_enumeration;
  std::size_t cap_degree = Limits{}.max_degree;
  std::size_t cap_cosets = Limits{}.max_cosets;
  std::uint64_t seed = 1;
  std::uint64_t timeout_iso_search_ms = Limits{}.iso_search_timeout_ms;
  std::uint64_t iso_search_budget = Limits{}.iso_search_budget;
  unsigned jobs = 1;

  Limits limits() const
  {
    Limits l;
    l.max_enumeration = cap_order;
    l.max_nilpotent_enumeration = cap_nilpotent;
    l.max_degree = cap_degree;
    l.max_cosets = cap_cosets;
    l.iso_search_timeout_ms = timeout_iso_search_ms;
    l.iso_search_budget = iso_search_budget;
    return l;
  }
};

/// Values in the file named by CARTER_KIT_CONFIG win over command-line flags.
void apply_config_file(Options &o)
{
  char const *path = std::getenv("CARTER_KIT_CONFIG");
  if (!path || !*path)
    return;
  std::ifstream in(path);
  if (!in)
    throw DomainError(std::string("cannot read CARTER_KIT_CONFIG file ") + path);
  json cfg;
  try {
    cfg = json::parse(in);
  } catch (json::exception const &e) {
    throw DomainError(std::string("CARTER_KIT_CONFIG is not valid JSON: ") + e.what());
  }
  if (!cfg.is_object())
    throw DomainError("CARTER_KIT_CONFIG must hold a JSON object");
  for (auto const &[key, value] : cfg.items()) {
    std::string k = key;
    std::replace(k.begin(), k.end(), '-', '_');
    if (k == "cap_order")
      o.cap_order = value.get<std::uint64_t>();
    else if (k == "cap_nilpotent_order")
      o.cap_nilpotent = value.get<std::uint64_t>();
    else if (k == "cap_degree")
      o.cap_degree = value.get<std::size_t>();
    else if (k == "cap_cosets")
      o.cap_cosets = value.get<std::size_t>();
    else if (k == "seed")
      o.seed = value.get<std::uint64_t>();
    else if (k == "timeout_iso_search_ms")
      o.timeout_iso_search_ms = value.get<std::uint64_t>();
    else if (k == "iso_search_budget")
      o.iso_search_budget = value.get<std::uint64_t>();
    else if (k == "jobs")
      o.jobs = value.get<unsigned>();
    else
      throw DomainError("unknown CARTER_KIT_CONFIG key '" + key + "'");
  }
}

/// A group given either as a file or as a family with parameters.
struct GroupArg {
  std::string file;
  std::string family;
  std::vector<std::uint64_t> params;

  void attach(CLI::App *cmd)
  {
    cmd->add_option("group", file, "Group file (JSON with degree and generators)");
    cmd->add_option("--family", family,
                    "Named family instead of a file: symmetric, alternating, cyclic, "
                    "dihedral, frobenius, psl2, psigma_l2");
    cmd->add_option("--params", params, "Parameters of --family")->expected(1, 2);
  }

  NamedGroup load(Limits const &limits) const
  {
    if (!family.empty()) {
      GroupSpec spec = parse_group_spec(family, params);
      return NamedGroup{spec.name(), construct(spec, limits)};
    }
    if (file.empty())
      throw DomainError("give a group file or --family");
    NamedGroup g = read_group_file(file, limits);
    if (g.name.empty())
      g.name = std::filesystem::path(file).stem().string();
    return g;
  }
};

json generators_json(Group const &g)
{
  json gens = json::array();
  for (auto const &p : g.generators())
    gens.push_back(p.images());
  return gens;
}

json subgroup_json(Group const &g)
{
  json j;
  j["order"] = g.order();
  j["degree"] = g.degree();
  j["generators"] = generators_json(g);
  return j;
}

SeriesKind parse_kind(std::string const &k)
{
  if (k == "chief")
    return SeriesKind::chief;
  if (k == "composition")
    return SeriesKind::composition;
  if (k == "rc")
    return SeriesKind::rc;
  throw DomainError("unknown series kind '" + k + "'");
}

Series build_series(Group const &G, SeriesKind kind, std::uint64_t seed, Limits const &limits)
{
  switch (kind) {
  case SeriesKind::chief:
    return chief_series(G, limits);
  case SeriesKind::rc:
    return rc_series(G, limits);
  case SeriesKind::composition:
    break;
  }
  return composition_series(G, seed, limits);
}

void print(json const &j) { std::cout << j.dump(2) << "\n"; }

/// Factor label, or null for a section that is not simple (e.g. a chief factor
/// that is a direct power).
json factor_label(Section const &sec, Limits const &limits)
{
  try {
    return identify_factor(sec, limits).to_string();
  } catch (DomainError const &) {
    return nullptr;
  }
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"carter-kit: Carter subgroups, series and induced automorphisms of "
               "permutation groups"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--cap-order", opt.cap_order, "Largest group order enumerated element-wise");
  app.add_option("--cap-nilpotent-order", opt.cap_nilpotent,
                 "Largest group order for nilpotent-subgroup enumeration");
  app.add_option("--cap-degree", opt.cap_degree, "Largest permutation degree accepted");
  app.add_option("--cap-cosets", opt.cap_cosets, "Largest section order realized on cosets");
  app.add_option("--seed", opt.seed, "Seed for composition-series choices and sampling");
  app.add_option("--timeout-iso-search-ms", opt.timeout_iso_search_ms,
                 "Wall-clock guard on one isomorphism search");
  app.add_option("--jobs", opt.jobs, "Worker threads for corpus runs (0 = all cores)");

  auto *carter_cmd = app.add_subcommand("carter", "List Carter subgroups up to conjugacy");
  GroupArg carter_group;
  carter_group.attach(carter_cmd);

  auto *series_cmd = app.add_subcommand("series", "Chief, composition or rc-series");
  GroupArg series_group;
  series_group.attach(series_cmd);
  std::string series_kind = "rc";
  series_cmd->add_option("--kind", series_kind, "chief, composition or rc")
      ->check(CLI::IsMember({"chief", "composition", "rc"}));

  auto *induced_cmd =
      app.add_subcommand("induced-aut", "Group of induced automorphisms of a series section");
  GroupArg induced_group;
  induced_group.attach(induced_cmd);
  std::string induced_kind = "rc";
  std::size_t induced_index = 1;
  std::string acting_file;
  induced_cmd->add_option("--kind", induced_kind, "Series the section is taken from")
      ->check(CLI::IsMember({"chief", "composition", "rc"}));
  induced_cmd->add_option("--index", induced_index, "Section G_{i-1}/G_i, 1-based");
  induced_cmd->add_option("--acting", acting_file, "Group file of the acting subgroup H");

  auto *verify_cmd = app.add_subcommand("verify", "Run the verification checks on one group");
  GroupArg verify_group;
  verify_group.attach(verify_cmd);
  std::vector<std::string> verify_checks;
  std::string verify_hint;
  verify_cmd->add_option("--check", verify_checks, "Checks to run (default: all)")
      ->check(CLI::IsMember(all_check_names()));
  verify_cmd->add_option("--hint", verify_hint, "Carter hint, e.g. sylow:3");

  auto *construct_cmd = app.add_subcommand("construct", "Write a named group as a group file");
  std::string construct_family;
  std::vector<std::uint64_t> construct_params;
  std::string construct_out;
  construct_cmd->add_option("family", construct_family, "Family keyword")->required();
  construct_cmd->add_option("params", construct_params, "Family parameters")->required();
  construct_cmd->add_option("--out", construct_out, "Output file (default: stdout)");

  auto *corpus_cmd = app.add_subcommand("corpus", "Run a corpus and write a report catalog");
  std::string corpus_path;
  std::string corpus_out;
  bool corpus_print_default = false;
  bool corpus_timings = false;
  corpus_cmd->add_option("corpus", corpus_path, "Corpus file (default: built-in corpus)");
  corpus_cmd->add_option("--out", corpus_out, "Catalog file (default: stdout)");
  corpus_cmd->add_flag("--print-default", corpus_print_default,
                       "Print the built-in corpus and exit");
  corpus_cmd->add_flag("--timings", corpus_timings,
                       "Record elapsed time per report (breaks byte stability)");

  CLI11_PARSE(app, argc, argv);

  try {
    apply_config_file(opt);
    Limits const limits = opt.limits();

    if (carter_cmd->parsed()) {
      NamedGroup g = carter_group.load(limits);
      json out = json::array();
      for (auto const &w : carter_subgroups(g.group, limits)) {
        json j = subgroup_json(w.K);
        j["odd_order"] = w.odd_order;
        j["three_divides"] = w.three_divides;
        out.push_back(std::move(j));
      }
      print(out);
    } else if (series_cmd->parsed()) {
      NamedGroup g = series_group.load(limits);
      Series s = build_series(g.group, parse_kind(series_kind), opt.seed, limits);
      json j = series_to_json(s);
      json factors = json::array();
      for (auto const &sec : sections_of(s, limits))
        factors.push_back(factor_label(sec, limits));
      j["factors"] = std::move(factors);
      print(j);
    } else if (induced_cmd->parsed()) {
      NamedGroup g = induced_group.load(limits);
      Series s = build_series(g.group, parse_kind(induced_kind), opt.seed, limits);
      if (induced_index < 1 || induced_index >= s.terms.size())
        throw DomainError("--index must lie in 1.." + std::to_string(s.terms.size() - 1));
      Section sec = Section::make(g.group, s.terms[induced_index - 1], s.terms[induced_index],
                                  limits);
      Group H = acting_file.empty() ? g.group : read_group_file(acting_file, limits).group;
      InducedAutGroup aut = induced_aut(H, sec, limits);
      json j;
      j["section_orders"] = {sec.top().order(), sec.bottom().order()};
      j["factor"] = factor_label(sec, limits);
      j["acting_order"] = H.order();
      j["normalizer_order"] = aut.normalizer_part.order();
      j["centralizer_order"] = aut.kernel.order();
      j["aut"] = subgroup_json(aut.image);
      print(j);
    } else if (verify_cmd->parsed()) {
      CorpusEntry entry;
      if (!verify_group.family.empty())
        entry.spec = parse_group_spec(verify_group.family, verify_group.params);
      else if (!verify_group.file.empty())
        entry.file = verify_group.file;
      else
        throw DomainError("give a group file or --family");
      entry.checks = verify_checks.empty() ? all_check_names() : verify_checks;
      if (!verify_hint.empty())
        entry.hint = verify_hint;
      RunConfig config;
      config.limits = limits;
      config.seed = opt.seed;
      auto reports = run_corpus({entry}, config);
      std::cout << catalog_to_json(reports);
      return any_failure(reports) ? failed : ok;
    } else if (construct_cmd->parsed()) {
      GroupSpec spec = parse_group_spec(construct_family, construct_params);
      Group g = construct(spec, limits);
      if (construct_out.empty())
        std::cout << group_to_json(spec.name(), g);
      else
        write_group_file(construct_out, spec.name(), g);
    } else if (corpus_cmd->parsed()) {
      if (corpus_print_default) {
        std::cout << default_corpus_json();
        return ok;
      }
      RunConfig config;
      config.limits = limits;
      config.seed = opt.seed;
      config.jobs = opt.jobs;
      config.timings = corpus_timings;
      std::vector<Report> reports;
      if (corpus_path.empty()) {
        reports = run_corpus(default_corpus(), config);
        if (!corpus_out.empty()) {
          std::ofstream out(corpus_out, std::ios::binary);
          out << catalog_to_json(reports);
        }
      } else {
        reports = run_corpus(corpus_path, corpus_out, config);
      }
      if (corpus_out.empty())
        std::cout << catalog_to_json(reports);
      return any_failure(reports) ? failed : ok;
    }
  } catch (CapacityError const &e) {
    std::cerr << "carter-kit: capacity exceeded: " << e.what() << "\n";
    return capacity;
  } catch (std::exception const &e) {
    std::cerr << "carter-kit: " << e.what() << "\n";
    return usage;
  }
  return ok;
}
