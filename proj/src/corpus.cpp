#include "carter/harness.hpp"

#include "carter/arith.hpp"
#include "carter/errors.hpp"
#include "carter/group_io.hpp"
#include "carter/structure.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <sstream>
#include <thread>

namespace carter {

using json = nlohmann::ordered_json;

std::vector<std::string> const &all_check_names()
{
  static std::vector<std::string> const names = {
      "series", "carter", "main_theorem", "carter_induced", "gjh", "sylow", "induced"};
  return names;
}

namespace
{

std::vector<std::string> parse_checks(json const &j)
{
  if (!j.contains("checks"))
    return all_check_names();
  std::vector<std::string> out;
  for (auto const &c : j.at("checks")) {
    std::string const name = c.get<std::string>();
    if (name == "all")
      return all_check_names();
    auto const &known = all_check_names();
    if (std::find(known.begin(), known.end(), name) == known.end())
      throw DomainError("unknown check '" + name + "'");
    out.push_back(name);
  }
  return out;
}

CorpusEntry parse_entry(json const &j, std::filesystem::path const &base_dir)
{
  if (!j.is_object())
    throw DomainError("corpus entry must be an object");
  CorpusEntry e;
  if (j.contains("file")) {
    std::filesystem::path p = j.at("file").get<std::string>();
    e.file = p.is_absolute() ? p : base_dir / p;
  } else if (j.contains("family")) {
    std::vector<std::uint64_t> params;
    if (j.contains("params"))
      params = j.at("params").get<std::vector<std::uint64_t>>();
    e.spec = parse_group_spec(j.at("family").get<std::string>(), params);
  } else {
    throw DomainError("corpus entry needs 'file' or 'family'");
  }
  e.checks = parse_checks(j);
  if (j.contains("hint")) {
    std::string const hint = j.at("hint").get<std::string>();
    if (hint.rfind("sylow:", 0) != 0)
      throw DomainError("unsupported hint '" + hint + "'");
    e.hint = hint;
  }
  return e;
}

std::optional<Group> resolve_hint(Group const &G, std::optional<std::string> const &hint,
                                  Limits const &limits)
{
  if (!hint)
    return std::nullopt;
  std::uint64_t const p = std::stoull(hint->substr(6));
  return sylow_subgroup(G, p, limits);
}

/// Runs `body`, turning exceptions into verdicts.
Report guarded(std::string const &group, std::string const &check, RunConfig const &config,
               std::function<Report()> const &body)
{
  auto const start = std::chrono::steady_clock::now();
  Report r;
  try {
    r = body();
  } catch (CapacityError const &e) {
    r = Report{};
    r.verdict = Verdict::capacity_exceeded;
    r.note = e.what();
  } catch (std::exception const &e) {
    r = Report{};
    r.verdict = Verdict::error;
    r.note = e.what();
  }
  r.group = group;
  if (r.check.empty() || r.verdict == Verdict::error || r.verdict == Verdict::capacity_exceeded)
    r.check = check;
  if (config.timings)
    r.evidence["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                                   std::chrono::steady_clock::now() - start)
                                   .count();
  return r;
}

std::vector<Report> run_entry(CorpusEntry const &entry, RunConfig const &config)
{
  Limits const &limits = config.limits;
  std::vector<Report> out;
  std::string name;
  Group G(1);
  try {
    if (entry.file) {
      NamedGroup ng = read_group_file(*entry.file, limits);
      name = ng.name.empty() ? entry.file->stem().string() : ng.name;
      G = std::move(ng.group);
    } else {
      name = entry.spec->name();
      G = construct(*entry.spec, limits);
    }
  } catch (std::exception const &e) {
    Report r;
    r.group = entry.file ? entry.file->filename().string() : "?";
    r.check = "load";
    r.verdict = Verdict::error;
    r.note = e.what();
    return {r};
  }

  auto enabled = [&](std::string const &c) {
    return std::find(entry.checks.begin(), entry.checks.end(), c) != entry.checks.end();
  };
  std::optional<Group> hint;
  try {
    hint = resolve_hint(G, entry.hint, limits);
  } catch (std::exception const &e) {
    Report r;
    r.group = name;
    r.check = "hint";
    r.verdict = Verdict::error;
    r.note = e.what();
    return {r};
  }

  for (auto const &check : all_check_names()) {
    if (!enabled(check))
      continue;
    if (check == "series") {
      out.push_back(guarded(name, check, config, [&] {
        return check_series_invariants(G, config.seed, config.series_seeds, limits);
      }));
    } else if (check == "carter") {
      out.push_back(guarded(name, check, config, [&] {
        return check_carter_classes(G, hint, limits);
      }));
    } else if (check == "main_theorem") {
      out.push_back(guarded(name, check, config, [&] {
        return check_main_theorem(G, hint, limits);
      }));
    } else if (check == "carter_induced") {
      std::vector<CarterWitness> witnesses;
      try {
        if (hint)
          witnesses.push_back(CarterWitness::make(G, *hint, limits));
        else
          witnesses = carter_subgroups(G, limits);
      } catch (...) {
        auto const error = std::current_exception();
        out.push_back(guarded(name, check, config,
                              [&]() -> Report { std::rethrow_exception(error); }));
        continue;
      }
      if (witnesses.empty()) {
        out.push_back(guarded(name, check, config, [&] {
          return check_carter_induced(G, std::nullopt, limits);
        }));
      }
      for (std::size_t i = 0; i < witnesses.size(); ++i)
        out.push_back(guarded(name, check, config, [&] {
          Report r = check_carter_induced(G, witnesses[i], limits);
          r.evidence["class"] = i;
          return r;
        }));
    } else if (check == "gjh") {
      for (std::size_t s = 0; s < config.series_seeds; ++s) {
        std::uint64_t const choice = config.seed + s;
        out.push_back(guarded(name, check, config, [&] {
          Series const rc = rc_series(G, limits);
          Series comp = composition_series(G, choice, limits);
          if (auto chief = refined_chief_series(comp, limits)) {
            comp.kind = SeriesKind::rc;
            comp.chief_witness = std::move(*chief);
          }
          Report r = check_gjh(G, rc, comp, limits).second;
          r.evidence["choice_seed"] = choice;
          return r;
        }));
      }
    } else if (check == "sylow") {
      for (auto p : prime_divisors(G.order()))
        if (p != 2)
          out.push_back(guarded(name, check, config, [&] {
            return check_sylow_theorems(G, p, limits);
          }));
    } else if (check == "induced") {
      out.push_back(guarded(name, check, config, [&] {
        return check_induced_identities(G, config.induced_samples, config.seed, limits);
      }));
    }
  }
  return out;
}

} // namespace

std::vector<CorpusEntry> parse_corpus(std::string const &text,
                                      std::filesystem::path const &base_dir)
{
  json doc;
  try {
    doc = json::parse(text);
  } catch (json::exception const &e) {
    throw DomainError(std::string("corpus is not valid JSON: ") + e.what());
  }
  json const *list = &doc;
  if (doc.is_object()) {
    if (!doc.contains("entries"))
      throw DomainError("corpus object needs an 'entries' array");
    list = &doc.at("entries");
  }
  if (!list->is_array())
    throw DomainError("corpus entries must be an array");
  std::vector<CorpusEntry> entries;
  try {
    for (auto const &j : *list)
      entries.push_back(parse_entry(j, base_dir));
  } catch (json::exception const &e) {
    throw DomainError(std::string("malformed corpus entry: ") + e.what());
  }
  return entries;
}

std::string default_corpus_json()
{
  json entries = json::array();
  auto add = [&](std::string family, std::vector<std::uint64_t> params,
                 std::optional<std::string> hint = std::nullopt) {
    json e;
    e["family"] = std::move(family);
    e["params"] = std::move(params);
    if (hint)
      e["hint"] = *hint;
    entries.push_back(std::move(e));
  };
  for (std::uint64_t n = 1; n <= 6; ++n)
    add("symmetric", {n});
  for (std::uint64_t n = 3; n <= 6; ++n)
    add("alternating", {n});
  for (std::uint64_t m = 3; m <= 10; ++m)
    add("dihedral", {m});
  add("frobenius", {7, 3});
  add("frobenius", {11, 5});
  for (std::uint64_t m = 1; m <= 30; ++m)
    add("cyclic", {m});
  for (std::uint64_t q : {5, 7, 9, 11, 13})
    add("psl2", {q});
  add("psigma_l2", {3, 3}, "sylow:3");
  json doc;
  doc["entries"] = std::move(entries);
  return doc.dump(2) + "\n";
}

std::vector<CorpusEntry> default_corpus()
{
  return parse_corpus(default_corpus_json(), ".");
}

std::vector<Report> run_corpus(std::vector<CorpusEntry> const &entries, RunConfig const &config)
{
  std::vector<std::vector<Report>> results(entries.size());
  unsigned jobs = config.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                   : config.jobs;
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(1, entries.size())));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < entries.size();)
      results[i] = run_entry(entries[i], config);
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t)
      pool.emplace_back(worker);
  }
  std::vector<Report> out;
  for (auto &r : results)
    for (auto &x : r)
      out.push_back(std::move(x));
  return out;
}

std::vector<Report> run_corpus(std::filesystem::path const &corpus_path,
                               std::filesystem::path const &out_path, RunConfig const &config)
{
  std::ifstream in(corpus_path);
  if (!in)
    throw DomainError("cannot read corpus " + corpus_path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  auto const reports =
      run_corpus(parse_corpus(buf.str(), corpus_path.parent_path()), config);
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
      throw DomainError("cannot write catalog " + out_path.string());
    out << catalog_to_json(reports);
  }
  return reports;
}

std::string catalog_to_json(std::vector<Report> const &reports)
{
  json arr = json::array();
  for (auto const &r : reports)
    arr.push_back(r.to_json());
  return arr.dump(2) + "\n";
}

bool any_failure(std::vector<Report> const &reports)
{
  return std::any_of(reports.begin(), reports.end(),
                     [](Report const &r) { return r.verdict == Verdict::fail; });
}

} // namespace carter
