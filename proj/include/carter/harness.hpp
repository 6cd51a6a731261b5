#pragma once

#include "carter/carter.hpp"
#include "carter/group.hpp"
#include "carter/recognize.hpp"
#include "carter/series.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace carter {

enum class Verdict { pass, fail, vacuous, capacity_exceeded, unresolved, error };
std::string to_string(Verdict v);

/// Outcome of one check on one group. A `fail` always carries the
/// counterexample in `evidence`.
struct Report {
  std::string group;
  std::string check;
  Verdict verdict = Verdict::pass;
  std::string note;
  nlohmann::ordered_json evidence = nlohmann::ordered_json::object();

  /// Fields in the fixed order group, check, verdict, note, evidence.
  nlohmann::ordered_json to_json() const;
};

enum class PairVerdict { containment_verified, containment_unresolved };

/// sigma[i] is the index of the rc-section matched to composition section i
/// (both 0-based).
struct SigmaWitness {
  std::vector<std::size_t> sigma;
  std::vector<PairVerdict> verdicts;
};

/**
 * Checks that some matching sigma of the composition factors T_i of `comp`
 * onto the factors S_j of the rc-series `rc` satisfies
 * Aut_G(T_i) <= Aut_G(S_{sigma(i)}). Prime-order factors compare by
 * divisibility inside the cyclic group Aut(Z_p); nonabelian factors need an
 * explicit isomorphism of sections under which the containment holds, found
 * by bounded generator-image search. When `comp` is itself an rc-series the
 * matched groups must also agree in order and element-order multiset.
 */
std::pair<SigmaWitness, Report> check_gjh(Group const &G, Series const &rc, Series const &comp,
                                          Limits const &limits = {});

/// For every nonabelian factor type of rc_series(G), some section of that type
/// has Aut_K(S_i) Carter in Aut_G(S_i).
Report check_carter_induced(Group const &G, std::optional<CarterWitness> const &K,
                            Limits const &limits = {});

/// Odd-order Carter subgroup => factors are cyclic or L2(3^(2n+1)); an L2
/// factor forces 3 | |K|; 3 ∤ |K| forces solvability. `K_hint` is validated.
Report check_main_theorem(Group const &G, std::optional<Group> const &K_hint,
                          Limits const &limits = {});

/// The two Sylow statements for an odd prime p, with the L2(3^(3^a))
/// exclusion clause evaluated on a composition series.
Report check_sylow_theorems(Group const &G, std::uint64_t p, Limits const &limits = {});

/// Samples (H, section) pairs in G and checks C_H = C_G ∩ H, the embedding
/// Aut_H <= Aut_G and |Aut_H| |C_H| = |N_H|.
Report check_induced_identities(Group const &G, std::size_t samples, std::uint64_t seed,
                                Limits const &limits = {});

/// Jordan-Hölder across seeds, rc-series containing their chief witness,
/// factor products equal to |G|, and per-kind normality.
Report check_series_invariants(Group const &G, std::uint64_t seed, std::size_t seeds,
                               Limits const &limits = {});

/// carter_subgroups re-verified, with the single-class property for solvable G.
Report check_carter_classes(Group const &G, std::optional<Group> const &K_hint,
                            Limits const &limits = {});

nlohmann::ordered_json series_to_json(Series const &s);

struct RunConfig {
  Limits limits;
  std::uint64_t seed = 1;
  /// Composition-series seeds per group for the GJH and series checks.
  std::size_t series_seeds = 3;
  /// (H, section) samples per group for the induced-automorphism check.
  std::size_t induced_samples = 8;
  unsigned jobs = 1;
  bool timings = false;
};

/// One corpus entry: a group file or a named family, plus the checks to run.
struct CorpusEntry {
  std::optional<std::filesystem::path> file;
  std::optional<GroupSpec> spec;
  std::vector<std::string> checks;
  /// "sylow:p" uses the Sylow p-subgroup as the Carter hint.
  std::optional<std::string> hint;
};

std::vector<std::string> const &all_check_names();

/// Parses a corpus document; relative file paths resolve against `base_dir`.
std::vector<CorpusEntry> parse_corpus(std::string const &text,
                                      std::filesystem::path const &base_dir);
std::vector<CorpusEntry> default_corpus();
std::string default_corpus_json();

/// Runs every enabled check on every entry. Unreadable entries become
/// `error` reports; the batch never aborts. Output order is canonical.
std::vector<Report> run_corpus(std::vector<CorpusEntry> const &entries,
                               RunConfig const &config = {});
std::vector<Report> run_corpus(std::filesystem::path const &corpus_path,
                               std::filesystem::path const &out_path,
                               RunConfig const &config = {});

std::string catalog_to_json(std::vector<Report> const &reports);
bool any_failure(std::vector<Report> const &reports);

} // namespace carter
