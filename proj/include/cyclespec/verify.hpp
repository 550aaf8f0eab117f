#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "cyclespec/coloring.hpp"
#include "cyclespec/cycles.hpp"
#include "cyclespec/graph.hpp"

namespace cyclespec {

enum class Verdict {
  kPass,
  kExempt,
  kViolation,
  kSkippedHypothesis,
  kRefusedSize,
  kSkipped,  // input line could not be parsed
};

std::string to_string(Verdict verdict);

struct VerdictRecord {
  nlohmann::json graph_id;  // input index or generator spec
  int n = 0;
  int m = 0;
  std::string check;
  Verdict verdict = Verdict::kSkipped;
  nlohmann::json witnesses = nlohmann::json::object();
  std::int64_t elapsed_ms = 0;
};

nlohmann::json to_json(const VerdictRecord& record);

// Serialisation helpers shared with the CLI.
nlohmann::json to_json(const Cycle& c);
nlohmann::json to_json(const Path& p);
nlohmann::json to_json(const Coloring& c);
nlohmann::json to_json(const ConflictWitness& w);
nlohmann::json to_json(const SpectrumReport& s);
nlohmann::json to_json(const OppositePair& pair);

// Every check answers refused-size instead of approximating when g exceeds
// `limit`.

/// 2-connected, non-bipartite, minimum degree >= 4 => all residues mod 4,
/// except K5.
VerdictRecord verify_mod4_theorem(const Graph& g, int limit = exactness_limit());

/// 2-connected, minimum degree >= 4, and an opposite pair => all residues mod 4.
VerdictRecord verify_opposite_pair_lemma(const Graph& g, int limit = exactness_limit());

/// Chromatic number 6 => all residues mod 5, except graphs built around a K6.
VerdictRecord verify_mod5_critical(const Graph& g, int limit = exactness_limit());

/// (k+1)-critical and not complete => all residues mod k.
VerdictRecord verify_critical_spectrum(const Graph& g, int k, int limit = exactness_limit());

/// The k = 4 case of verify_critical_spectrum.
VerdictRecord verify_mod4_critical(const Graph& g, int limit = exactness_limit());

/// Connected, minimum degree >= 3 => A-B paths of every length below the
/// circumference, unless (A, B) is the bipartition.
VerdictRecord verify_ab_paths(const Graph& g, VertexSet a, VertexSet b,
                              int limit = exactness_limit());

/// 2-connected, triangle-free, minimum degree >= k >= 3 => a cycle of length
/// at least 2k+2, unless g is K_{k,n'}.
VerdictRecord verify_longcycle(const Graph& g, int k, int limit = exactness_limit());

/// 2-connected, minimum degree >= k >= 2, with a triangle => k consecutive
/// cycle lengths, unless g is K_{k+1}.
VerdictRecord verify_consecutive(const Graph& g, int k, int limit = exactness_limit());

/// Either the BFS layer conditions hold (layer components 3-colourable and
/// consecutive non-bipartite components meeting only at good vertices) or the
/// mod-5 spectrum is complete. Without `root`, every root is tried when
/// n <= 12 and vertex 0 otherwise.
VerdictRecord verify_layer_lemmas(const Graph& g, std::optional<Vertex> root = std::nullopt,
                                  int limit = exactness_limit());

/// Check identifiers accepted by run_corpus and the CLI.
const std::vector<std::string>& check_ids();

struct CorpusOptions {
  std::string check;
  int jobs = 1;
  int limit = exactness_limit();
  int k = 3;                   // longcycle, consecutive, critical_spectrum
  std::uint64_t seed = 2021;   // ab_paths partition sampling
  int partitions = 3;          // ab_paths partitions per graph
};

struct CorpusReport {
  std::string source;
  std::string check;
  std::map<Verdict, int> totals;
  std::vector<VerdictRecord> records;
};

/// Runs one check over a graph6 stream, one record per graph in input order.
/// Unparseable lines become `skipped` records. Throws std::runtime_error for
/// unreadable files and GraphError for unknown checks.
CorpusReport run_corpus(std::istream& in, std::string source, const CorpusOptions& options);
CorpusReport run_corpus(const std::filesystem::path& path, const CorpusOptions& options);

/// Single-graph dispatch used by run_corpus; `index` seeds partition sampling.
VerdictRecord run_check(const Graph& g, const CorpusOptions& options, std::size_t index);

nlohmann::json to_json(const CorpusReport& report);

/// 1 if any violation, else 2 if any input error, else 0.
int exit_code(const CorpusReport& report);

/// Human-readable rendering of a report's JSON.
std::string render_summary(const nlohmann::json& report);

/// Distinct seeded non-trivial partitions (A holds vertex 0) for ab_paths
/// sweeps; all of them when fewer than `count` exist.
std::vector<std::pair<VertexSet, VertexSet>> sample_partitions(int n, int count, std::uint64_t seed);

}  // namespace cyclespec
