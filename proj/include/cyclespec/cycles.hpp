#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "cyclespec/cycle.hpp"
#include "cyclespec/graph.hpp"

namespace cyclespec {

struct CycleEnumeration {
  std::vector<Cycle> cycles;
  /// More cycles exist than were returned.
  bool truncated = false;
};

/// Lists every simple cycle once, in canonical form, stopping after `cap`.
/// Diagnostic only: verdict-bearing code uses cycle_length_set.
CycleEnumeration enumerate_cycles(const Graph& g, std::size_t cap);

/// Exact set of cycle lengths with one witness per length.
struct CycleLengths {
  std::map<int, Cycle> witnesses;

  std::set<int> lengths() const;
  bool empty() const { return witnesses.empty(); }
};

/// Exact over any graph within `limit`; throws SizeLimitError above it.
CycleLengths cycle_length_set(const Graph& g, int limit = exactness_limit());

struct SpectrumReport {
  int modulus = 0;
  /// residue -> a shortest cycle with that residue
  std::map<int, Cycle> present;
  std::set<int> missing;
  std::set<int> lengths_seen;
  bool truncated = false;

  bool complete() const { return missing.empty(); }
};

SpectrumReport cycle_spectrum_mod(const Graph& g, int k, int limit = exactness_limit());

struct CycleExtremes {
  std::optional<int> girth;
  std::optional<int> circumference;
};

CycleExtremes cycle_extremes(const Graph& g, int limit = exactness_limit());

/// A shortest odd cycle, found by breadth-first search from every vertex.
std::optional<Cycle> shortest_odd_cycle(const Graph& g);

struct ConsecutiveRun {
  int start = 0;
  int size = 0;
  bool operator==(const ConsecutiveRun&) const = default;
};

/// Longest run of consecutive cycle lengths; ties go to the smaller start.
ConsecutiveRun longest_consecutive_run(const Graph& g, int limit = exactness_limit());

/// An odd cycle and an even cycle that are edge-disjoint and share at most one
/// vertex.
struct OppositePair {
  Cycle odd_cycle;
  Cycle even_cycle;
};

/// Roles are decided by parity, so the argument order does not matter.
bool is_opposite_pair(const Graph& g, const Cycle& c, const Cycle& d);

/// Searches odd cycles by increasing length and, for the first that admits a
/// partner, returns the shortest even partner.
std::optional<OppositePair> find_opposite_pair(const Graph& g, int limit = exactness_limit());

/// Lengths l >= 1 of simple paths with one end in a and the other in b, with one
/// witness per length. Throws GraphError unless (a, b) partitions V(g) into
/// non-empty parts.
std::map<int, Path> ab_path_length_spectrum(const Graph& g, VertexSet a, VertexSet b,
                                            int limit = exactness_limit());

/// Exact cycle lengths of G[allowed], witnesses in the original labels.
CycleLengths cycle_lengths_within(const Graph& g, VertexSet allowed);

}  // namespace cyclespec
