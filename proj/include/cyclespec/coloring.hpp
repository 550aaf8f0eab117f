#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cyclespec/decomposition.hpp"
#include "cyclespec/graph.hpp"

namespace cyclespec {

/// Total map vertex -> colour in 1..palette. Properness is checked, not assumed.
struct Coloring {
  std::vector<int> colors;
  int palette = 0;

  int color(Vertex v) const { return colors[static_cast<std::size_t>(v)]; }
  int colors_used() const;
  bool operator==(const Coloring&) const = default;
};

/// Full edge scan; also rejects colours outside 1..palette.
bool is_proper(const Graph& g, const Coloring& c);

enum class ConflictKind {
  kLayerComponentOverflow,     // a layer component needs more than 3 colours
  kGoodBadAdjacency,           // consecutive non-bipartite components meet at a bad vertex
  kConstrainedInfeasible,      // the bad core has no proper 3-colouring
};

std::string to_string(ConflictKind kind);

struct ConflictWitness {
  ConflictKind kind{};
  /// Offending component, core, or the two ends of an edge.
  std::vector<Vertex> location;
  /// Identifier of the violated lemma plus a short description.
  std::string detail;
  int layer = -1;
  int chromatic_number = 0;
};

using ColoringOutcome = std::variant<Coloring, ConflictWitness>;

struct ChromaticResult {
  int chi = 0;
  Coloring witness;
};

/// Exact chromatic number by DSATUR branch and bound with a greedy clique
/// lower bound. Throws SizeLimitError above `limit`.
ChromaticResult chromatic_number(const Graph& g, int limit = exactness_limit());

/// Lexicographically first proper colouring with colours 1..palette, if any.
std::optional<Coloring> find_coloring(const Graph& g, int palette);

struct EdgeColoring {
  Edge edge;
  Coloring coloring;  // proper (k-1)-colouring of g - edge
};

struct CriticalityCertificate {
  bool critical = false;
  int chi = 0;
  Coloring chi_witness;
  std::vector<EdgeColoring> edge_colorings;
  /// First edge whose deletion keeps chi at k, when one exists.
  std::optional<Edge> failing_edge;
  std::string reason;
};

/// chi(g) == k, no isolated vertex, and chi(g - e) == k - 1 for every edge.
CriticalityCertificate is_k_critical(const Graph& g, int k, int limit = exactness_limit());

/// Necessary conditions for (k+1)-criticality: minimum degree >= k and
/// 2-connectedness.
struct StructuralReport {
  int k = 0;
  int min_degree = 0;
  bool min_degree_ok = false;
  bool two_connected = false;

  bool passes() const { return min_degree_ok && two_connected; }
};

StructuralReport structural_criticality_check(const Graph& g, int k);

/// Proper colouring with bad vertices in {1,2,3} and good vertices in {1,2}.
/// The bad core is coloured exactly; good trees are absorbed parent-first.
/// Throws GraphError if `part` is not the partition of g.
ColoringOutcome constrained_three_coloring(const Graph& g, const GoodBadPartition& part);

/// Layer-by-layer 5-colouring from a BFS rooted at r. Even layers use
/// {1,2,3}, odd layers {3,4,5}; colour 3 only on bad vertices of non-bipartite
/// layer components. Returns the first obstruction instead when one exists.
ColoringOutcome layered_five_coloring(const Graph& g, Vertex r, int limit = exactness_limit());

}  // namespace cyclespec
