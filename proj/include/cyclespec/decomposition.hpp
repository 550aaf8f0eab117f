#pragma once

#include <array>
#include <optional>
#include <vector>

#include "cyclespec/cycle.hpp"
#include "cyclespec/graph.hpp"

namespace cyclespec {

/// Connected components ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// Connected, at least three vertices, no cut vertex. K1 and K2 are not
/// 2-connected.
bool is_two_connected(const Graph& g);

struct BlockCutTree {
  /// Maximal 2-connected subgraphs, bridges and isolated vertices, sorted by
  /// their ascending vertex lists.
  std::vector<VertexSet> blocks;
  VertexSet cut_vertices;
  /// incidence[i] = cut vertices contained in blocks[i].
  std::vector<VertexSet> incidence;

  /// Indices of blocks with at most one cut vertex.
  std::vector<std::size_t> end_blocks() const;
};

BlockCutTree block_cut_tree(const Graph& g);

struct BfsLayering {
  Vertex root = 0;
  std::vector<VertexSet> layers;
  /// parent[v] is the tree parent of v; -1 for the root.
  std::vector<Vertex> parent;
  /// depth[v] is the layer index of v.
  std::vector<int> depth;
};

/// Breadth-first layering from r. Parents are the smallest-index neighbour in
/// the previous layer. Throws GraphError if some vertex is unreachable.
BfsLayering bfs_layering(const Graph& g, Vertex r);

/// Unique a-b path through the tree's parent links.
Path tree_path(const BfsLayering& layering, Vertex a, Vertex b);

struct Bipartition {
  VertexSet a;  // holds the smallest vertex of every component
  VertexSet b;
};

struct BipartitionResult {
  std::optional<Bipartition> parts;
  std::optional<Cycle> odd_cycle;  // present iff parts is absent
};

BipartitionResult bipartition(const Graph& g);
bool is_bipartite(const Graph& g);

struct GoodBadPartition {
  VertexSet good;
  VertexSet bad;
  bool operator==(const GoodBadPartition&) const = default;
};

/// Bad vertices span the minimal connected subgraph containing every
/// 2-connected block; the rest are good. A graph without 2-connected blocks is
/// all good. Throws GraphError on disconnected input.
GoodBadPartition good_bad_partition(const Graph& g);

struct ThetaSubgraph {
  Vertex u = 0;
  Vertex v = 0;
  std::array<Path, 3> paths;  // internally disjoint u-v paths
};

std::optional<ThetaSubgraph> find_theta_subgraph(const Graph& g);

/// Checks that the three paths are pairwise internally disjoint u-v paths of g
/// with at most one of length 1.
bool is_valid_theta(const Graph& g, const ThetaSubgraph& theta);

/// True when G[allowed] contains an even cycle: some block is neither an edge,
/// a vertex nor an odd cycle.
bool has_even_cycle(const Graph& g, VertexSet allowed);

}  // namespace cyclespec
