#pragma once

#include <vector>

#include "cyclespec/graph.hpp"

namespace cyclespec {

/// Simple cycle v0 v1 ... v(l-1) v0, stored in canonical form: the smallest
/// vertex first, then the smaller of its two cycle neighbours.
struct Cycle {
  std::vector<Vertex> vertices;

  int length() const { return static_cast<int>(vertices.size()); }
  VertexSet vertex_set() const { return VertexSet::of(vertices); }
  std::vector<Edge> edges() const;
  bool operator==(const Cycle&) const = default;
  auto operator<=>(const Cycle&) const = default;
};

/// Simple path; a single vertex is a path of length 0.
struct Path {
  std::vector<Vertex> vertices;

  int length() const { return vertices.empty() ? 0 : static_cast<int>(vertices.size()) - 1; }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  bool operator==(const Path&) const = default;
};

/// Rotates and reflects a closed vertex sequence into canonical form.
Cycle canonical_cycle(std::vector<Vertex> closed_walk);

/// Independent re-check used on every witness: distinct vertices, length >= 3,
/// consecutive pairs (and the closing pair) are edges.
bool is_valid_cycle(const Graph& g, const Cycle& c);
bool is_valid_path(const Graph& g, const Path& p);

}  // namespace cyclespec
