#include "cyclespec/cycle.hpp"

#include <algorithm>

namespace cyclespec {

std::vector<Edge> Cycle::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    out.emplace_back(vertices[i], vertices[(i + 1) % vertices.size()]);
  }
  return out;
}

Cycle canonical_cycle(std::vector<Vertex> walk) {
  if (walk.size() < 3) return Cycle{std::move(walk)};
  auto min_it = std::ranges::min_element(walk);
  std::ranges::rotate(walk, min_it);
  if (walk[1] > walk.back()) std::reverse(walk.begin() + 1, walk.end());
  return Cycle{std::move(walk)};
}

bool is_valid_cycle(const Graph& g, const Cycle& c) {
  const auto& vs = c.vertices;
  if (vs.size() < 3) return false;
  VertexSet seen;
  for (Vertex v : vs) {
    if (!g.has_vertex(v) || seen.contains(v)) return false;
    seen.insert(v);
  }
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (!g.has_edge(vs[i], vs[(i + 1) % vs.size()])) return false;
  }
  return true;
}

bool is_valid_path(const Graph& g, const Path& p) {
  const auto& vs = p.vertices;
  if (vs.empty()) return false;
  VertexSet seen;
  for (Vertex v : vs) {
    if (!g.has_vertex(v) || seen.contains(v)) return false;
    seen.insert(v);
  }
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
    if (!g.has_edge(vs[i], vs[i + 1])) return false;
  }
  return true;
}

}  // namespace cyclespec
