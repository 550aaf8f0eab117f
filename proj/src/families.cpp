#include "cyclespec/families.hpp"

#include <algorithm>
#include <numeric>

namespace cyclespec {

namespace {

void expect_arity(const FamilySpec& spec, std::size_t arity) {
  if (spec.parameters.size() != arity) {
    throw GraphError(to_string(spec.family) + " takes " + std::to_string(arity) +
                     " parameter(s), got " + std::to_string(spec.parameters.size()));
  }
}

void expect_at_least(const FamilySpec& spec, int value, int minimum) {
  if (value < minimum) {
    throw GraphError(to_string(spec.family) + " parameter " + std::to_string(value) +
                     " below minimum " + std::to_string(minimum));
  }
}

void expect_order(long n) {
  if (n > kMaxVertices) {
    throw GraphError("generated graph would have " + std::to_string(n) + " vertices, cap is " +
                     std::to_string(kMaxVertices));
  }
}

Graph complete_multipartite(const std::vector<int>& parts) {
  const long n = std::accumulate(parts.begin(), parts.end(), 0L);
  expect_order(n);
  std::vector<int> part_of;
  for (std::size_t p = 0; p < parts.size(); ++p) part_of.insert(part_of.end(), parts[p], static_cast<int>(p));
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (part_of[u] != part_of[v]) edges.emplace_back(u, v);
    }
  }
  return Graph(static_cast<int>(n), edges);
}

Graph ht(int t) {
  const int side = 2 * t + 2;
  expect_order(2L * side);
  auto v = [](int j) { return j; };
  auto u = [side](int j) { return side + j; };
  std::vector<Edge> edges;
  for (int j = 0; j + 1 < side; ++j) edges.emplace_back(v(j), v(j + 1));
  for (int j = 0; j + 1 < side; ++j) edges.emplace_back(u(j), u(j + 1));
  for (int i = 0; i <= t; ++i) {
    edges.emplace_back(v(2 * i), u(2 * i + 1));
    edges.emplace_back(u(2 * i), v(2 * i + 1));
  }
  edges.emplace_back(u(0), v(0));
  edges.emplace_back(u(2 * t + 1), v(2 * t + 1));
  return Graph(2 * side, edges);
}

}  // namespace

std::string to_string(Family family) {
  switch (family) {
    case Family::kHt: return "ht";
    case Family::kComplete: return "complete";
    case Family::kCompleteBipartite: return "complete_bipartite";
    case Family::kCompleteMultipartite: return "complete_multipartite";
    case Family::kCycle: return "cycle";
    case Family::kPath: return "path";
    case Family::kPetersen: return "petersen";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (Family f : {Family::kHt, Family::kComplete, Family::kCompleteBipartite,
                   Family::kCompleteMultipartite, Family::kCycle, Family::kPath, Family::kPetersen}) {
    if (to_string(f) == name) return f;
  }
  throw GraphError("unknown family \"" + std::string(name) + "\"");
}

Graph generate(const FamilySpec& spec) {
  const auto& p = spec.parameters;
  switch (spec.family) {
    case Family::kHt:
      expect_arity(spec, 1);
      expect_at_least(spec, p[0], 1);
      return ht(p[0]);
    case Family::kComplete: {
      expect_arity(spec, 1);
      expect_at_least(spec, p[0], 1);
      return complete_multipartite(std::vector<int>(static_cast<std::size_t>(std::min(p[0], kMaxVertices + 1)), 1));
    }
    case Family::kCompleteBipartite:
      expect_arity(spec, 2);
      expect_at_least(spec, p[0], 1);
      expect_at_least(spec, p[1], 1);
      return complete_multipartite(p);
    case Family::kCompleteMultipartite:
      if (p.empty()) throw GraphError("complete_multipartite needs at least one part size");
      for (int part : p) expect_at_least(spec, part, 1);
      return complete_multipartite(p);
    case Family::kCycle: {
      expect_arity(spec, 1);
      expect_at_least(spec, p[0], 3);
      expect_order(p[0]);
      std::vector<Edge> edges;
      for (int i = 0; i < p[0]; ++i) edges.emplace_back(i, (i + 1) % p[0]);
      return Graph(p[0], edges);
    }
    case Family::kPath: {
      expect_arity(spec, 1);
      expect_at_least(spec, p[0], 1);
      expect_order(p[0]);
      std::vector<Edge> edges;
      for (int i = 0; i + 1 < p[0]; ++i) edges.emplace_back(i, i + 1);
      return Graph(p[0], edges);
    }
    case Family::kPetersen: {
      expect_arity(spec, 0);
      std::vector<Edge> edges;
      for (int i = 0; i < 5; ++i) edges.emplace_back(i, (i + 1) % 5);
      for (int i = 0; i < 5; ++i) edges.emplace_back(i, i + 5);
      for (int i = 0; i < 5; ++i) edges.emplace_back(5 + i, 5 + (i + 2) % 5);
      return Graph(10, edges);
    }
  }
  throw GraphError("unknown family");
}

Graph join(const Graph& g, const Graph& h) {
  const int n = g.order() + h.order();
  expect_order(n);
  std::vector<Edge> edges = g.edges();
  for (const Edge& e : h.edges()) edges.emplace_back(e.u + g.order(), e.v + g.order());
  for (Vertex a = 0; a < g.order(); ++a) {
    for (Vertex b = 0; b < h.order(); ++b) edges.emplace_back(a, g.order() + b);
  }
  return Graph(n, edges);
}

}  // namespace cyclespec
