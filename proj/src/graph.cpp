#include "cyclespec/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <istream>
#include <set>
#include <sstream>

namespace cyclespec {

namespace {

constexpr int kDefaultExactnessLimit = 16;
constexpr std::string_view kGraph6Header = ">>graph6<<";

std::string edge_location(const EdgeListDoc& doc, std::size_t i) {
  if (i < doc.lines.size()) return "line " + std::to_string(doc.lines[i]);
  return "edge #" + std::to_string(i + 1);
}

}  // namespace

SizeLimitError::SizeLimitError(int order, int limit)
    : std::runtime_error("graph has " + std::to_string(order) +
                         " vertices, above the exactness limit of " +
                         std::to_string(limit)),
      order_(order),
      limit_(limit) {}

int exactness_limit() {
  static const int limit = [] {
    const char* env = std::getenv("CYCLESPEC_LIMIT");
    if (env == nullptr || *env == '\0') return kDefaultExactnessLimit;
    int value = 0;
    std::string_view text(env);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || value < 1) {
      return kDefaultExactnessLimit;
    }
    return std::min(value, kMaxVertices);
  }();
  return limit;
}

void require_within_limit(int order, int limit) {
  if (order > limit) throw SizeLimitError(order, limit);
}

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n)) {
  if (n < 0 || n > kMaxVertices) {
    throw GraphError("vertex count " + std::to_string(n) + " outside [0, " +
                     std::to_string(kMaxVertices) + "]");
  }
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= n) {
      throw GraphError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                       ") out of range for " + std::to_string(n) + " vertices");
    }
    if (e.u == e.v) throw GraphError("loop at vertex " + std::to_string(e.u));
    if (adj_[e.u].contains(e.v)) {
      throw GraphError("duplicate edge (" + std::to_string(e.u) + ", " +
                       std::to_string(e.v) + ")");
    }
    adj_[e.u].insert(e.v);
    adj_[e.v].insert(e.u);
    ++m_;
  }
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : adj_[u] - VertexSet::range(u + 1)) out.emplace_back(u, v);
  }
  return out;
}

Graph from_edge_list(const EdgeListDoc& doc) {
  if (doc.n < 0 || doc.n > kMaxVertices) {
    throw GraphError("vertex count " + std::to_string(doc.n) + " outside [0, " +
                     std::to_string(kMaxVertices) + "]");
  }
  if (static_cast<std::size_t>(doc.m) != doc.edges.size()) {
    throw GraphError("header declares " + std::to_string(doc.m) + " edges but " +
                     std::to_string(doc.edges.size()) + " were given");
  }
  std::set<Edge> seen;
  std::vector<Edge> edges;
  edges.reserve(doc.edges.size());
  for (std::size_t i = 0; i < doc.edges.size(); ++i) {
    auto [u, v] = doc.edges[i];
    if (u < 0 || u >= doc.n || v < 0 || v >= doc.n) {
      throw GraphError(edge_location(doc, i) + ": vertex out of range [0, " +
                       std::to_string(doc.n) + ")");
    }
    if (u == v) throw GraphError(edge_location(doc, i) + ": loop at vertex " + std::to_string(u));
    if (!seen.emplace(u, v).second) {
      throw GraphError(edge_location(doc, i) + ": duplicate edge " + std::to_string(u) + " " +
                       std::to_string(v));
    }
    edges.emplace_back(u, v);
  }
  return Graph(doc.n, edges);
}

EdgeListDoc to_edge_list(const Graph& g) {
  EdgeListDoc doc;
  doc.n = g.order();
  doc.m = g.size();
  for (const Edge& e : g.edges()) doc.edges.emplace_back(e.u, e.v);
  return doc;
}

EdgeListDoc parse_edge_list(std::istream& in) {
  EdgeListDoc doc;
  bool have_header = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    long a = 0;
    long b = 0;
    if (!(fields >> a)) {
      std::string rest;
      fields.clear();
      if (fields >> rest) throw ParseError("line " + std::to_string(lineno) + ": expected two integers", lineno);
      continue;  // blank or comment-only
    }
    std::string extra;
    if (!(fields >> b) || (fields >> extra)) {
      throw ParseError("line " + std::to_string(lineno) + ": expected exactly two integers", lineno);
    }
    if (!have_header) {
      if (a < 0 || a > kMaxVertices || b < 0) {
        throw ParseError("line " + std::to_string(lineno) + ": bad header", lineno);
      }
      doc.n = static_cast<int>(a);
      doc.m = static_cast<int>(b);
      have_header = true;
      continue;
    }
    if (a < 0 || a >= doc.n || b < 0 || b >= doc.n) {
      throw ParseError("line " + std::to_string(lineno) + ": vertex out of range [0, " +
                           std::to_string(doc.n) + ")",
                       lineno);
    }
    doc.edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    doc.lines.push_back(lineno);
  }
  if (!have_header) throw ParseError("missing \"n m\" header", static_cast<std::size_t>(lineno));
  if (static_cast<std::size_t>(doc.m) != doc.edges.size()) {
    throw ParseError("header declares " + std::to_string(doc.m) + " edges but file has " +
                         std::to_string(doc.edges.size()),
                     static_cast<std::size_t>(lineno));
  }
  return doc;
}

EdgeListDoc parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

std::string format_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

Graph parse_graph6(std::string_view line) {
  std::size_t base = 0;
  if (line.starts_with(kGraph6Header)) base = kGraph6Header.size();
  std::string_view body = line.substr(base);
  if (body.empty()) throw ParseError("empty graph6 line", base);

  auto check_byte = [&](std::size_t i) {
    auto c = static_cast<unsigned char>(body[i]);
    if (c < 63 || c > 126) {
      throw ParseError("byte " + std::to_string(base + i) + ": character outside 63..126",
                       base + i);
    }
    return static_cast<int>(c) - 63;
  };

  const int n = check_byte(0);
  if (n == 63) throw ParseError("byte " + std::to_string(base) + ": graphs above 62 vertices are unsupported", base);

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t expected = 1 + (bits + 5) / 6;
  for (std::size_t i = 1; i < std::min(body.size(), expected); ++i) check_byte(i);
  if (body.size() < expected) {
    throw ParseError("byte " + std::to_string(base + body.size()) + ": truncated, expected " +
                         std::to_string(expected) + " bytes",
                     base + body.size());
  }
  if (body.size() > expected) {
    throw ParseError("byte " + std::to_string(base + expected) + ": trailing garbage", base + expected);
  }

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int chunk = body[1 + k / 6] - 63;
      if ((chunk >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (bits % 6 != 0) {
    int last = body[expected - 1] - 63;
    int pad_mask = (1 << (6 - bits % 6)) - 1;
    if (last & pad_mask) {
      throw ParseError("byte " + std::to_string(base + expected - 1) + ": nonzero padding bits",
                       base + expected - 1);
    }
  }
  return Graph(n, edges);
}

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxGraph6Vertices) {
    throw GraphError("graph6 encoding supports at most 62 vertices, got " + std::to_string(n));
  }
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::string out(1 + (bits + 5) / 6, '\0');
  out[0] = static_cast<char>(63 + n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (g.has_edge(i, j)) out[1 + k / 6] = static_cast<char>(out[1 + k / 6] | (1 << (5 - k % 6)));
    }
  }
  for (std::size_t i = 1; i < out.size(); ++i) out[i] = static_cast<char>(out[i] + 63);
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet s) {
  if (!s.is_subset_of(g.vertices())) throw GraphError("vertex set not contained in the graph");
  InducedSubgraph result;
  result.original = s.to_vector();
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < result.original.size(); ++i) index[result.original[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (s.contains(e.u) && s.contains(e.v)) edges.emplace_back(index[e.u], index[e.v]);
  }
  result.graph = Graph(s.size(), edges);
  return result;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
  VertexSet set;
  for (Vertex v : s) {
    if (!g.has_vertex(v)) throw GraphError("vertex " + std::to_string(v) + " out of range");
    set.insert(v);
  }
  return induced_subgraph(g, set);
}

Graph delete_edge(const Graph& g, Edge e) {
  if (!g.has_vertex(e.u) || !g.has_vertex(e.v) || !g.has_edge(e.u, e.v)) {
    throw GraphError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) + ") not present");
  }
  std::vector<Edge> edges = g.edges();
  std::erase(edges, e);
  return Graph(g.order(), edges);
}

DegreeStats degree_stats(const Graph& g) {
  DegreeStats stats;
  for (Vertex v = 0; v < g.order(); ++v) stats.sequence.push_back(g.degree(v));
  std::ranges::sort(stats.sequence);
  if (!stats.sequence.empty()) {
    stats.min_degree = stats.sequence.front();
    stats.max_degree = stats.sequence.back();
  }
  return stats;
}

bool is_complete(const Graph& g) {
  const long n = g.order();
  return g.size() == n * (n - 1) / 2;
}

bool has_triangle(const Graph& g) {
  for (const Edge& e : g.edges()) {
    if (!(g.neighbors(e.u) & g.neighbors(e.v)).empty()) return true;
  }
  return false;
}

}  // namespace cyclespec
