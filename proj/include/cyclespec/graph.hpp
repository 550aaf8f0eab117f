#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cyclespec {

using Vertex = int;

/// Hard ceiling on graph order; adjacency rows are 64-bit masks.
inline constexpr int kMaxVertices = 64;

/// Largest order graph6 can express with the one-byte size header.
inline constexpr int kMaxGraph6Vertices = 62;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A malformed graph6 line or edge-list file. `position` is a byte offset for
/// graph6 and a 1-based line number for edge lists.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Raised by verdict-bearing operations when the input exceeds the exactness
/// limit. These operations never approximate.
class SizeLimitError : public std::runtime_error {
 public:
  SizeLimitError(int order, int limit);
  int order() const { return order_; }
  int limit() const { return limit_; }

 private:
  int order_;
  int limit_;
};

/// Default exactness limit (16), or the value of CYCLESPEC_LIMIT when set.
int exactness_limit();

/// Throws SizeLimitError when order > limit.
void require_within_limit(int order, int limit);

/// Set of vertices in [0, 64) backed by a bit mask. Iterates ascending.
class VertexSet {
 public:
  class iterator {
   public:
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    explicit iterator(std::uint64_t rest) : rest_(rest) {}
    Vertex operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<Vertex> vs) {
    for (Vertex v : vs) insert(v);
  }

  /// {0, ..., n-1}
  static VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static VertexSet of(std::span<const Vertex> vs) {
    VertexSet s;
    for (Vertex v : vs) s.insert(v);
    return s;
  }

  bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
  void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
  void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }
  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  /// Smallest member; undefined on an empty set.
  Vertex front() const { return std::countr_zero(bits_); }
  std::uint64_t bits() const { return bits_; }
  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  VertexSet& operator&=(VertexSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  VertexSet& operator-=(VertexSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }
  bool is_subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  bool operator==(const VertexSet&) const = default;
  auto operator<=>(const VertexSet& o) const { return bits_ <=> o.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

/// Unordered edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}
  bool operator==(const Edge&) const = default;
  auto operator<=>(const Edge&) const = default;
};

/// Parsed edge-list document. `lines` holds the source line of each edge when
/// the document came from text, so validation errors can point at it.
struct EdgeListDoc {
  int n = 0;
  int m = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<int> lines;
};

/// Finite simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(int n);
  /// Throws GraphError on loops, duplicates or out-of-range endpoints.
  Graph(int n, std::span<const Edge> edges);

  int order() const { return n_; }
  int size() const { return m_; }
  VertexSet vertices() const { return VertexSet::range(n_); }
  VertexSet neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return adj_[v].size(); }
  bool has_edge(Vertex u, Vertex v) const { return adj_[u].contains(v); }
  bool has_vertex(Vertex v) const { return v >= 0 && v < n_; }
  /// Edges sorted lexicographically with u < v.
  std::vector<Edge> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<VertexSet> adj_;
};

Graph from_edge_list(const EdgeListDoc& doc);
EdgeListDoc to_edge_list(const Graph& g);

/// Reads the "n m" header format with '#' comments. Throws ParseError naming
/// the line.
EdgeListDoc parse_edge_list(std::istream& in);
EdgeListDoc parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g);

/// Decodes one graph6 line. A leading ">>graph6<<" header is skipped.
Graph parse_graph6(std::string_view line);
std::string encode_graph6(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  /// original[i] is the vertex of the parent graph relabelled to i.
  std::vector<Vertex> original;
};

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s);
InducedSubgraph induced_subgraph(const Graph& g, VertexSet s);

/// Copy of g without e. Throws GraphError when e is absent.
Graph delete_edge(const Graph& g, Edge e);

struct DegreeStats {
  int min_degree = 0;
  int max_degree = 0;
  std::vector<int> sequence;  // ascending
};

DegreeStats degree_stats(const Graph& g);

bool is_complete(const Graph& g);
bool has_triangle(const Graph& g);

}  // namespace cyclespec
