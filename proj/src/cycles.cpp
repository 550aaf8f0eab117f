#include "cyclespec/cycles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <functional>
#include <unordered_set>

#include "cyclespec/decomposition.hpp"

namespace cyclespec {

namespace {

// Subset DP tables index 2^(k-1) masks of 32-bit end sets.
constexpr int kMaxDpVertices = 30;

struct Compressed {
  std::vector<Vertex> label;        // compressed index -> vertex
  std::vector<std::uint32_t> adj;   // compressed adjacency
};

Compressed compress(const Graph& g, VertexSet members) {
  Compressed c{members.to_vector(), {}};
  c.adj.assign(c.label.size(), 0);
  for (std::size_t i = 0; i < c.label.size(); ++i) {
    for (std::size_t j = 0; j < c.label.size(); ++j) {
      if (g.has_edge(c.label[i], c.label[j])) c.adj[i] |= std::uint32_t{1} << j;
    }
  }
  return c;
}

std::uint32_t compressed_neighbors(const Graph& g, const Compressed& c, Vertex v) {
  std::uint32_t out = 0;
  for (std::size_t i = 0; i < c.label.size(); ++i) {
    if (g.has_edge(v, c.label[i])) out |= std::uint32_t{1} << i;
  }
  return out;
}

// dp[sub] holds the compressed vertices at which some path from the anchor can
// end after visiting exactly `sub`. Walks back from (sub, end) to the anchor.
std::vector<Vertex> unwind(const std::vector<std::uint32_t>& dp, const Compressed& c,
                           std::uint32_t sub, int end) {
  std::vector<Vertex> rev{c.label[end]};
  int cur = end;
  while (std::popcount(sub) > 1) {
    const std::uint32_t prev = sub & ~(std::uint32_t{1} << cur);
    const int next = std::countr_zero(dp[prev] & c.adj[cur]);
    rev.push_back(c.label[next]);
    cur = next;
    sub = prev;
  }
  return rev;
}

void extend(std::vector<std::uint32_t>& dp, const Compressed& c, std::uint32_t sub) {
  for (std::uint32_t ends = dp[sub]; ends != 0; ends &= ends - 1) {
    const int i = std::countr_zero(ends);
    for (std::uint32_t ext = c.adj[i] & ~sub; ext != 0; ext &= ext - 1) {
      const std::uint32_t bit = ext & (~ext + 1);
      dp[sub | bit] |= bit;
    }
  }
}

}  // namespace

CycleEnumeration enumerate_cycles(const Graph& g, std::size_t cap) {
  CycleEnumeration out;
  if (cap == 0) cap = 1;
  std::vector<Vertex> path;
  bool stop = false;

  std::function<void(Vertex, VertexSet, VertexSet)> dfs = [&](Vertex s, VertexSet higher,
                                                              VertexSet on_path) {
    const Vertex u = path.back();
    if (path.size() >= 3 && g.has_edge(u, s) && path[1] < u) {
      if (out.cycles.size() == cap) {
        out.truncated = true;
        stop = true;
        return;
      }
      out.cycles.push_back(Cycle{path});
    }
    for (Vertex w : (g.neighbors(u) & higher) - on_path) {
      path.push_back(w);
      on_path.insert(w);
      dfs(s, higher, on_path);
      on_path.erase(w);
      path.pop_back();
      if (stop) return;
    }
  };

  for (Vertex s = 0; s < g.order() && !stop; ++s) {
    path = {s};
    dfs(s, g.vertices() - VertexSet::range(s + 1), VertexSet{s});
  }
  return out;
}

std::set<int> CycleLengths::lengths() const {
  std::set<int> out;
  for (const auto& [len, _] : witnesses) out.insert(len);
  return out;
}

CycleLengths cycle_lengths_within(const Graph& g, VertexSet allowed) {
  if (allowed.size() > kMaxDpVertices) throw SizeLimitError(allowed.size(), kMaxDpVertices);
  CycleLengths out;
  const int possible = allowed.size() - 2;  // lengths 3..|allowed|
  std::vector<std::uint32_t> dp;
  for (Vertex s : allowed) {
    if (static_cast<int>(out.witnesses.size()) == possible) break;
    const Compressed c = compress(g, allowed - VertexSet::range(s + 1));
    const auto m = static_cast<int>(c.label.size());
    const std::uint32_t start = compressed_neighbors(g, c, s);
    if (m < 2 || std::popcount(start) < 2) continue;

    dp.assign(std::size_t{1} << m, 0);
    for (std::uint32_t rest = start; rest != 0; rest &= rest - 1) {
      const std::uint32_t bit = rest & (~rest + 1);
      dp[bit] = bit;
    }
    const std::uint64_t full = std::uint64_t{1} << m;
    for (std::uint64_t sub64 = 1; sub64 < full; ++sub64) {
      const auto sub = static_cast<std::uint32_t>(sub64);
      const std::uint32_t ends = dp[sub];
      if (ends == 0) continue;
      const int len = std::popcount(sub) + 1;
      if (len >= 3 && (ends & start) != 0 && !out.witnesses.contains(len)) {
        std::vector<Vertex> walk = unwind(dp, c, sub, std::countr_zero(ends & start));
        walk.push_back(s);
        out.witnesses.emplace(len, canonical_cycle(std::move(walk)));
      }
      extend(dp, c, sub);
    }
  }
  return out;
}

CycleLengths cycle_length_set(const Graph& g, int limit) {
  require_within_limit(g.order(), limit);
  return cycle_lengths_within(g, g.vertices());
}

SpectrumReport cycle_spectrum_mod(const Graph& g, int k, int limit) {
  if (k < 2) throw GraphError("modulus must be at least 2, got " + std::to_string(k));
  const CycleLengths lengths = cycle_length_set(g, limit);
  SpectrumReport report;
  report.modulus = k;
  for (const auto& [len, cycle] : lengths.witnesses) {
    report.lengths_seen.insert(len);
    report.present.try_emplace(len % k, cycle);  // ascending, so the first is shortest
  }
  for (int r = 0; r < k; ++r) {
    if (!report.present.contains(r)) report.missing.insert(r);
  }
  return report;
}

CycleExtremes cycle_extremes(const Graph& g, int limit) {
  const std::set<int> lengths = cycle_length_set(g, limit).lengths();
  if (lengths.empty()) return {};
  return {*lengths.begin(), *lengths.rbegin()};
}

std::optional<Cycle> shortest_odd_cycle(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  std::optional<Cycle> best;
  std::vector<int> dist(n);
  std::vector<Vertex> parent(n);
  for (Vertex r = 0; r < g.order(); ++r) {
    std::ranges::fill(dist, -1);
    std::ranges::fill(parent, -1);
    dist[r] = 0;
    std::deque<Vertex> queue{r};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        }
      }
    }
    for (const Edge& e : g.edges()) {
      if (dist[e.u] < 0 || dist[e.u] != dist[e.v]) continue;
      if (best && 2 * dist[e.u] + 1 >= best->length()) continue;
      // Trim the two tree branches to their meeting point.
      std::vector<Vertex> left{e.u};
      std::vector<Vertex> right{e.v};
      Vertex a = e.u;
      Vertex b = e.v;
      while (parent[a] != parent[b]) {
        a = parent[a];
        b = parent[b];
        left.push_back(a);
        right.push_back(b);
      }
      left.push_back(parent[a]);
      left.insert(left.end(), right.rbegin(), right.rend());
      best = canonical_cycle(std::move(left));
    }
  }
  return best;
}

ConsecutiveRun longest_consecutive_run(const Graph& g, int limit) {
  const std::set<int> lengths = cycle_length_set(g, limit).lengths();
  ConsecutiveRun best;
  ConsecutiveRun current;
  for (int len : lengths) {
    if (current.size > 0 && len == current.start + current.size) {
      ++current.size;
    } else {
      current = {len, 1};
    }
    if (current.size > best.size) best = current;
  }
  return best;
}

bool is_opposite_pair(const Graph& g, const Cycle& c, const Cycle& d) {
  if (!is_valid_cycle(g, c) || !is_valid_cycle(g, d)) return false;
  if (c.length() % 2 == d.length() % 2) return false;
  if ((c.vertex_set() & d.vertex_set()).size() > 1) return false;
  std::vector<Edge> ce = c.edges();
  std::ranges::sort(ce);
  for (const Edge& e : d.edges()) {
    if (std::ranges::binary_search(ce, e)) return false;
  }
  return true;
}

std::optional<OppositePair> find_opposite_pair(const Graph& g, int limit) {
  require_within_limit(g.order(), limit);
  const VertexSet all = g.vertices();
  std::unordered_set<std::uint64_t> tried;
  std::optional<OppositePair> found;
  std::vector<Vertex> path;

  // Returns the shortest even cycle sharing at most one vertex with `odd`.
  auto partner = [&](const Cycle& odd) -> std::optional<Cycle> {
    const VertexSet used = odd.vertex_set();
    std::vector<VertexSet> candidates{all - used};
    for (Vertex c : odd.vertices) candidates.push_back((all - used) | VertexSet{c});
    std::ranges::sort(candidates.begin() + 1, candidates.end());
    std::optional<Cycle> best;
    for (VertexSet allowed : candidates) {
      if (!has_even_cycle(g, allowed)) continue;
      for (const auto& [len, cycle] : cycle_lengths_within(g, allowed).witnesses) {
        if (len % 2 != 0) continue;
        if (!best || len < best->length()) best = cycle;
        break;
      }
    }
    return best;
  };

  // Canonical cycles of exactly `target` vertices through anchor s.
  std::function<void(Vertex, int, VertexSet, VertexSet)> dfs = [&](Vertex s, int target,
                                                                   VertexSet higher,
                                                                   VertexSet on_path) {
    const Vertex u = path.back();
    if (static_cast<int>(path.size()) == target) {
      if (!g.has_edge(u, s) || path[1] > u) return;
      if (!tried.insert(on_path.bits()).second) return;
      Cycle odd{path};
      if (auto even = partner(odd)) found = OppositePair{std::move(odd), std::move(*even)};
      return;
    }
    for (Vertex w : (g.neighbors(u) & higher) - on_path) {
      path.push_back(w);
      dfs(s, target, higher, on_path | VertexSet{w});
      path.pop_back();
      if (found) return;
    }
  };

  for (int len = 3; len <= g.order() - 3 && !found; len += 2) {
    for (Vertex s = 0; s < g.order() && !found; ++s) {
      path = {s};
      dfs(s, len, all - VertexSet::range(s + 1), VertexSet{s});
    }
  }
  return found;
}

std::map<int, Path> ab_path_length_spectrum(const Graph& g, VertexSet a, VertexSet b, int limit) {
  require_within_limit(g.order(), limit);
  if (a.empty() || b.empty() || !(a & b).empty() || (a | b) != g.vertices()) {
    throw GraphError("(A, B) is not a non-trivial partition of the vertex set");
  }
  std::map<int, Path> out;
  const int possible = g.order() - 1;
  std::vector<std::uint32_t> dp;
  for (Vertex s : a) {
    if (static_cast<int>(out.size()) == possible) break;
    const Compressed c = compress(g, g.vertices() - VertexSet{s});
    const auto m = static_cast<int>(c.label.size());
    std::uint32_t targets = 0;
    for (int i = 0; i < m; ++i) {
      if (b.contains(c.label[i])) targets |= std::uint32_t{1} << i;
    }
    const std::uint32_t start = compressed_neighbors(g, c, s);
    dp.assign(std::size_t{1} << m, 0);
    for (std::uint32_t rest = start; rest != 0; rest &= rest - 1) {
      const std::uint32_t bit = rest & (~rest + 1);
      dp[bit] = bit;
    }
    const std::uint64_t full = std::uint64_t{1} << m;
    for (std::uint64_t sub64 = 1; sub64 < full; ++sub64) {
      const auto sub = static_cast<std::uint32_t>(sub64);
      const std::uint32_t ends = dp[sub];
      if (ends == 0) continue;
      const int len = std::popcount(sub);
      if ((ends & targets) != 0 && !out.contains(len)) {
        std::vector<Vertex> walk = unwind(dp, c, sub, std::countr_zero(ends & targets));
        walk.push_back(s);
        std::ranges::reverse(walk);
        out.emplace(len, Path{std::move(walk)});
      }
      extend(dp, c, sub);
    }
  }
  return out;
}

}  // namespace cyclespec
