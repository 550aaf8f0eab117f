#include "cyclespec/decomposition.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace cyclespec {

namespace {

int induced_edge_count(const Graph& g, VertexSet s) {
  int twice = 0;
  for (Vertex v : s) twice += (g.neighbors(v) & s).size();
  return twice / 2;
}

// Hopcroft-Tarjan biconnected components of G[allowed].
std::vector<VertexSet> blocks_within(const Graph& g, VertexSet allowed) {
  const int n = g.order();
  std::vector<int> disc(static_cast<std::size_t>(n), 0);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<Edge> stack;
  std::vector<VertexSet> blocks;
  int clock = 0;

  std::function<void(Vertex, Vertex)> dfs = [&](Vertex u, Vertex parent) {
    disc[u] = low[u] = ++clock;
    for (Vertex w : g.neighbors(u) & allowed) {
      if (disc[w] == 0) {
        stack.emplace_back(u, w);
        dfs(w, u);
        low[u] = std::min(low[u], low[w]);
        if (low[w] >= disc[u]) {
          VertexSet block;
          const Edge top(u, w);
          while (true) {
            Edge e = stack.back();
            stack.pop_back();
            block.insert(e.u);
            block.insert(e.v);
            if (e == top) break;
          }
          blocks.push_back(block);
        }
      } else if (w != parent && disc[w] < disc[u]) {
        stack.emplace_back(u, w);
        low[u] = std::min(low[u], disc[w]);
      }
    }
  };

  for (Vertex r : allowed) {
    if (disc[r] != 0) continue;
    if ((g.neighbors(r) & allowed).empty()) {
      disc[r] = ++clock;
      blocks.push_back(VertexSet{r});
      continue;
    }
    dfs(r, -1);
  }
  std::ranges::sort(blocks, [](VertexSet x, VertexSet y) { return x.to_vector() < y.to_vector(); });
  return blocks;
}

// BFS over G[allowed] from each component's smallest vertex; parent is the
// first discoverer.
struct BfsForest {
  std::vector<int> depth;
  std::vector<Vertex> parent;
};

BfsForest bfs_forest(const Graph& g, VertexSet allowed) {
  const auto n = static_cast<std::size_t>(g.order());
  BfsForest f{std::vector<int>(n, -1), std::vector<Vertex>(n, -1)};
  for (Vertex r : allowed) {
    if (f.depth[r] >= 0) continue;
    f.depth[r] = 0;
    std::deque<Vertex> queue{r};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u) & allowed) {
        if (f.depth[w] < 0) {
          f.depth[w] = f.depth[u] + 1;
          f.parent[w] = u;
          queue.push_back(w);
        }
      }
    }
  }
  return f;
}

// Vertices from a up to the common ancestor and down to b.
std::vector<Vertex> forest_path(const BfsForest& f, Vertex a, Vertex b) {
  std::vector<Vertex> up;
  std::vector<Vertex> down;
  while (f.depth[a] > f.depth[b]) {
    up.push_back(a);
    a = f.parent[a];
  }
  while (f.depth[b] > f.depth[a]) {
    down.push_back(b);
    b = f.parent[b];
  }
  while (a != b) {
    up.push_back(a);
    down.push_back(b);
    a = f.parent[a];
    b = f.parent[b];
  }
  up.push_back(a);
  up.insert(up.end(), down.rbegin(), down.rend());
  return up;
}

std::vector<Vertex> bfs_path_within(const Graph& g, VertexSet allowed, Vertex from, Vertex to) {
  std::vector<Vertex> prev(static_cast<std::size_t>(g.order()), -1);
  VertexSet seen{from};
  std::deque<Vertex> queue{from};
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    if (u == to) break;
    for (Vertex w : (g.neighbors(u) & allowed) - seen) {
      seen.insert(w);
      prev[w] = u;
      queue.push_back(w);
    }
  }
  std::vector<Vertex> path;
  for (Vertex v = to; v != -1; v = prev[v]) path.push_back(v);
  std::ranges::reverse(path);
  return path;
}

}  // namespace

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet unseen = g.vertices();
  while (!unseen.empty()) {
    VertexSet comp{unseen.front()};
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (Vertex v : frontier) next |= g.neighbors(v);
      next -= comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    unseen -= comp;
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_two_connected(const Graph& g) {
  if (g.order() < 3 || !is_connected(g)) return false;
  return blocks_within(g, g.vertices()).size() == 1;
}

std::vector<std::size_t> BlockCutTree::end_blocks() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (incidence[i].size() <= 1) out.push_back(i);
  }
  return out;
}

BlockCutTree block_cut_tree(const Graph& g) {
  BlockCutTree tree;
  tree.blocks = blocks_within(g, g.vertices());
  VertexSet seen_once;
  for (VertexSet b : tree.blocks) {
    tree.cut_vertices |= seen_once & b;
    seen_once |= b;
  }
  for (VertexSet b : tree.blocks) tree.incidence.push_back(b & tree.cut_vertices);
  return tree;
}

BfsLayering bfs_layering(const Graph& g, Vertex r) {
  if (!g.has_vertex(r)) throw GraphError("root " + std::to_string(r) + " not in graph");
  const auto n = static_cast<std::size_t>(g.order());
  BfsLayering l;
  l.root = r;
  l.depth.assign(n, -1);
  l.parent.assign(n, -1);
  l.depth[r] = 0;
  VertexSet seen{r};
  VertexSet frontier{r};
  while (!frontier.empty()) {
    l.layers.push_back(frontier);
    VertexSet next;
    for (Vertex v : frontier) next |= g.neighbors(v);
    next -= seen;
    for (Vertex v : next) {
      l.depth[v] = static_cast<int>(l.layers.size());
      l.parent[v] = (g.neighbors(v) & frontier).front();
    }
    seen |= next;
    frontier = next;
  }
  VertexSet unreachable = g.vertices() - seen;
  if (!unreachable.empty()) {
    throw GraphError("graph is disconnected: vertex " + std::to_string(unreachable.front()) +
                     " unreachable from " + std::to_string(r));
  }
  return l;
}

Path tree_path(const BfsLayering& layering, Vertex a, Vertex b) {
  BfsForest f{layering.depth, layering.parent};
  return Path{forest_path(f, a, b)};
}

BipartitionResult bipartition(const Graph& g) {
  BfsForest f = bfs_forest(g, g.vertices());
  for (const Edge& e : g.edges()) {
    if (f.depth[e.u] % 2 == f.depth[e.v] % 2) {
      return {std::nullopt, canonical_cycle(forest_path(f, e.u, e.v))};
    }
  }
  Bipartition parts;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (f.depth[v] % 2 == 0) parts.a.insert(v);
    else parts.b.insert(v);
  }
  return {parts, std::nullopt};
}

bool is_bipartite(const Graph& g) { return bipartition(g).parts.has_value(); }

GoodBadPartition good_bad_partition(const Graph& g) {
  if (!is_connected(g)) throw GraphError("good/bad partition needs a connected graph");
  BlockCutTree tree = block_cut_tree(g);
  const std::vector<Vertex> cuts = tree.cut_vertices.to_vector();
  const std::size_t nb = tree.blocks.size();

  // Nodes 0..nb-1 are blocks, nb.. are cut vertices. Peel non-terminal leaves
  // until only the Steiner subtree spanning the 2-connected blocks remains.
  std::vector<std::vector<std::size_t>> adj(nb + cuts.size());
  for (std::size_t i = 0; i < nb; ++i) {
    for (std::size_t c = 0; c < cuts.size(); ++c) {
      if (tree.incidence[i].contains(cuts[c])) {
        adj[i].push_back(nb + c);
        adj[nb + c].push_back(i);
      }
    }
  }
  std::vector<bool> terminal(adj.size(), false);
  for (std::size_t i = 0; i < nb; ++i) terminal[i] = tree.blocks[i].size() >= 3;
  std::vector<bool> alive(adj.size(), true);
  std::vector<int> degree(adj.size());
  for (std::size_t i = 0; i < adj.size(); ++i) degree[i] = static_cast<int>(adj[i].size());
  std::vector<std::size_t> leaves;
  for (std::size_t i = 0; i < adj.size(); ++i) {
    if (degree[i] <= 1 && !terminal[i]) leaves.push_back(i);
  }
  while (!leaves.empty()) {
    std::size_t x = leaves.back();
    leaves.pop_back();
    if (!alive[x]) continue;
    alive[x] = false;
    for (std::size_t y : adj[x]) {
      if (alive[y] && --degree[y] <= 1 && !terminal[y]) leaves.push_back(y);
    }
  }
  GoodBadPartition part;
  for (std::size_t i = 0; i < nb; ++i) {
    if (alive[i]) part.bad |= tree.blocks[i];
  }
  part.good = g.vertices() - part.bad;
  return part;
}

std::optional<ThetaSubgraph> find_theta_subgraph(const Graph& g) {
  for (VertexSet block : blocks_within(g, g.vertices())) {
    if (block.size() < 3 || induced_edge_count(g, block) <= block.size()) continue;

    // Any cycle of the block: a non-tree edge closes one.
    BfsForest f = bfs_forest(g, block);
    std::vector<Vertex> cycle;
    for (Vertex u : block) {
      for (Vertex w : g.neighbors(u) & block) {
        if (u < w && f.parent[u] != w && f.parent[w] != u) {
          cycle = forest_path(f, u, w);
          break;
        }
      }
      if (!cycle.empty()) break;
    }
    const VertexSet on_cycle = VertexSet::of(cycle);
    const auto len = cycle.size();
    auto cycle_adjacent = [&](Vertex a, Vertex b) {
      auto ia = std::ranges::find(cycle, a) - cycle.begin();
      auto ib = std::ranges::find(cycle, b) - cycle.begin();
      auto d = static_cast<std::size_t>(std::abs(ia - ib));
      return d == 1 || d == len - 1;
    };

    // An ear: a chord, or a detour through the rest of the block.
    std::vector<Vertex> ear;
    for (Vertex a : cycle) {
      for (Vertex b : g.neighbors(a) & on_cycle) {
        if (a < b && !cycle_adjacent(a, b)) {
          ear = {a, b};
          break;
        }
      }
      if (!ear.empty()) break;
    }
    if (ear.empty()) {
      const VertexSet outside = block - on_cycle;
      Vertex x = -1;
      for (Vertex v : outside) {
        if (!(g.neighbors(v) & on_cycle).empty()) {
          x = v;
          break;
        }
      }
      const Vertex a = (g.neighbors(x) & on_cycle).front();
      // Component of x inside the block minus the cycle.
      VertexSet comp{x};
      VertexSet frontier{x};
      while (!frontier.empty()) {
        VertexSet next;
        for (Vertex v : frontier) next |= g.neighbors(v) & outside;
        next -= comp;
        comp |= next;
        frontier = next;
      }
      for (Vertex y : comp) {
        VertexSet others = (g.neighbors(y) & on_cycle) - VertexSet{a};
        if (others.empty()) continue;
        ear.push_back(a);
        for (Vertex v : bfs_path_within(g, comp, x, y)) ear.push_back(v);
        ear.push_back(others.front());
        break;
      }
    }

    ThetaSubgraph theta;
    theta.u = ear.front();
    theta.v = ear.back();
    auto iu = static_cast<std::size_t>(std::ranges::find(cycle, theta.u) - cycle.begin());
    auto iv = static_cast<std::size_t>(std::ranges::find(cycle, theta.v) - cycle.begin());
    std::vector<Vertex> forward;
    for (std::size_t i = iu;; i = (i + 1) % len) {
      forward.push_back(cycle[i]);
      if (i == iv) break;
    }
    std::vector<Vertex> backward;
    for (std::size_t i = iu;; i = (i + len - 1) % len) {
      backward.push_back(cycle[i]);
      if (i == iv) break;
    }
    theta.paths = {Path{forward}, Path{backward}, Path{ear}};
    return theta;
  }
  return std::nullopt;
}

bool is_valid_theta(const Graph& g, const ThetaSubgraph& theta) {
  if (theta.u == theta.v) return false;
  int single_edges = 0;
  VertexSet interiors;
  for (const Path& p : theta.paths) {
    if (!is_valid_path(g, p) || p.front() != theta.u || p.back() != theta.v) return false;
    if (p.length() == 1) ++single_edges;
    for (std::size_t i = 1; i + 1 < p.vertices.size(); ++i) {
      if (interiors.contains(p.vertices[i])) return false;
      interiors.insert(p.vertices[i]);
    }
  }
  return single_edges <= 1;
}

bool has_even_cycle(const Graph& g, VertexSet allowed) {
  for (VertexSet block : blocks_within(g, allowed)) {
    if (block.size() < 3) continue;
    if (induced_edge_count(g, block) > block.size() || block.size() % 2 == 0) return true;
  }
  return false;
}

}  // namespace cyclespec
