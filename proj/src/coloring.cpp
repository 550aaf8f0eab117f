#include "cyclespec/coloring.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <deque>
#include <functional>
#include <stdexcept>

namespace cyclespec {

namespace {

int greedy_clique_bound(const Graph& g) {
  int best = g.order() > 0 ? 1 : 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    VertexSet clique{s};
    VertexSet candidates = g.neighbors(s);
    while (!candidates.empty()) {
      // Keep the candidate with the most neighbours among the rest.
      Vertex pick = candidates.front();
      int score = -1;
      for (Vertex v : candidates) {
        int here = (g.neighbors(v) & candidates).size();
        if (here > score) {
          score = here;
          pick = v;
        }
      }
      clique.insert(pick);
      candidates &= g.neighbors(pick);
    }
    best = std::max(best, clique.size());
  }
  return best;
}

class DsaturSearch {
 public:
  explicit DsaturSearch(const Graph& g)
      : g_(g),
        n_(g.order()),
        color_(static_cast<std::size_t>(n_), 0),
        seen_(static_cast<std::size_t>(n_) * (n_ + 2), 0),
        saturation_(static_cast<std::size_t>(n_), 0) {}

  ChromaticResult run() {
    if (n_ == 0) return {0, Coloring{{}, 0}};
    lower_ = greedy_clique_bound(g_);
    best_ = n_ + 1;
    search(0, 0);
    return {best_, Coloring{best_colors_, best_}};
  }

 private:
  int& seen(Vertex v, int c) { return seen_[static_cast<std::size_t>(v) * (n_ + 2) + c]; }

  void assign(Vertex v, int c, int delta) {
    for (Vertex w : g_.neighbors(v)) {
      int& count = seen(w, c);
      if (delta > 0 && count++ == 0) ++saturation_[w];
      if (delta < 0 && --count == 0) --saturation_[w];
    }
    color_[v] = delta > 0 ? c : 0;
  }

  Vertex pick() const {
    Vertex best = -1;
    int best_sat = -1;
    int best_deg = -1;
    for (Vertex v = 0; v < n_; ++v) {
      if (color_[v] != 0) continue;
      int deg = 0;
      for (Vertex w : g_.neighbors(v)) deg += color_[w] == 0;
      if (saturation_[v] > best_sat || (saturation_[v] == best_sat && deg > best_deg)) {
        best = v;
        best_sat = saturation_[v];
        best_deg = deg;
      }
    }
    return best;
  }

  void search(int colored, int used) {
    if (best_ == lower_ || used >= best_) return;
    if (colored == n_) {
      best_ = used;
      best_colors_ = color_;
      return;
    }
    const Vertex v = pick();
    const int top = std::min(used + 1, best_ - 1);
    for (int c = 1; c <= top; ++c) {
      if (seen(v, c) != 0) continue;
      assign(v, c, +1);
      search(colored + 1, std::max(used, c));
      assign(v, c, -1);
      if (best_ == lower_) return;
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> color_;
  std::vector<int> seen_;
  std::vector<int> saturation_;
  std::vector<int> best_colors_;
  int lower_ = 0;
  int best_ = 0;
};

void two_color_from(const Graph& g, VertexSet members, int low, int high, std::vector<int>& colors) {
  for (Vertex r : members) {
    if (colors[r] != 0) continue;
    colors[r] = low;
    std::deque<Vertex> queue{r};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u) & members) {
        if (colors[w] == 0) {
          colors[w] = colors[u] == low ? high : low;
          queue.push_back(w);
        }
      }
    }
  }
}

}  // namespace

std::string to_string(ConflictKind kind) {
  switch (kind) {
    case ConflictKind::kLayerComponentOverflow:
      return "layer-component-chromatic-overflow";
    case ConflictKind::kGoodBadAdjacency:
      return "good-bad-adjacency";
    case ConflictKind::kConstrainedInfeasible:
      return "constrained-coloring-infeasible";
  }
  return "unknown";
}

int Coloring::colors_used() const {
  std::vector<int> sorted = colors;
  std::ranges::sort(sorted);
  return static_cast<int>(std::ranges::unique(sorted).begin() - sorted.begin());
}

bool is_proper(const Graph& g, const Coloring& c) {
  if (static_cast<int>(c.colors.size()) != g.order()) return false;
  for (int col : c.colors) {
    if (col < 1 || col > c.palette) return false;
  }
  for (const Edge& e : g.edges()) {
    if (c.color(e.u) == c.color(e.v)) return false;
  }
  return true;
}

ChromaticResult chromatic_number(const Graph& g, int limit) {
  require_within_limit(g.order(), limit);
  return DsaturSearch(g).run();
}

std::optional<Coloring> find_coloring(const Graph& g, int palette) {
  const int n = g.order();
  std::vector<int> colors(static_cast<std::size_t>(n), 0);
  std::function<bool(Vertex)> place = [&](Vertex v) {
    if (v == n) return true;
    for (int c = 1; c <= palette; ++c) {
      bool clash = false;
      for (Vertex w : g.neighbors(v)) {
        if (w < v && colors[w] == c) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      colors[v] = c;
      if (place(v + 1)) return true;
    }
    colors[v] = 0;
    return false;
  };
  if (!place(0)) return std::nullopt;
  return Coloring{colors, palette};
}

CriticalityCertificate is_k_critical(const Graph& g, int k, int limit) {
  require_within_limit(g.order(), limit);
  CriticalityCertificate cert;
  ChromaticResult whole = chromatic_number(g, limit);
  cert.chi = whole.chi;
  cert.chi_witness = whole.witness;
  if (whole.chi != k) {
    cert.reason = "chromatic number is " + std::to_string(whole.chi) + ", not " + std::to_string(k);
    return cert;
  }
  if (g.order() > 1) {
    for (Vertex v = 0; v < g.order(); ++v) {
      if (g.degree(v) == 0) {
        cert.reason = "vertex " + std::to_string(v) + " is isolated";
        return cert;
      }
    }
  }
  for (const Edge& e : g.edges()) {
    ChromaticResult reduced = chromatic_number(delete_edge(g, e), limit);
    if (reduced.chi != k && reduced.chi != k - 1) {
      throw std::logic_error("edge deletion changed the chromatic number by more than one");
    }
    if (reduced.chi == k) {
      cert.failing_edge = e;
      cert.reason = "deleting edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                    " keeps the chromatic number at " + std::to_string(k);
      return cert;
    }
    cert.edge_colorings.push_back({e, reduced.witness});
  }
  cert.critical = true;
  return cert;
}

StructuralReport structural_criticality_check(const Graph& g, int k) {
  StructuralReport report;
  report.k = k;
  report.min_degree = degree_stats(g).min_degree;
  report.min_degree_ok = g.order() > 0 && report.min_degree >= k;
  report.two_connected = is_two_connected(g);
  return report;
}

ColoringOutcome constrained_three_coloring(const Graph& g, const GoodBadPartition& part) {
  if (!is_connected(g)) throw GraphError("constrained colouring needs a connected graph");
  if (part != good_bad_partition(g)) throw GraphError("partition does not belong to this graph");

  std::vector<int> colors(static_cast<std::size_t>(g.order()), 0);
  if (part.bad.empty()) {
    two_color_from(g, g.vertices(), 1, 2, colors);
    return Coloring{colors, 3};
  }

  InducedSubgraph core = induced_subgraph(g, part.bad);
  std::optional<Coloring> core_coloring = find_coloring(core.graph, 3);
  if (!core_coloring) {
    ConflictWitness w;
    w.kind = ConflictKind::kConstrainedInfeasible;
    w.location = core.original;
    w.chromatic_number = chromatic_number(core.graph, kMaxVertices).chi;
    w.detail = "bad core needs " + std::to_string(w.chromatic_number) +
               " colours; layer components must be 3-colourable";
    return w;
  }
  for (std::size_t i = 0; i < core.original.size(); ++i) {
    colors[core.original[i]] = core_coloring->colors[i];
  }

  // Good vertices hang off the core in trees; each sees one coloured vertex.
  std::deque<Vertex> queue(part.bad.begin(), part.bad.end());
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u) & part.good) {
      if (colors[w] != 0) continue;
      std::array<bool, 4> blocked{};
      for (Vertex x : g.neighbors(w)) blocked[static_cast<std::size_t>(colors[x])] = true;
      colors[w] = !blocked[1] ? 1 : 2;
      if (blocked[1] && blocked[2]) throw std::logic_error("good vertex attached twice to the core");
      queue.push_back(w);
    }
  }
  return Coloring{colors, 3};
}

ColoringOutcome layered_five_coloring(const Graph& g, Vertex r, int limit) {
  require_within_limit(g.order(), limit);
  const BfsLayering layering = bfs_layering(g, r);
  std::vector<int> colors(static_cast<std::size_t>(g.order()), 0);

  for (std::size_t i = 0; i < layering.layers.size(); ++i) {
    const bool odd = i % 2 == 1;
    InducedSubgraph layer = induced_subgraph(g, layering.layers[i]);
    for (VertexSet local : connected_components(layer.graph)) {
      InducedSubgraph comp = induced_subgraph(layer.graph, local);
      std::vector<Vertex> original;
      for (Vertex v : comp.original) original.push_back(layer.original[v]);

      if (is_bipartite(comp.graph)) {
        std::vector<int> local_colors(comp.original.size(), 0);
        two_color_from(comp.graph, comp.graph.vertices(), odd ? 4 : 1, odd ? 5 : 2, local_colors);
        for (std::size_t j = 0; j < original.size(); ++j) colors[original[j]] = local_colors[j];
        continue;
      }

      const int chi = chromatic_number(comp.graph, limit).chi;
      if (chi > 3) {
        ConflictWitness w;
        w.kind = ConflictKind::kLayerComponentOverflow;
        w.location = original;
        w.layer = static_cast<int>(i);
        w.chromatic_number = chi;
        w.detail = "component of G[L_" + std::to_string(i) + "] has chromatic number " +
                   std::to_string(chi) + " > 3";
        return w;
      }
      ColoringOutcome inner = constrained_three_coloring(comp.graph, good_bad_partition(comp.graph));
      if (auto* conflict = std::get_if<ConflictWitness>(&inner)) {
        conflict->layer = static_cast<int>(i);
        for (Vertex& v : conflict->location) v = original[v];
        return *conflict;
      }
      const Coloring& c = std::get<Coloring>(inner);
      for (std::size_t j = 0; j < original.size(); ++j) {
        int col = c.colors[j];
        if (odd && col != 3) col += 3;  // 1,2 -> 4,5
        colors[original[j]] = col;
      }
    }
  }

  for (const Edge& e : g.edges()) {
    if (colors[e.u] != colors[e.v]) continue;
    ConflictWitness w;
    w.kind = ConflictKind::kGoodBadAdjacency;
    const bool u_lower = layering.depth[e.u] <= layering.depth[e.v];
    w.location = u_lower ? std::vector<Vertex>{e.u, e.v} : std::vector<Vertex>{e.v, e.u};
    w.layer = layering.depth[w.location[0]];
    w.detail = "bad vertex " + std::to_string(w.location[0]) + " of a non-bipartite component of G[L_" +
               std::to_string(w.layer) + "] is adjacent to a non-bipartite component of G[L_" +
               std::to_string(w.layer + 1) + "]";
    return w;
  }
  return Coloring{colors, 5};
}

}  // namespace cyclespec
