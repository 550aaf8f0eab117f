#include <random>

#include "doctest.h"

#include "cyclespec/cycles.hpp"
#include "cyclespec/decomposition.hpp"
#include "cyclespec/families.hpp"
#include "support/oracles.hpp"

using namespace cyclespec;

namespace {

Graph complete(int n) { return generate({Family::kComplete, {n}}); }
Graph cycle(int n) { return generate({Family::kCycle, {n}}); }
Graph petersen() { return generate({Family::kPetersen, {}}); }
Graph octahedron() { return generate({Family::kCompleteMultipartite, {2, 2, 2}}); }
Graph wheel(int rim) { return join(cycle(rim), Graph(1)); }

std::set<int> set_of(std::initializer_list<int> xs) { return xs; }

std::set<std::pair<Vertex, Vertex>> edge_set(const std::vector<Vertex>& c) {
  std::set<std::pair<Vertex, Vertex>> out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    Vertex a = c[i];
    Vertex b = c[(i + 1) % c.size()];
    out.emplace(std::min(a, b), std::max(a, b));
  }
  return out;
}

bool oracle_opposite(const std::vector<Vertex>& c, const std::vector<Vertex>& d) {
  if (c.size() % 2 == d.size() % 2) return false;
  int shared = 0;
  for (Vertex v : c) shared += std::count(d.begin(), d.end(), v);
  if (shared > 1) return false;
  auto ec = edge_set(c);
  for (const auto& e : edge_set(d)) {
    if (ec.contains(e)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("enumerate_cycles examples") {
  CHECK(enumerate_cycles(generate({Family::kPath, {6}}), 100).cycles.empty());
  CHECK(enumerate_cycles(cycle(5), 100).cycles.size() == 1);
  CycleEnumeration k4 = enumerate_cycles(complete(4), 100);
  CHECK(k4.cycles.size() == 7);
  CHECK_FALSE(k4.truncated);
  int triangles = 0;
  for (const Cycle& c : k4.cycles) triangles += c.length() == 3;
  CHECK(triangles == 4);

  CycleEnumeration capped = enumerate_cycles(complete(4), 7);
  CHECK(capped.cycles.size() == 7);
  CHECK_FALSE(capped.truncated);
  CycleEnumeration cut = enumerate_cycles(complete(4), 3);
  CHECK(cut.cycles.size() == 3);
  CHECK(cut.truncated);
}

TEST_CASE("enumerate_cycles agrees with the permutation oracle") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 150; ++trial) {
    Graph g = oracle::random_graph(3 + static_cast<int>(rng() % 6), 0.5, rng);
    std::set<std::vector<Vertex>> expected = oracle::all_cycles(g);
    CycleEnumeration got = enumerate_cycles(g, 1'000'000);
    std::set<std::vector<Vertex>> listed;
    for (const Cycle& c : got.cycles) {
      CHECK(listed.insert(c.vertices).second);
      CHECK(c == canonical_cycle(c.vertices));
    }
    CHECK(listed == expected);
  }
}

TEST_CASE("canonical cycle form") {
  CHECK(canonical_cycle({3, 1, 4, 2}).vertices == std::vector<Vertex>{1, 3, 2, 4});
  CHECK(canonical_cycle({2, 0, 1}).vertices == std::vector<Vertex>{0, 1, 2});
  CHECK(canonical_cycle({0, 2, 1}).vertices == std::vector<Vertex>{0, 1, 2});
  Graph c5 = cycle(5);
  CHECK(is_valid_cycle(c5, Cycle{{0, 1, 2, 3, 4}}));
  CHECK_FALSE(is_valid_cycle(c5, Cycle{{0, 1, 2}}));
  CHECK_FALSE(is_valid_cycle(c5, Cycle{{0, 1}}));
  CHECK(is_valid_path(c5, Path{{3}}));
  CHECK_FALSE(is_valid_path(c5, Path{{0, 2}}));
}

TEST_CASE("cycle length sets") {
  CHECK(cycle_length_set(complete(5)).lengths() == set_of({3, 4, 5}));
  CHECK(cycle_length_set(cycle(6)).lengths() == set_of({6}));
  CHECK(cycle_length_set(petersen()).lengths() == set_of({5, 6, 8, 9}));
  CHECK(cycle_length_set(generate({Family::kCompleteBipartite, {3, 3}})).lengths() == set_of({4, 6}));
  CHECK(cycle_length_set(generate({Family::kPath, {9}})).empty());
  CHECK_THROWS_AS(cycle_length_set(cycle(17), 16), SizeLimitError);
  CHECK(cycle_length_set(cycle(17), 17).lengths() == set_of({17}));
}

TEST_CASE("cycle length sets match the oracle with valid witnesses") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    Graph g = oracle::random_graph(n, 0.2 + 0.6 * static_cast<double>(rng() % 100) / 100.0, rng);
    CycleLengths got = cycle_length_set(g);
    CHECK(got.lengths() == oracle::cycle_lengths(g));
    for (const auto& [len, c] : got.witnesses) {
      CHECK(c.length() == len);
      CHECK(oracle::is_cycle_in(g, c.vertices));
    }
  }
}

TEST_CASE("cycle lengths restricted to a vertex subset") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = oracle::random_graph(8, 0.45, rng);
    VertexSet allowed(rng() & 0xFF);
    CycleLengths got = cycle_lengths_within(g, allowed);
    InducedSubgraph sub = induced_subgraph(g, allowed);
    CHECK(got.lengths() == oracle::cycle_lengths(sub.graph));
    for (const auto& [len, c] : got.witnesses) {
      CHECK(oracle::is_cycle_in(g, c.vertices));
      CHECK(c.vertex_set().is_subset_of(allowed));
    }
  }
}

TEST_CASE("spectra modulo k") {
  SpectrumReport k5 = cycle_spectrum_mod(complete(5), 4);
  CHECK(k5.missing == set_of({2}));
  CHECK(k5.present.size() == 3);
  CHECK(k5.present.at(3).length() == 3);
  CHECK(k5.present.at(0).length() == 4);
  CHECK(k5.present.at(1).length() == 5);

  SpectrumReport k6 = cycle_spectrum_mod(complete(6), 5);
  CHECK(k6.missing == set_of({2}));

  SpectrumReport oct = cycle_spectrum_mod(octahedron(), 4);
  CHECK(oct.complete());
  CHECK(oct.lengths_seen == set_of({3, 4, 5, 6}));

  SpectrumReport h1 = cycle_spectrum_mod(generate({Family::kHt, {1}}), 4);
  CHECK(h1.missing == set_of({1}));

  CHECK_THROWS_AS(cycle_spectrum_mod(complete(3), 1), GraphError);
  CHECK_FALSE(k5.truncated);
}

TEST_CASE("spectrum consistency property") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = oracle::random_graph(4 + static_cast<int>(rng() % 8), 0.35, rng);
    const int k = 2 + static_cast<int>(rng() % 5);
    SpectrumReport s = cycle_spectrum_mod(g, k);
    std::set<int> residues;
    for (int len : s.lengths_seen) residues.insert(len % k);
    std::set<int> present;
    for (const auto& [r, c] : s.present) {
      present.insert(r);
      CHECK(c.length() % k == r);
      CHECK(s.lengths_seen.contains(c.length()));
      CHECK(oracle::is_cycle_in(g, c.vertices));
      // shortest with that residue
      for (int len : s.lengths_seen) {
        if (len % k == r) CHECK(c.length() <= len);
      }
    }
    CHECK(present == residues);
    for (int r = 0; r < k; ++r) CHECK(present.contains(r) != s.missing.contains(r));
  }
}

TEST_CASE("girth and circumference") {
  CycleExtremes k5 = cycle_extremes(complete(5));
  CHECK(k5.girth == 3);
  CHECK(k5.circumference == 5);
  CycleExtremes tree = cycle_extremes(generate({Family::kPath, {5}}));
  CHECK_FALSE(tree.girth);
  CHECK_FALSE(tree.circumference);
  CycleExtremes pet = cycle_extremes(petersen());
  CHECK(pet.girth == 5);
  CHECK(pet.circumference == 9);
}

TEST_CASE("shortest odd cycle") {
  CHECK_FALSE(shortest_odd_cycle(generate({Family::kCompleteBipartite, {3, 4}})));
  auto c7 = shortest_odd_cycle(cycle(7));
  REQUIRE(c7);
  CHECK(c7->vertices == std::vector<Vertex>{0, 1, 2, 3, 4, 5, 6});
  auto pet = shortest_odd_cycle(petersen());
  REQUIRE(pet);
  CHECK(pet->length() == 5);

  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = oracle::random_graph(3 + static_cast<int>(rng() % 7), 0.3, rng);
    int best = 0;
    for (int len : oracle::cycle_lengths(g)) {
      if (len % 2 == 1 && (best == 0 || len < best)) best = len;
    }
    auto c = shortest_odd_cycle(g);
    CHECK(c.has_value() == (best != 0));
    if (!c) continue;
    CHECK(c->length() == best);
    CHECK(oracle::is_cycle_in(g, c->vertices));
    // a shortest odd cycle is induced
    CHECK(induced_subgraph(g, c->vertex_set()).graph.size() == c->length());
  }
}

TEST_CASE("longest consecutive run") {
  CHECK(longest_consecutive_run(complete(5)) == ConsecutiveRun{3, 3});
  CHECK(longest_consecutive_run(cycle(6)) == ConsecutiveRun{6, 1});
  CHECK(longest_consecutive_run(wheel(5)) == ConsecutiveRun{3, 4});
  CHECK(longest_consecutive_run(generate({Family::kPath, {4}})) == ConsecutiveRun{0, 0});
  // lengths {5,6,8,9}: two runs of two, the smaller start wins
  CHECK(longest_consecutive_run(petersen()) == ConsecutiveRun{5, 2});
}

TEST_CASE("opposite pairs") {
  CHECK_FALSE(find_opposite_pair(complete(5)));
  CHECK_FALSE(find_opposite_pair(generate({Family::kCompleteBipartite, {4, 4}})));
  auto oct = find_opposite_pair(octahedron());
  REQUIRE(oct);
  CHECK(oct->odd_cycle.length() == 3);
  CHECK(oct->even_cycle.length() == 4);
  CHECK((oct->odd_cycle.vertex_set() & oct->even_cycle.vertex_set()).size() == 1);
  CHECK(is_opposite_pair(octahedron(), oct->odd_cycle, oct->even_cycle));
  CHECK(is_opposite_pair(octahedron(), oct->even_cycle, oct->odd_cycle));

  Graph k4 = complete(4);
  CHECK_FALSE(is_opposite_pair(k4, Cycle{{0, 1, 2}}, Cycle{{0, 1, 2, 3}}));
  CHECK_FALSE(is_opposite_pair(k4, Cycle{{0, 1, 2}}, Cycle{{0, 1, 3}}));
}

TEST_CASE("opposite pair search agrees with exhaustive pairing") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 150; ++trial) {
    Graph g = oracle::random_graph(5 + static_cast<int>(rng() % 4), 0.5, rng);
    const auto all = oracle::all_cycles(g);
    const std::vector<std::vector<Vertex>> cycles(all.begin(), all.end());
    int best_odd = 0;
    for (const auto& c : cycles) {
      for (const auto& d : cycles) {
        if (c.size() % 2 == 1 && oracle_opposite(c, d) && (best_odd == 0 || static_cast<int>(c.size()) < best_odd)) {
          best_odd = static_cast<int>(c.size());
        }
      }
    }
    auto pair = find_opposite_pair(g);
    CHECK(pair.has_value() == (best_odd != 0));
    if (!pair) continue;
    CHECK(oracle_opposite(pair->odd_cycle.vertices, pair->even_cycle.vertices));
    CHECK(oracle::is_cycle_in(g, pair->odd_cycle.vertices));
    CHECK(oracle::is_cycle_in(g, pair->even_cycle.vertices));
    CHECK(pair->odd_cycle.length() == best_odd);
    int best_even = 0;
    for (const auto& d : cycles) {
      if (oracle_opposite(pair->odd_cycle.vertices, d) && (best_even == 0 || static_cast<int>(d.size()) < best_even)) {
        best_even = static_cast<int>(d.size());
      }
    }
    CHECK(pair->even_cycle.length() == best_even);
    CHECK(is_opposite_pair(g, pair->even_cycle, pair->odd_cycle));
  }
}

TEST_CASE("A-B path spectra") {
  Graph k4 = complete(4);
  auto k4_paths = ab_path_length_spectrum(k4, VertexSet{0, 1}, VertexSet{2, 3});
  CHECK(k4_paths.size() == 3);
  for (const auto& [len, p] : k4_paths) {
    CHECK(p.length() == len);
    CHECK(oracle::is_path_in(k4, p.vertices));
  }

  Graph k33 = generate({Family::kCompleteBipartite, {3, 3}});
  auto bip = ab_path_length_spectrum(k33, VertexSet{0, 1, 2}, VertexSet{3, 4, 5});
  for (const auto& [len, p] : bip) CHECK(len % 2 == 1);
  CHECK(bip.size() == 3);

  auto edge = ab_path_length_spectrum(complete(2), VertexSet{0}, VertexSet{1});
  CHECK(edge.size() == 1);
  CHECK(edge.contains(1));

  CHECK_THROWS_AS(ab_path_length_spectrum(k4, VertexSet{0, 1}, VertexSet{2}), GraphError);
  CHECK_THROWS_AS(ab_path_length_spectrum(k4, VertexSet{}, VertexSet{0, 1, 2, 3}), GraphError);
  CHECK_THROWS_AS(ab_path_length_spectrum(k4, VertexSet{0, 1}, VertexSet{1, 2, 3}), GraphError);
}

TEST_CASE("A-B path spectra match path enumeration") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    Graph g = oracle::random_graph(n, 0.45, rng);
    std::uint64_t a_bits = (rng() & ((std::uint64_t{1} << n) - 1)) | 1U;
    if (a_bits == (std::uint64_t{1} << n) - 1) a_bits &= ~(std::uint64_t{1} << (n - 1));
    VertexSet a(a_bits);
    VertexSet b = g.vertices() - a;
    auto got = ab_path_length_spectrum(g, a, b);
    std::set<int> lengths;
    for (const auto& [len, p] : got) {
      lengths.insert(len);
      CHECK(p.length() == len);
      CHECK(oracle::is_path_in(g, p.vertices));
      CHECK(a.contains(p.front()) != a.contains(p.back()));
    }
    CHECK(lengths == oracle::ab_lengths(g, a_bits));
  }
}
