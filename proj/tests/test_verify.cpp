#include <sstream>

#include "doctest.h"

#include "cyclespec/families.hpp"
#include "cyclespec/verify.hpp"
#include "support/oracles.hpp"

using namespace cyclespec;

namespace {

Graph complete(int n) { return generate({Family::kComplete, {n}}); }
Graph cycle(int n) { return generate({Family::kCycle, {n}}); }
Graph petersen() { return generate({Family::kPetersen, {}}); }
Graph octahedron() { return generate({Family::kCompleteMultipartite, {2, 2, 2}}); }
Graph bipartite(int a, int b) { return generate({Family::kCompleteBipartite, {a, b}}); }

Graph cube() {
  std::vector<Edge> edges;
  for (int v = 0; v < 8; ++v) {
    for (int bit = 1; bit < 8; bit <<= 1) {
      if ((v ^ bit) > v) edges.emplace_back(v, v ^ bit);
    }
  }
  return Graph(8, edges);
}

// K5 with the edge 0-1 replaced by the path 0-5-1.
Graph k5_subdivided() {
  std::vector<Edge> edges;
  for (const Edge& e : complete(5).edges()) {
    if (e != Edge(0, 1)) edges.push_back(e);
  }
  edges.emplace_back(0, 5);
  edges.emplace_back(5, 1);
  return Graph(6, edges);
}

std::string verdict(const VerdictRecord& r) { return to_string(r.verdict); }

}  // namespace

TEST_CASE("mod4 theorem check") {
  CHECK(verdict(verify_mod4_theorem(octahedron())) == "pass");
  VerdictRecord k5 = verify_mod4_theorem(complete(5));
  CHECK(verdict(k5) == "exempt");
  CHECK(k5.witnesses["exception"] == "K5");
  CHECK(verdict(verify_mod4_theorem(cycle(5))) == "skipped-hypothesis");
  CHECK(verdict(verify_mod4_theorem(bipartite(4, 4))) == "skipped-hypothesis");
  CHECK(verdict(verify_mod4_theorem(cycle(17))) == "refused-size");
  CHECK(verify_mod4_theorem(complete(5)).n == 5);
  CHECK(verify_mod4_theorem(complete(5)).m == 10);
}

TEST_CASE("opposite pair lemma check") {
  VerdictRecord oct = verify_opposite_pair_lemma(octahedron());
  CHECK(verdict(oct) == "pass");
  REQUIRE(oct.witnesses.contains("pair"));
  auto odd = oct.witnesses["pair"]["odd_cycle"].get<std::vector<Vertex>>();
  auto even = oct.witnesses["pair"]["even_cycle"].get<std::vector<Vertex>>();
  CHECK(is_opposite_pair(octahedron(), Cycle{odd}, Cycle{even}));
  CHECK(verdict(verify_opposite_pair_lemma(complete(5))) == "skipped-hypothesis");
  CHECK(verdict(verify_opposite_pair_lemma(bipartite(4, 4))) == "skipped-hypothesis");
}

TEST_CASE("mod5 critical check") {
  VerdictRecord j = verify_mod5_critical(join(cycle(5), complete(3)));
  CHECK(verdict(j) == "pass");
  CHECK(oracle::proper(join(cycle(5), complete(3)), j.witnesses["coloring"].get<std::vector<int>>()));
  CHECK(verdict(verify_mod5_critical(complete(6))) == "exempt");
  CHECK(verdict(verify_mod5_critical(petersen())) == "skipped-hypothesis");
  // K6 plus a pendant: chromatic number 6, K6 inside, residue 2 still missing
  std::vector<Edge> edges = complete(6).edges();
  edges.emplace_back(0, 6);
  VerdictRecord pendant = verify_mod5_critical(Graph(7, edges));
  CHECK(verdict(pendant) == "exempt");
  CHECK(pendant.witnesses["exception"] == "contains K6");
}

TEST_CASE("mod4 critical check") {
  CHECK(verdict(verify_mod4_critical(complete(5))) == "exempt");
  CHECK(verdict(verify_mod4_critical(join(cycle(6), Graph(1)))) == "skipped-hypothesis");
  // C5 join K2 is 5-critical and not complete
  Graph j = join(cycle(5), complete(2));
  VerdictRecord r = verify_mod4_critical(j);
  CHECK(verdict(r) == "pass");
  CHECK(verdict(verify_critical_spectrum(j, 4)) == "pass");
  CHECK_THROWS_AS(verify_critical_spectrum(cycle(5), 1), GraphError);
}

TEST_CASE("A-B path check") {
  Graph k4 = complete(4);
  VerdictRecord r = verify_ab_paths(k4, VertexSet{0, 1}, VertexSet{2, 3});
  CHECK(verdict(r) == "pass");
  CHECK(r.witnesses["circumference"] == 4);

  Graph k33 = bipartite(3, 3);
  CHECK(verdict(verify_ab_paths(k33, VertexSet{0, 1, 2}, VertexSet{3, 4, 5})) == "exempt");
  CHECK(verdict(verify_ab_paths(k33, VertexSet{3, 4, 5}, VertexSet{0, 1, 2})) == "exempt");
  VerdictRecord mixed = verify_ab_paths(k33, VertexSet{0, 1, 3}, VertexSet{2, 4, 5});
  CHECK(verdict(mixed) == "pass");
  CHECK(mixed.witnesses["paths"].size() == 5);

  CHECK(verdict(verify_ab_paths(cycle(5), VertexSet{0}, VertexSet{1, 2, 3, 4})) == "skipped-hypothesis");
  CHECK_THROWS_AS(verify_ab_paths(k4, VertexSet{0}, VertexSet{1}), GraphError);
}

TEST_CASE("long cycle check") {
  VerdictRecord q3 = verify_longcycle(cube(), 3);
  CHECK(verdict(q3) == "pass");
  CHECK(q3.witnesses["circumference"] == 8);
  VerdictRecord k34 = verify_longcycle(bipartite(3, 4), 3);
  CHECK(verdict(k34) == "exempt");
  CHECK(k34.witnesses["exception"] == "K_{3,4}");
  CHECK(verdict(verify_longcycle(bipartite(3, 3), 3)) == "exempt");
  CHECK(verdict(verify_longcycle(petersen(), 3)) == "pass");
  CHECK(verdict(verify_longcycle(complete(5), 3)) == "skipped-hypothesis");
  CHECK(verdict(verify_longcycle(bipartite(4, 4), 3)) == "pass");
  CHECK_THROWS_AS(verify_longcycle(cube(), 2), GraphError);
}

TEST_CASE("consecutive lengths check") {
  CHECK(verdict(verify_consecutive(join(cycle(5), Graph(1)), 3)) == "pass");
  VerdictRecord k4 = verify_consecutive(complete(4), 3);
  CHECK(verdict(k4) == "exempt");
  CHECK(k4.witnesses["exception"] == "K4");
  VerdictRecord sub = verify_consecutive(k5_subdivided(), 2);
  CHECK(verdict(sub) == "pass");
  for (const auto& c : sub.witnesses["cycles"]) {
    CHECK(oracle::is_cycle_in(k5_subdivided(), c.get<std::vector<Vertex>>()));
  }
  CHECK(verdict(verify_consecutive(cube(), 3)) == "skipped-hypothesis");
}

TEST_CASE("layer lemma check") {
  VerdictRecord pet = verify_layer_lemmas(petersen(), Vertex{0});
  CHECK(verdict(pet) == "pass");
  CHECK(pet.witnesses["via"] == "layer-conditions");
  VerdictRecord k6 = verify_layer_lemmas(complete(6), Vertex{0});
  CHECK(verdict(k6) == "exempt");
  CHECK(k6.witnesses["layer_failure"]["condition"] == "layer-chromatic-bound");
  // root 5 is a K3 vertex of the join
  VerdictRecord j = verify_layer_lemmas(join(cycle(5), complete(3)), Vertex{5});
  CHECK(verdict(j) == "pass");
  CHECK(j.witnesses["via"] == "spectrum");
  CHECK(verdict(verify_layer_lemmas(Graph(2))) == "skipped-hypothesis");
  CHECK(verdict(verify_layer_lemmas(petersen())) == "pass");
}

TEST_CASE("the critical spectrum check reports violations outside the theorem's range") {
  // C5 is 3-critical and not complete, but has no even cycle: the statement
  // fails for k = 2, and the witness says so.
  VerdictRecord r = verify_critical_spectrum(cycle(5), 2);
  CHECK(verdict(r) == "violation");
  CHECK(r.witnesses["spectrum"]["missing"] == nlohmann::json::array({0}));
  CHECK(r.witnesses["spectrum"]["present"]["1"] == nlohmann::json::array({0, 1, 2, 3, 4}));

  CorpusOptions opts;
  opts.check = "critical_spectrum";
  opts.k = 2;
  std::istringstream in(encode_graph6(cycle(5)) + "\n" + encode_graph6(complete(3)) + "\n");
  CorpusReport report = run_corpus(in, "odd cycles", opts);
  CHECK(report.totals[Verdict::kViolation] == 1);
  CHECK(report.totals[Verdict::kExempt] == 1);
  CHECK(exit_code(report) == 1);
}

TEST_CASE("corpus runs") {
  CorpusOptions opts;
  opts.check = "mod4_theorem";

  std::istringstream empty("");
  CorpusReport e = run_corpus(empty, "empty", opts);
  CHECK(e.records.empty());
  CHECK(exit_code(e) == 0);

  std::istringstream bad("D~{\nD~\n");
  CorpusReport b = run_corpus(bad, "bad", opts);
  REQUIRE(b.records.size() == 2);
  CHECK(b.records[1].verdict == Verdict::kSkipped);
  CHECK(b.records[1].witnesses["offset"] == 2);
  CHECK(b.totals[Verdict::kSkipped] == 1);
  CHECK(exit_code(b) == 2);

  CorpusReport c5 = run_corpus(oracle::data_path("connected_5.g6"), opts);
  CHECK(c5.records.size() == 21);
  CHECK(c5.totals[Verdict::kExempt] == 1);
  CHECK(c5.totals[Verdict::kViolation] == 0);
  for (const auto& r : c5.records) {
    if (r.verdict == Verdict::kExempt) CHECK(r.m == 10);
    CHECK((r.verdict == Verdict::kPass || r.verdict == Verdict::kExempt || r.verdict == Verdict::kSkippedHypothesis));
  }
  int total = 0;
  for (const auto& [v, count] : c5.totals) total += count;
  CHECK(total == 21);

  CHECK_THROWS_AS(run_corpus(std::filesystem::path("/nonexistent/x.g6"), opts), std::runtime_error);
  opts.check = "nope";
  std::istringstream any("D~{\n");
  CHECK_THROWS_AS(run_corpus(any, "x", opts), GraphError);
}

TEST_CASE("corpus reports do not depend on the number of workers") {
  auto strip = [](nlohmann::json j) {
    for (auto& r : j["records"]) r.erase("elapsed_ms");
    return j;
  };
  for (const std::string& check : {std::string("mod4_theorem"), std::string("ab_paths"), std::string("layer_lemmas")}) {
    CorpusOptions one;
    one.check = check;
    CorpusOptions many = one;
    many.jobs = 4;
    CorpusReport a = run_corpus(oracle::data_path("all_le7.g6"), one);
    CorpusReport b = run_corpus(oracle::data_path("all_le7.g6"), many);
    CHECK(strip(to_json(a)) == strip(to_json(b)));
    for (std::size_t i = 0; i < a.records.size(); ++i) CHECK(a.records[i].graph_id == i);
  }
}

TEST_CASE("report JSON schema and summary") {
  CorpusOptions opts;
  opts.check = "consecutive";
  opts.k = 2;
  std::istringstream in(">>graph6<<D~{\r\n\nBw\n");
  CorpusReport r = run_corpus(in, "inline", opts);
  nlohmann::json j = to_json(r);
  CHECK(j["source"] == "inline");
  CHECK(j["check"] == "consecutive");
  CHECK(j["records"].size() == 2);
  for (const char* key : {"pass", "exempt", "violation", "skipped-hypothesis", "refused-size", "skipped"}) {
    CHECK(j["totals"].contains(key));
  }
  for (const auto& rec : j["records"]) {
    for (const char* key : {"graph_id", "n", "m", "check", "verdict", "witnesses", "elapsed_ms"}) CHECK(rec.contains(key));
  }
  CHECK(j["records"][0]["verdict"] == "pass");
  CHECK(j["records"][1]["verdict"] == "exempt");
  const std::string summary = render_summary(j);
  CHECK(summary.find("consecutive over inline: 2 graph(s)") != std::string::npos);
}

TEST_CASE("partition sampling") {
  auto all = sample_partitions(3, 10, 1);
  CHECK(all.size() == 3);
  for (const auto& [a, b] : all) {
    CHECK(a.contains(0));
    CHECK_FALSE(b.empty());
    CHECK((a | b) == VertexSet::range(3));
  }
  auto some = sample_partitions(9, 3, 5);
  CHECK(some.size() == 3);
  CHECK(some == sample_partitions(9, 3, 5));
  CHECK(some[0] != some[1]);
  CHECK(sample_partitions(1, 3, 5).empty());
}
