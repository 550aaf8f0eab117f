#include "cyclespec/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

#include "cyclespec/decomposition.hpp"

namespace cyclespec {

namespace {

using nlohmann::json;

constexpr int kAllRootsThreshold = 12;

VerdictRecord make_record(const Graph& g, std::string check) {
  VerdictRecord r;
  r.n = g.order();
  r.m = g.size();
  r.check = std::move(check);
  return r;
}

VerdictRecord finish(VerdictRecord r, Verdict v, json witnesses = json::object()) {
  r.verdict = v;
  r.witnesses = std::move(witnesses);
  return r;
}

VerdictRecord skipped(VerdictRecord r, const std::string& why) {
  return finish(std::move(r), Verdict::kSkippedHypothesis, {{"hypothesis", why}});
}

// Times the body and turns a size refusal into a refused-size record.
VerdictRecord timed(const Graph& g, const std::string& check,
                    const std::function<VerdictRecord(VerdictRecord)>& body) {
  const auto start = std::chrono::steady_clock::now();
  VerdictRecord record = make_record(g, check);
  try {
    record = body(record);
  } catch (const SizeLimitError& e) {
    record = finish(make_record(g, check), Verdict::kRefusedSize,
                    {{"error", e.what()}, {"limit", e.limit()}});
  }
  record.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return record;
}

bool has_clique(const Graph& g, int size) {
  std::function<bool(VertexSet, int)> grow = [&](VertexSet candidates, int need) {
    if (need == 0) return true;
    if (candidates.size() < need) return false;
    for (Vertex v : candidates) {
      candidates.erase(v);
      if (grow(candidates & g.neighbors(v), need - 1)) return true;
    }
    return false;
  };
  return grow(g.vertices(), size);
}

// Part sizes when g is a complete bipartite graph.
std::optional<std::pair<int, int>> complete_bipartite_parts(const Graph& g) {
  if (g.order() < 2 || !is_connected(g)) return std::nullopt;
  BipartitionResult bp = bipartition(g);
  if (!bp.parts) return std::nullopt;
  const int a = bp.parts->a.size();
  const int b = bp.parts->b.size();
  if (g.size() != a * b) return std::nullopt;
  return std::pair{std::min(a, b), std::max(a, b)};
}

json vertex_array(VertexSet s) { return s.to_vector(); }

json lengths_json(const std::set<int>& lengths) { return json(std::vector<int>(lengths.begin(), lengths.end())); }

// Layer conditions for one root; the first failure found, or null.
json layer_condition_failure(const Graph& g, Vertex root, int limit) {
  const BfsLayering layering = bfs_layering(g, root);
  struct Component {
    VertexSet vertices;
    bool bipartite = true;
    GoodBadPartition part;
  };
  std::vector<std::vector<Component>> layers;
  for (std::size_t i = 0; i < layering.layers.size(); ++i) {
    InducedSubgraph layer = induced_subgraph(g, layering.layers[i]);
    std::vector<Component> comps;
    for (VertexSet local : connected_components(layer.graph)) {
      InducedSubgraph comp = induced_subgraph(layer.graph, local);
      Component c;
      for (Vertex v : comp.original) c.vertices.insert(layer.original[v]);
      c.bipartite = is_bipartite(comp.graph);
      if (!c.bipartite) {
        const int chi = chromatic_number(comp.graph, limit).chi;
        if (chi > 3) {
          return {{"root", root},
                  {"condition", "layer-chromatic-bound"},
                  {"layer", i},
                  {"component", vertex_array(c.vertices)},
                  {"chromatic_number", chi}};
        }
        GoodBadPartition local_part = good_bad_partition(comp.graph);
        for (Vertex v : local_part.good) c.part.good.insert(layer.original[comp.original[v]]);
        for (Vertex v : local_part.bad) c.part.bad.insert(layer.original[comp.original[v]]);
      }
      comps.push_back(c);
    }
    layers.push_back(std::move(comps));
  }
  for (std::size_t i = 1; i + 1 < layers.size(); ++i) {
    for (const Component& lower : layers[i]) {
      if (lower.bipartite) continue;
      for (const Component& upper : layers[i + 1]) {
        if (upper.bipartite) continue;
        for (Vertex v : lower.part.bad) {
          VertexSet hits = g.neighbors(v) & upper.vertices;
          if (hits.empty()) continue;
          return {{"root", root},
                  {"condition", "bad-vertex-isolation"},
                  {"layer", i},
                  {"bad_vertex", v},
                  {"neighbor", hits.front()},
                  {"lower_component", vertex_array(lower.vertices)},
                  {"upper_component", vertex_array(upper.vertices)}};
        }
      }
    }
  }
  return nullptr;
}

}  // namespace

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::kPass: return "pass";
    case Verdict::kExempt: return "exempt";
    case Verdict::kViolation: return "violation";
    case Verdict::kSkippedHypothesis: return "skipped-hypothesis";
    case Verdict::kRefusedSize: return "refused-size";
    case Verdict::kSkipped: return "skipped";
  }
  return "unknown";
}

json to_json(const Cycle& c) { return c.vertices; }
json to_json(const Path& p) { return p.vertices; }
json to_json(const Coloring& c) { return c.colors; }

json to_json(const ConflictWitness& w) {
  json j{{"kind", to_string(w.kind)}, {"location", w.location}, {"detail", w.detail}};
  if (w.layer >= 0) j["layer"] = w.layer;
  if (w.chromatic_number > 0) j["chromatic_number"] = w.chromatic_number;
  return j;
}

json to_json(const SpectrumReport& s) {
  json present = json::object();
  for (const auto& [residue, cycle] : s.present) present[std::to_string(residue)] = to_json(cycle);
  return {{"modulus", s.modulus},
          {"present", present},
          {"missing", std::vector<int>(s.missing.begin(), s.missing.end())},
          {"lengths", lengths_json(s.lengths_seen)}};
}

json to_json(const OppositePair& pair) {
  return {{"odd_cycle", to_json(pair.odd_cycle)}, {"even_cycle", to_json(pair.even_cycle)}};
}

json to_json(const VerdictRecord& r) {
  return {{"graph_id", r.graph_id}, {"n", r.n},          {"m", r.m},
          {"check", r.check},       {"verdict", to_string(r.verdict)},
          {"witnesses", r.witnesses}, {"elapsed_ms", r.elapsed_ms}};
}

VerdictRecord verify_mod4_theorem(const Graph& g, int limit) {
  return timed(g, "mod4_theorem", [&](VerdictRecord r) {
    require_within_limit(g.order(), limit);
    if (!is_two_connected(g)) return skipped(r, "not 2-connected");
    if (is_bipartite(g)) return skipped(r, "bipartite");
    if (int d = degree_stats(g).min_degree; d < 4) {
      return skipped(r, "minimum degree " + std::to_string(d) + " < 4");
    }
    if (g.order() == 5 && g.size() == 10) return finish(r, Verdict::kExempt, {{"exception", "K5"}});
    SpectrumReport s = cycle_spectrum_mod(g, 4, limit);
    return finish(r, s.complete() ? Verdict::kPass : Verdict::kViolation, {{"spectrum", to_json(s)}});
  });
}

VerdictRecord verify_opposite_pair_lemma(const Graph& g, int limit) {
  return timed(g, "opposite_pair_lemma", [&](VerdictRecord r) {
    require_within_limit(g.order(), limit);
    if (!is_two_connected(g)) return skipped(r, "not 2-connected");
    if (int d = degree_stats(g).min_degree; d < 4) {
      return skipped(r, "minimum degree " + std::to_string(d) + " < 4");
    }
    std::optional<OppositePair> pair = find_opposite_pair(g, limit);
    if (!pair) return skipped(r, "no opposite pair");
    SpectrumReport s = cycle_spectrum_mod(g, 4, limit);
    return finish(r, s.complete() ? Verdict::kPass : Verdict::kViolation,
                  {{"pair", to_json(*pair)}, {"spectrum", to_json(s)}});
  });
}

VerdictRecord verify_mod5_critical(const Graph& g, int limit) {
  return timed(g, "mod5_critical", [&](VerdictRecord r) {
    require_within_limit(g.order(), limit);
    ChromaticResult chi = chromatic_number(g, limit);
    if (chi.chi != 6) return skipped(r, "chromatic number " + std::to_string(chi.chi) + " != 6");
    if (is_complete(g)) return finish(r, Verdict::kExempt, {{"exception", "K6"}});
    SpectrumReport s = cycle_spectrum_mod(g, 5, limit);
    json w{{"spectrum", to_json(s)}, {"coloring", to_json(chi.witness)}};
    if (s.complete()) return finish(r, Verdict::kPass, w);
    // A 6-chromatic graph whose only 6-critical subgraphs are K6 inherits the
    // complete-graph exception.
    if (has_clique(g, 6)) {
      w["exception"] = "contains K6";
      return finish(r, Verdict::kExempt, w);
    }
    return finish(r, Verdict::kViolation, w);
  });
}

VerdictRecord verify_critical_spectrum(const Graph& g, int k, int limit) {
  if (k < 2) throw GraphError("critical_spectrum needs k >= 2");
  return timed(g, k == 4 ? "mod4_critical" : "critical_spectrum", [&](VerdictRecord r) {
    require_within_limit(g.order(), limit);
    StructuralReport structure = structural_criticality_check(g, k);
    if (!structure.passes()) {
      return skipped(r, "not " + std::to_string(k + 1) + "-critical: " +
                            (structure.min_degree_ok ? "not 2-connected"
                                                     : "minimum degree " +
                                                           std::to_string(structure.min_degree) +
                                                           " < " + std::to_string(k)));
    }
    CriticalityCertificate cert = is_k_critical(g, k + 1, limit);
    if (!cert.critical) return skipped(r, "not " + std::to_string(k + 1) + "-critical: " + cert.reason);
    if (is_complete(g)) return finish(r, Verdict::kExempt, {{"exception", "K" + std::to_string(k + 1)}});
    SpectrumReport s = cycle_spectrum_mod(g, k, limit);
    return finish(r, s.complete() ? Verdict::kPass : Verdict::kViolation,
                  {{"k", k}, {"spectrum", to_json(s)}, {"coloring", to_json(cert.chi_witness)}});
  });
}

VerdictRecord verify_mod4_critical(const Graph& g, int limit) { return verify_critical_spectrum(g, 4, limit); }

VerdictRecord verify_ab_paths(const Graph& g, VertexSet a, VertexSet b, int limit) {
  if (a.empty() || b.empty() || !(a & b).empty() || (a | b) != g.vertices()) {
    throw GraphError("(A, B) is not a non-trivial partition of the vertex set");
  }
  return timed(g, "ab_paths", [&](VerdictRecord r) {
    require_within_limit(g.order(), limit);
    json partition{{"A", vertex_array(a)}, {"B", vertex_array(b)}};
    if (!is_connected(g)) return skipped(r, "disconnected");
    if (int d = degree_stats(g).min_degree; d < 3) {
      return skipped(r, "minimum degree " + std::to_string(d) + " < 3");
    }
    if (BipartitionResult bp = bipartition(g); bp.parts) {
      if ((bp.parts->a == a && bp.parts->b == b) || (bp.parts->a == b && bp.parts->b == a)) {
        return finish(r, Verdict::kExempt, {{"exception", "bipartition"}, {"partition", partition}});
      }
    }
    const CycleExtremes extremes = cycle_extremes(g, limit);
    const int circumference = extremes.circumference.value_or(0);
    const std::map<int, Path> paths = ab_path_length_spectrum(g, a, b, limit);
    std::vector<int> missing;
    for (int len = 1; len < circumference; ++len) {
      if (!paths.contains(len)) missing.push_back(len);
    }
    json found = json::object();
    for (const auto& [len, path] : paths) found[std::to_string(len)] = to_json(path);
    return finish(r, missing.empty() ? Verdict::kPass : Verdict::kViolation,
                  {{"partition", partition},
                   {"circumference", circumference},
                   {"paths", found},
                   {"missing", missing}});
  });
}

VerdictRecord verify_longcycle(const Graph& g, int k, int limit) {
  if (k < 3) throw GraphError("longcycle needs k >= 3");
  return timed(g, "longcycle", [&](VerdictRecord r) {
    require_within_limit(g.order(), limit);
    if (!is_two_connected(g)) return skipped(r, "not 2-connected");
    if (int d = degree_stats(g).min_degree; d < k) {
      return skipped(r, "minimum degree " + std::to_string(d) + " < " + std::to_string(k));
    }
    if (has_triangle(g)) return skipped(r, "contains a triangle");
    if (auto parts = complete_bipartite_parts(g); parts && parts->first == k && parts->second >= k) {
      return finish(r, Verdict::kExempt,
                    {{"exception", "K_{" + std::to_string(k) + "," + std::to_string(parts->second) + "}"}});
    }
    const CycleLengths lengths = cycle_length_set(g, limit);
    const int circumference = lengths.empty() ? 0 : lengths.witnesses.rbegin()->first;
    json w{{"k", k}, {"circumference", circumference}, {"required", 2 * k + 2}};
    if (!lengths.empty()) w["longest_cycle"] = to_json(lengths.witnesses.rbegin()->second);
    return finish(r, circumference >= 2 * k + 2 ? Verdict::kPass : Verdict::kViolation, w);
  });
}

VerdictRecord verify_consecutive(const Graph& g, int k, int limit) {
  if (k < 2) throw GraphError("consecutive needs k >= 2");
  return timed(g, "consecutive", [&](VerdictRecord r) {
    require_within_limit(g.order(), limit);
    if (!is_two_connected(g)) return skipped(r, "not 2-connected");
    if (int d = degree_stats(g).min_degree; d < k) {
      return skipped(r, "minimum degree " + std::to_string(d) + " < " + std::to_string(k));
    }
    if (!has_triangle(g)) return skipped(r, "triangle-free");
    if (is_complete(g) && g.order() == k + 1) {
      return finish(r, Verdict::kExempt, {{"exception", "K" + std::to_string(k + 1)}});
    }
    const CycleLengths lengths = cycle_length_set(g, limit);
    ConsecutiveRun run = longest_consecutive_run(g, limit);
    json cycles = json::array();
    for (int len = run.start; len < run.start + run.size; ++len) cycles.push_back(to_json(lengths.witnesses.at(len)));
    return finish(r, run.size >= k ? Verdict::kPass : Verdict::kViolation,
                  {{"k", k}, {"run_start", run.start}, {"run_size", run.size}, {"cycles", cycles}});
  });
}

VerdictRecord verify_layer_lemmas(const Graph& g, std::optional<Vertex> root, int limit) {
  if (root && !g.has_vertex(*root)) throw GraphError("root " + std::to_string(*root) + " not in graph");
  return timed(g, "layer_lemmas", [&](VerdictRecord r) {
    require_within_limit(g.order(), limit);
    if (g.order() == 0 || !is_connected(g)) return skipped(r, "disconnected");
    std::vector<Vertex> roots;
    if (root) roots.push_back(*root);
    else if (g.order() <= kAllRootsThreshold) roots = g.vertices().to_vector();
    else roots.push_back(0);

    json failure = nullptr;
    for (Vertex v : roots) {
      failure = layer_condition_failure(g, v, limit);
      if (!failure.is_null()) break;
    }
    if (failure.is_null()) return finish(r, Verdict::kPass, {{"via", "layer-conditions"}, {"roots", roots}});

    SpectrumReport s = cycle_spectrum_mod(g, 5, limit);
    json w{{"layer_failure", failure}, {"spectrum", to_json(s)}};
    if (s.complete()) {
      w["via"] = "spectrum";
      return finish(r, Verdict::kPass, w);
    }
    if (is_complete(g)) {
      w["exception"] = "K" + std::to_string(g.order());
      return finish(r, Verdict::kExempt, w);
    }
    if (has_triangle(g)) {
      w["hypothesis"] = "contains a triangle; the layer conditions are claimed for triangle-free graphs";
      return finish(r, Verdict::kSkippedHypothesis, w);
    }
    return finish(r, Verdict::kViolation, w);
  });
}

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids{
      "mod4_theorem", "opposite_pair_lemma", "mod5_critical", "mod4_critical", "critical_spectrum",
      "ab_paths",     "longcycle",           "consecutive",   "layer_lemmas"};
  return ids;
}

std::vector<std::pair<VertexSet, VertexSet>> sample_partitions(int n, int count, std::uint64_t seed) {
  std::vector<std::pair<VertexSet, VertexSet>> out;
  if (n < 2 || count <= 0) return out;
  const VertexSet all = VertexSet::range(n);
  const VertexSet others = all - VertexSet{0};
  const std::uint64_t total = n - 1 >= 63 ? ~std::uint64_t{0} : (std::uint64_t{1} << (n - 1)) - 1;
  if (total <= static_cast<std::uint64_t>(count)) {
    for (std::uint64_t x = 1; x <= total; ++x) {
      VertexSet b(x << 1);
      out.emplace_back(all - b, b);
    }
    return out;
  }
  std::mt19937_64 rng(seed);
  std::set<std::uint64_t> seen;
  while (static_cast<int>(out.size()) < count) {
    VertexSet b = VertexSet(rng()) & others;
    if (b.empty() || !seen.insert(b.bits()).second) continue;
    out.emplace_back(all - b, b);
  }
  return out;
}

VerdictRecord run_check(const Graph& g, const CorpusOptions& options, std::size_t index) {
  const std::string& c = options.check;
  if (c == "mod4_theorem") return verify_mod4_theorem(g, options.limit);
  if (c == "opposite_pair_lemma") return verify_opposite_pair_lemma(g, options.limit);
  if (c == "mod5_critical") return verify_mod5_critical(g, options.limit);
  if (c == "mod4_critical") return verify_mod4_critical(g, options.limit);
  if (c == "critical_spectrum") return verify_critical_spectrum(g, options.k, options.limit);
  if (c == "longcycle") return verify_longcycle(g, options.k, options.limit);
  if (c == "consecutive") return verify_consecutive(g, options.k, options.limit);
  if (c == "layer_lemmas") return verify_layer_lemmas(g, std::nullopt, options.limit);
  if (c == "ab_paths") {
    const auto start = std::chrono::steady_clock::now();
    VerdictRecord combined = make_record(g, "ab_paths");
    auto partitions = sample_partitions(g.order(), options.partitions,
                                        options.seed ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
    if (partitions.empty()) {
      combined = skipped(combined, "fewer than two vertices");
    } else {
      json each = json::array();
      bool any_violation = false;
      bool any_pass = false;
      bool all_skipped = true;
      std::optional<VerdictRecord> refused;
      for (const auto& [a, b] : partitions) {
        VerdictRecord r = verify_ab_paths(g, a, b, options.limit);
        any_violation |= r.verdict == Verdict::kViolation;
        any_pass |= r.verdict == Verdict::kPass;
        all_skipped &= r.verdict == Verdict::kSkippedHypothesis;
        if (r.verdict == Verdict::kRefusedSize) refused = r;
        each.push_back({{"verdict", to_string(r.verdict)}, {"witnesses", r.witnesses}});
      }
      Verdict v = any_violation ? Verdict::kViolation
                  : refused     ? Verdict::kRefusedSize
                  : all_skipped ? Verdict::kSkippedHypothesis
                  : any_pass    ? Verdict::kPass
                                : Verdict::kExempt;
      combined = finish(combined, v, {{"partitions", each}});
    }
    combined.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - start)
                              .count();
    return combined;
  }
  throw GraphError("unknown check \"" + c + "\"");
}

CorpusReport run_corpus(std::istream& in, std::string source, const CorpusOptions& options) {
  if (std::ranges::find(check_ids(), options.check) == check_ids().end()) {
    throw GraphError("unknown check \"" + options.check + "\"");
  }
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    lines.push_back(std::move(line));
  }

  CorpusReport report;
  report.source = std::move(source);
  report.check = options.check;
  report.records.resize(lines.size());

  auto work = [&](std::size_t i) {
    VerdictRecord record;
    try {
      Graph g = parse_graph6(lines[i]);
      record = run_check(g, options, i);
    } catch (const ParseError& e) {
      record.check = options.check;
      record.verdict = Verdict::kSkipped;
      record.witnesses = {{"error", e.what()}, {"offset", e.position()}};
    }
    record.graph_id = i;
    report.records[i] = std::move(record);
  };

  const int jobs = options.jobs > 0 ? options.jobs : static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  if (jobs == 1 || lines.size() < 2) {
    for (std::size_t i = 0; i < lines.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (int t = 0; t < jobs; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < lines.size(); i = next++) work(i);
      });
    }
  }

  for (Verdict v : {Verdict::kPass, Verdict::kExempt, Verdict::kViolation, Verdict::kSkippedHypothesis,
                    Verdict::kRefusedSize, Verdict::kSkipped}) {
    report.totals[v] = 0;
  }
  for (const VerdictRecord& r : report.records) ++report.totals[r.verdict];
  return report;
}

CorpusReport run_corpus(const std::filesystem::path& path, const CorpusOptions& options) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read corpus file " + path.string());
  return run_corpus(in, path.string(), options);
}

json to_json(const CorpusReport& report) {
  json totals = json::object();
  for (const auto& [v, count] : report.totals) totals[to_string(v)] = count;
  json records = json::array();
  for (const VerdictRecord& r : report.records) records.push_back(to_json(r));
  return {{"source", report.source}, {"check", report.check}, {"totals", totals}, {"records", records}};
}

int exit_code(const CorpusReport& report) {
  auto count = [&](Verdict v) {
    auto it = report.totals.find(v);
    return it == report.totals.end() ? 0 : it->second;
  };
  if (count(Verdict::kViolation) > 0) return 1;
  if (count(Verdict::kSkipped) > 0) return 2;
  return 0;
}

std::string render_summary(const json& report) {
  std::ostringstream out;
  out << report.value("check", "") << " over " << report.value("source", "") << ": "
      << report.at("records").size() << " graph(s)\n";
  for (const auto& [verdict, count] : report.at("totals").items()) {
    out << "  " << verdict << ": " << count.get<int>() << "\n";
  }
  for (const json& r : report.at("records")) {
    const std::string v = r.at("verdict").get<std::string>();
    if (v == "violation" || v == "skipped") {
      out << "  #" << r.at("graph_id").dump() << " " << v << " " << r.at("witnesses").dump() << "\n";
    }
  }
  return out.str();
}

}  // namespace cyclespec
