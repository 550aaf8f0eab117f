#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cyclespec/coloring.hpp"
#include "cyclespec/cycles.hpp"
#include "cyclespec/decomposition.hpp"
#include "cyclespec/families.hpp"
#include "cyclespec/graph.hpp"
#include "cyclespec/verify.hpp"

using namespace cyclespec;
using nlohmann::json;

namespace {

constexpr int kExitInput = 2;

struct InputOptions {
  std::string path;
  std::string format = "graph6";
};

struct InputFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw InputFailure("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// A graph6 input may hold many graphs, one per line; an edge list holds one.
std::vector<Graph> read_graphs(const InputOptions& input) {
  const std::string text = slurp(input.path);
  std::vector<Graph> graphs;
  if (input.format == "edgelist") {
    graphs.push_back(from_edge_list(parse_edge_list(text)));
    return graphs;
  }
  std::istringstream lines(text);
  int line_no = 0;
  for (std::string line; std::getline(lines, line);) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      graphs.push_back(parse_graph6(line));
    } catch (const ParseError& e) {
      throw InputFailure("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (graphs.empty()) throw InputFailure("no graph in " + input.path);
  return graphs;
}

json blocks_json(const Graph& g) {
  BlockCutTree tree = block_cut_tree(g);
  json blocks = json::array();
  for (std::size_t i = 0; i < tree.blocks.size(); ++i) {
    blocks.push_back({{"vertices", tree.blocks[i].to_vector()}, {"cut_vertices", tree.incidence[i].to_vector()}});
  }
  json out{{"blocks", blocks},
           {"cut_vertices", tree.cut_vertices.to_vector()},
           {"end_blocks", tree.end_blocks()}};
  if (auto theta = find_theta_subgraph(g)) {
    json paths = json::array();
    for (const Path& p : theta->paths) paths.push_back(to_json(p));
    out["theta"] = {{"u", theta->u}, {"v", theta->v}, {"paths", paths}};
  }
  if (is_connected(g)) {
    GoodBadPartition part = good_bad_partition(g);
    out["good"] = part.good.to_vector();
    out["bad"] = part.bad.to_vector();
  }
  return out;
}

json layers_json(const Graph& g, Vertex root) {
  BfsLayering layering = bfs_layering(g, root);
  json layers = json::array();
  for (std::size_t i = 0; i < layering.layers.size(); ++i) {
    InducedSubgraph layer = induced_subgraph(g, layering.layers[i]);
    json comps = json::array();
    for (VertexSet local : connected_components(layer.graph)) {
      InducedSubgraph comp = induced_subgraph(layer.graph, local);
      std::vector<Vertex> original;
      for (Vertex v : comp.original) original.push_back(layer.original[v]);
      json c{{"vertices", original}, {"bipartite", is_bipartite(comp.graph)}};
      if (!is_bipartite(comp.graph)) {
        GoodBadPartition part = good_bad_partition(comp.graph);
        std::vector<Vertex> good, bad;
        for (Vertex v : part.good) good.push_back(original[v]);
        for (Vertex v : part.bad) bad.push_back(original[v]);
        c["good"] = good;
        c["bad"] = bad;
        c["chromatic_number"] = chromatic_number(comp.graph).chi;
      }
      comps.push_back(c);
    }
    layers.push_back({{"index", i}, {"vertices", layering.layers[i].to_vector()}, {"components", comps}});
  }
  return {{"root", root}, {"parent", layering.parent}, {"layers", layers}};
}

json outcome_json(const ColoringOutcome& outcome) {
  if (const auto* c = std::get_if<Coloring>(&outcome)) {
    return {{"coloring", to_json(*c)}, {"palette", c->palette}};
  }
  return {{"conflict", to_json(std::get<ConflictWitness>(outcome))}};
}

json color_json(const Graph& g, const std::string& mode, Vertex root) {
  if (mode == "chi") {
    ChromaticResult r = chromatic_number(g);
    return {{"chi", r.chi}, {"coloring", to_json(r.witness)}};
  }
  if (mode == "layered5") return outcome_json(layered_five_coloring(g, root));
  return outcome_json(constrained_three_coloring(g, good_bad_partition(g)));
}

json critical_json(const Graph& g, int k) {
  StructuralReport s = structural_criticality_check(g, k - 1);
  json out{{"k", k},
           {"min_degree", s.min_degree},
           {"two_connected", s.two_connected}};
  CriticalityCertificate cert = is_k_critical(g, k);
  out["critical"] = cert.critical;
  out["chi"] = cert.chi;
  out["chi_coloring"] = to_json(cert.chi_witness);
  if (!cert.critical) {
    out["reason"] = cert.reason;
    if (cert.failing_edge) out["failing_edge"] = {cert.failing_edge->u, cert.failing_edge->v};
  } else {
    json edges = json::array();
    for (const EdgeColoring& ec : cert.edge_colorings) {
      edges.push_back({{"edge", {ec.edge.u, ec.edge.v}}, {"coloring", to_json(ec.coloring)}});
    }
    out["edge_colorings"] = edges;
  }
  return out;
}

void add_input(CLI::App* cmd, InputOptions& input) {
  cmd->add_option("input", input.path, "graph file, '-' for stdin")->required();
  cmd->add_option("--format", input.format, "input format")
      ->check(CLI::IsMember({"graph6", "edgelist"}))
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cycle-length spectra, decompositions and theorem checks for small graphs"};
  app.require_subcommand(1);

  InputOptions input;
  int modulus = 4;
  Vertex root = 0;
  std::string mode = "chi";
  int critical_k = 0;

  auto* spectrum = app.add_subcommand("spectrum", "cycle lengths and residues mod K");
  add_input(spectrum, input);
  spectrum->add_option("--mod", modulus, "modulus K >= 2")->capture_default_str();

  auto* opposite = app.add_subcommand("opposite-pair", "search for an odd/even opposite pair");
  add_input(opposite, input);

  auto* blocks = app.add_subcommand("blocks", "blocks, cut vertices, theta subgraph, good/bad vertices");
  add_input(blocks, input);

  auto* layers = app.add_subcommand("layers", "BFS layers with component structure");
  add_input(layers, input);
  layers->add_option("--root", root, "root vertex")->capture_default_str();

  auto* color = app.add_subcommand("color", "colourings");
  add_input(color, input);
  color->add_option("--mode", mode, "colouring mode")
      ->check(CLI::IsMember({"chi", "layered5", "constrained3"}))
      ->capture_default_str();
  color->add_option("--root", root, "root for layered5")->capture_default_str();

  auto* critical = app.add_subcommand("critical", "certify k-criticality");
  add_input(critical, input);
  critical->add_option("--k", critical_k, "k")->required();

  std::string family_name;
  std::vector<int> family_params;
  std::string gen_format = "graph6";
  auto* gen = app.add_subcommand("gen", "generate a family member");
  gen->add_option("family", family_name, "ht | complete | complete_bipartite | complete_multipartite | cycle | path | petersen")
      ->required();
  gen->add_option("params", family_params, "integer parameters");
  gen->add_option("--format", gen_format, "output format")
      ->check(CLI::IsMember({"graph6", "edgelist"}))
      ->capture_default_str();

  CorpusOptions corpus;
  std::string corpus_path;
  std::string out_path;
  bool summary = false;
  auto* verify = app.add_subcommand("verify", "run one check over a graph6 corpus");
  verify->add_option("check", corpus.check, "check identifier")->required()->check(CLI::IsMember(check_ids()));
  verify->add_option("--corpus", corpus_path, "graph6 file, '-' for stdin")->required();
  verify->add_option("--jobs", corpus.jobs, "worker threads, 0 = hardware")->capture_default_str();
  verify->add_option("--limit", corpus.limit, "exactness limit on vertex count")->capture_default_str();
  verify->add_option("--k", corpus.k, "k for longcycle, consecutive, critical_spectrum")->capture_default_str();
  verify->add_option("--seed", corpus.seed, "ab_paths partition seed")->capture_default_str();
  verify->add_option("--partitions", corpus.partitions, "ab_paths partitions per graph")->capture_default_str();
  verify->add_option("--out", out_path, "write the JSON report here instead of stdout");
  verify->add_flag("--summary", summary, "print a readable summary to stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitInput;
  }

  try {
    if (*gen) {
      Graph g = generate({parse_family(family_name), family_params});
      std::cout << (gen_format == "graph6" ? encode_graph6(g) + "\n" : format_edge_list(g));
      return 0;
    }

    if (*verify) {
      CorpusReport report = corpus_path == "-" ? run_corpus(std::cin, "-", corpus) : run_corpus(corpus_path, corpus);
      const json j = to_json(report);
      if (out_path.empty()) {
        std::cout << j.dump() << "\n";
      } else {
        std::ofstream out(out_path);
        if (!out) throw InputFailure("cannot write " + out_path);
        out << j.dump(2) << "\n";
      }
      if (summary) std::cerr << render_summary(j);
      return exit_code(report);
    }

    for (const Graph& g : read_graphs(input)) {
      json out{{"n", g.order()}, {"m", g.size()}};
      if (*spectrum) {
        out["spectrum"] = to_json(cycle_spectrum_mod(g, modulus));
      } else if (*opposite) {
        auto pair = find_opposite_pair(g);
        out["pair"] = pair ? to_json(*pair) : json(nullptr);
      } else if (*blocks) {
        out.update(blocks_json(g));
      } else if (*layers) {
        out.update(layers_json(g, root));
      } else if (*color) {
        out["mode"] = mode;
        out.update(color_json(g, mode, root));
      } else if (*critical) {
        out.update(critical_json(g, critical_k));
      }
      std::cout << out.dump() << "\n";
    }
    return 0;
  } catch (const SizeLimitError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kExitInput;
  } catch (const InputFailure& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitInput;
  } catch (const GraphError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
