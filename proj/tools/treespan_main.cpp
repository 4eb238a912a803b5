#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "treespan/cnf.hpp"
#include "treespan/decider.hpp"
#include "treespan/graph.hpp"
#include "treespan/graph_io.hpp"
#include "treespan/oracles.hpp"
#include "treespan/reduction.hpp"
#include "treespan/stretch.hpp"
#include "treespan/witness.hpp"

namespace {

using namespace treespan;

// Exit codes: 0 success, 1 failed check, 2 parse/usage error,
// 3 precondition violation, 4 provider fault, 5 cap exhausted.
enum ExitCode {
  kOk = 0,
  kCheckFailed = 1,
  kParse = 2,
  kPrecondition = 3,
  kProvider = 4,
  kCap = 5,
};

Vertex resolve_root(const Graph& g, const std::string& spec) {
  try {
    size_t used = 0;
    int v = std::stoi(spec, &used);
    if (used == spec.size()) {
      if (!g.has_vertex(v))
        throw PreconditionError("root vertex " + spec + " out of range");
      return v;
    }
  } catch (const std::invalid_argument&) {
  } catch (const std::out_of_range&) {
  }
  auto v = g.find_label(spec);
  if (!v) throw PreconditionError("no vertex labeled '" + spec + "'");
  return *v;
}

ParseMode mode_of(bool normalize) {
  return normalize ? ParseMode::kNormalize : ParseMode::kStrict;
}

int cmd_gen(const std::string& cnf_path, bool normalize, int h,
            const std::string& out_path, const std::string& registry_path) {
  Formula f = parse_dimacs_file(cnf_path, mode_of(normalize));
  ReductionGraph rg = build_reduction(f, h);
  write_graph_file(out_path, rg.graph);
  write_registry_file(registry_path, rg);
  std::cout << "vertices\t" << rg.graph.vertex_count() << '\n'
            << "edges\t" << rg.graph.edge_count() << '\n'
            << "blocks\t" << rg.block_count() << '\n';
  return kOk;
}

int cmd_witness(const std::string& cnf_path, bool normalize,
                const std::string& graph_path, const std::string& registry_path,
                const std::string& bits, const std::string& out_path) {
  Formula f = parse_dimacs_file(cnf_path, mode_of(normalize));
  ReductionGraph rg = load_reduction(graph_path, registry_path);
  Assignment a = Assignment::from_bits(bits);
  if (a.variable_count() != f.variable_count())
    throw PreconditionError("assignment has " +
                            std::to_string(a.variable_count()) +
                            " bits, formula has " +
                            std::to_string(f.variable_count()) + " variables");
  std::vector<int> chosen;
  SpanningTree t = tree_7_spanner(rg, f, a, nullptr, &chosen);
  write_tree_file(out_path, t);
  std::cout << "tree_edges\t" << t.edges().size() << '\n';
  // Which literal (0..2) anchors the q vertices, per clause.
  std::cout << "tie_break\t";
  for (size_t c = 0; c < chosen.size(); ++c)
    std::cout << (c ? "," : "") << chosen[c];
  std::cout << '\n';
  return kOk;
}

int cmd_verify(const std::string& graph_path, const std::string& tree_path,
               const std::string& root_spec, int stretch_bound) {
  Graph g = read_graph_file(graph_path);
  TreeFile file = read_tree_file(tree_path);
  if (file.host_vertex_count != g.vertex_count()) {
    std::cout << "structural\tfail\tvertex count mismatch\n";
    return kCheckFailed;
  }
  std::string reason;
  auto tree = SpanningTree::try_build(g, std::move(file.edges), &reason);
  if (!tree) {
    std::cout << "structural\tfail\t" << reason << '\n';
    return kCheckFailed;
  }
  std::cout << "structural\tok\n";

  bool ok = true;
  StretchReport report = max_stretch(*tree);
  std::cout << "max_stretch\t" << report.max_stretch << '\n';
  if (report.witness_edge)
    std::cout << "witness_edge\t" << report.witness_edge->first << ' '
              << report.witness_edge->second << '\n';
  if (stretch_bound > 0) {
    bool within = report.max_stretch <= stretch_bound;
    std::cout << "stretch_within_" << stretch_bound << '\t'
              << (within ? "ok" : "fail") << '\n';
    ok = ok && within;
  }
  if (!root_spec.empty()) {
    Vertex root = resolve_root(g, root_spec);
    bool concentrated = is_v_concentrated(*tree, root);
    bool bfs = is_bfs_tree(*tree, root);
    std::cout << "v_concentrated\t" << (concentrated ? "ok" : "fail") << '\n';
    std::cout << "bfs_tree\t" << (bfs ? "ok" : "fail") << '\n';
    ok = ok && concentrated && bfs;
  }
  return ok ? kOk : kCheckFailed;
}

int cmd_extract(const std::string& graph_path, const std::string& registry_path,
                const std::string& tree_path, const std::string& block_spec) {
  ReductionGraph rg = load_reduction(graph_path, registry_path);
  SpanningTree t = read_spanning_tree_file(tree_path, rg.graph);
  int layer = 0, index = 0;
  if (std::sscanf(block_spec.c_str(), "%d,%d", &layer, &index) != 2)
    throw ParseError("--block expects 'i,j'");
  Assignment a = extract_assignment(t, rg, BlockId{layer, index});
  std::cout << "assignment\t" << a.to_bits() << '\n';
  return kOk;
}

int cmd_solve(const std::string& cnf_path, bool normalize,
              const std::string& provider_spec, int m_exponent, int threshold,
              int k, uint64_t seed) {
  Formula f = parse_dimacs_file(cnf_path, mode_of(normalize));
  std::unique_ptr<SpannerProvider> provider;
  if (provider_spec == "bfs") {
    provider = make_bfs_provider(seed);
  } else if (provider_spec == "best-of-k") {
    provider = make_best_of_k_provider(k, seed);
  } else if (provider_spec == "oracle") {
    provider = make_oracle_provider(f, seed);
  } else if (provider_spec.rfind("file:", 0) == 0) {
    TreeFile file = read_tree_file(provider_spec.substr(5));
    provider = make_file_provider(std::move(file.edges));
  } else {
    throw ParseError("unknown provider '" + provider_spec + "'");
  }

  DecisionTrace trace = decide_sat(f, *provider, m_exponent, threshold);
  std::cout << "verdict\t" << (trace.satisfiable ? "YES" : "NO") << '\n';
  if (trace.assignment)
    std::cout << "assignment\t" << trace.assignment->to_bits() << '\n';
  std::cout << "exhaustive\t" << (trace.used_exhaustive ? 1 : 0) << '\n';
  if (!trace.used_exhaustive) {
    std::cout << "height\t" << trace.height << '\n'
              << "provider\t" << provider->name() << '\n'
              << "v_concentrated\t" << (trace.provider_tree_v_concentrated ? 1 : 0)
              << '\n';
    if (trace.yes_block)
      std::cout << "yes_block\t" << trace.yes_block->layer << ','
                << trace.yes_block->index << '\n';
    for (const auto& [layer, witness] : trace.chain)
      std::cout << "chain_layer_" << layer << '\t' << witness.block.layer << ','
                << witness.block.index << '\t' << witness.tree_distance << '\n';
  }
  return kOk;
}

int cmd_oracle(const std::string& what, const std::string& graph_path,
               const std::string& root_spec, uint64_t cap,
               const std::string& out_path) {
  Graph g = read_graph_file(graph_path);
  if (what == "mmst") {
    MmstResult result = exact_mmst(g, cap);
    std::cout << "min_max_stretch\t" << result.min_max_stretch << '\n';
    if (!out_path.empty()) write_tree_file(out_path, result.tree);
    return kOk;
  }
  if (what == "enumerate") {
    uint64_t count = 0;
    for_each_spanning_tree(g, cap, [&](SpanningTree&& t) {
      ++count;
      std::cout << "tree";
      for (const auto& [u, v] : t.edges()) std::cout << ' ' << u << '-' << v;
      std::cout << '\n';
    });
    std::cout << "count\t" << count << '\n';
    return kOk;
  }
  if (what == "concentrated") {
    if (root_spec.empty()) throw ParseError("concentrated requires --root");
    Vertex root = resolve_root(g, root_spec);
    auto trees = enumerate_v_concentrated_trees(g, root, cap);
    for (const auto& t : trees) {
      std::cout << "tree";
      for (const auto& [u, v] : t.edges()) std::cout << ' ' << u << '-' << v;
      std::cout << '\n';
    }
    std::cout << "count\t" << trees.size() << '\n';
    return kOk;
  }
  throw ParseError("unknown oracle '" + what + "'");
}

int cmd_stats(const std::string& cnf_path, bool normalize, int h) {
  Formula f = parse_dimacs_file(cnf_path, mode_of(normalize));
  ReductionSize size =
      reduction_size(f.variable_count(), f.clause_count(), h);
  std::cout << "n\t" << f.variable_count() << '\n'
            << "m\t" << f.clause_count() << '\n'
            << "h\t" << h << '\n'
            << "blocks\t" << size.blocks << '\n'
            << "vertices\t" << size.vertices << '\n'
            << "edges\t" << size.edges << '\n'
            << "vertex_bound\t" << size.vertex_bound << '\n';
  return kOk;
}

int cmd_checkm() {
  if (!verify_wiring_properties()) {
    std::cout << "wiring\tfail\n";
    return kCheckFailed;
  }
  std::cout << "complementary_rows\tok\n";
  std::cout << "covering_subsets_have_complementary_pair\tok\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tree t-spanner gadget toolkit"};
  app.require_subcommand(1);

  uint64_t seed = 0;
  app.add_option("--seed", seed, "seed for all randomized choices");

  std::string cnf_path, graph_path, registry_path, tree_path, out_path;
  std::string root_spec, block_spec, provider_spec = "bfs";
  bool normalize = false;
  int h = 2, stretch_bound = 0, m_exponent = 1;
  int threshold = kDefaultExhaustiveThreshold, best_of = 8;
  uint64_t cap = kDefaultTreeCap;

  auto* gen = app.add_subcommand("gen", "build the reduction graph of a 3-CNF instance");
  gen->set_help_flag("--help", "print help");  // --h is an option below
  gen->add_option("cnf", cnf_path, "DIMACS CNF input")->required();
  gen->add_option("--h", h, "number of layers (> 1)")->required();
  gen->add_option("-o,--output", out_path, "graph output file")->required();
  gen->add_option("--registry", registry_path, "block registry output file")->required();
  gen->add_flag("--normalize", normalize, "normalize clauses while parsing");

  auto* witness = app.add_subcommand("witness", "build the tree 7-spanner of a satisfiable instance");
  witness->add_option("cnf", cnf_path)->required();
  witness->add_option("graph", graph_path)->required();
  witness->add_option("registry", registry_path)->required();
  std::string bits;
  witness->add_option("--assignment", bits, "satisfying assignment as a bit string")->required();
  witness->add_option("-o,--output", out_path, "tree output file")->required();
  witness->add_flag("--normalize", normalize);

  auto* verify = app.add_subcommand("verify", "check a spanning tree against a graph");
  verify->add_option("graph", graph_path)->required();
  verify->add_option("tree", tree_path)->required();
  verify->add_option("--root", root_spec, "also check v-concentration and BFS-ness from this vertex (id or label)");
  verify->add_option("--t", stretch_bound, "require max stretch at most this");

  auto* extract = app.add_subcommand("extract", "read an assignment out of one block");
  extract->add_option("graph", graph_path)->required();
  extract->add_option("registry", registry_path)->required();
  extract->add_option("tree", tree_path)->required();
  extract->add_option("--block", block_spec, "block coordinates 'i,j'")->required();

  auto* solve = app.add_subcommand("solve", "decide satisfiability through the spanner pipeline");
  solve->add_option("cnf", cnf_path)->required();
  solve->add_option("--provider", provider_spec, "bfs | best-of-k | oracle | file:<tree>");
  solve->add_option("--m", m_exponent, "height exponent");
  solve->add_option("--threshold", threshold, "exhaustive-search variable threshold");
  solve->add_option("--k", best_of, "samples for best-of-k");
  solve->add_flag("--normalize", normalize);

  auto* oracle = app.add_subcommand("oracle", "brute-force baselines over all spanning trees");
  std::string oracle_what;
  oracle->add_option("what", oracle_what, "mmst | enumerate | concentrated")->required();
  oracle->add_option("graph", graph_path)->required();
  oracle->add_option("--root", root_spec);
  oracle->add_option("--cap", cap, "enumeration cap");
  oracle->add_option("-o,--output", out_path, "tree output file (mmst)");

  auto* stats = app.add_subcommand("stats", "construction sizes without building");
  stats->set_help_flag("--help", "print help");
  stats->add_option("cnf", cnf_path)->required();
  stats->add_option("--h", h)->required();
  stats->add_flag("--normalize", normalize);

  app.add_subcommand("checkm", "verify the wiring matrix properties");

  // Global options (--seed) may appear after the subcommand.
  for (auto* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (gen->parsed())
      return cmd_gen(cnf_path, normalize, h, out_path, registry_path);
    if (witness->parsed())
      return cmd_witness(cnf_path, normalize, graph_path, registry_path, bits,
                         out_path);
    if (verify->parsed())
      return cmd_verify(graph_path, tree_path, root_spec, stretch_bound);
    if (extract->parsed())
      return cmd_extract(graph_path, registry_path, tree_path, block_spec);
    if (solve->parsed())
      return cmd_solve(cnf_path, normalize, provider_spec, m_exponent,
                       threshold, best_of, seed);
    if (oracle->parsed())
      return cmd_oracle(oracle_what, graph_path, root_spec, cap, out_path);
    if (stats->parsed()) return cmd_stats(cnf_path, normalize, h);
    return cmd_checkm();
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  } catch (const ProviderFault& e) {
    std::cerr << "provider fault: " << e.what() << '\n';
    return kProvider;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kCap;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kPrecondition;
  }
}
