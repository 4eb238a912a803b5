#include "treespan/decider.hpp"

#include <algorithm>
#include <cmath>

#include "treespan/oracles.hpp"
#include "treespan/stretch.hpp"
#include "treespan/witness.hpp"

namespace treespan {

namespace {

class BfsProvider : public SpannerProvider {
 public:
  explicit BfsProvider(uint64_t seed) : seed_(seed) {}
  std::vector<Edge> build_tree(const ReductionGraph& rg, Vertex center) override {
    return sample_bfs_tree(rg.graph, center, seed_).edges();
  }
  std::string name() const override { return "bfs"; }

 private:
  uint64_t seed_;
};

class BestOfKProvider : public SpannerProvider {
 public:
  BestOfKProvider(int k, uint64_t seed) : k_(k), seed_(seed) {
    if (k_ < 1) throw PreconditionError("best-of-k: k must be positive");
  }

  std::vector<Edge> build_tree(const ReductionGraph& rg, Vertex center) override {
    std::vector<int> stretch(k_);
    std::vector<SpanningTree> trees;
    trees.reserve(k_);
    for (int i = 0; i < k_; ++i)
      trees.push_back(sample_bfs_tree(rg.graph, center, seed_ + i));
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < k_; ++i) stretch[i] = max_stretch(trees[i]).max_stretch;
    int best = 0;
    for (int i = 1; i < k_; ++i)
      if (stretch[i] < stretch[best]) best = i;
    return trees[best].edges();
  }
  std::string name() const override { return "best-of-k"; }

 private:
  int k_;
  uint64_t seed_;
};

class OracleProvider : public SpannerProvider {
 public:
  OracleProvider(Formula f, uint64_t seed) : f_(std::move(f)), seed_(seed) {}

  std::vector<Edge> build_tree(const ReductionGraph& rg, Vertex center) override {
    auto a = exhaustive_solve(f_, kMaxExhaustiveThreshold);
    if (a) return tree_7_spanner(rg, f_, *a).edges();
    return sample_bfs_tree(rg.graph, center, seed_).edges();
  }
  std::string name() const override { return "oracle"; }

 private:
  Formula f_;
  uint64_t seed_;
};

class FileProvider : public SpannerProvider {
 public:
  explicit FileProvider(std::vector<Edge> edges) : edges_(std::move(edges)) {}
  std::vector<Edge> build_tree(const ReductionGraph&, Vertex) override {
    return edges_;
  }
  std::string name() const override { return "file"; }

 private:
  std::vector<Edge> edges_;
};

}  // namespace

std::unique_ptr<SpannerProvider> make_bfs_provider(uint64_t seed) {
  return std::make_unique<BfsProvider>(seed);
}
std::unique_ptr<SpannerProvider> make_best_of_k_provider(int k, uint64_t seed) {
  return std::make_unique<BestOfKProvider>(k, seed);
}
std::unique_ptr<SpannerProvider> make_oracle_provider(Formula f, uint64_t seed) {
  return std::make_unique<OracleProvider>(std::move(f), seed);
}
std::unique_ptr<SpannerProvider> make_file_provider(std::vector<Edge> edges) {
  return std::make_unique<FileProvider>(std::move(edges));
}

Assignment extract_assignment(const SpanningTree& t, const ReductionGraph& rg,
                              int block_index) {
  if (block_index < 0 || block_index >= rg.block_count())
    throw PreconditionError("extract: unknown block");
  if (&t.host() != &rg.graph)
    throw PreconditionError("extract: tree does not span the reduction graph");
  const BlockInfo& block = rg.blocks[block_index];
  Assignment a = Assignment::from_index(0, rg.variable_count);
  for (int x = 1; x <= rg.variable_count; ++x)
    a.set(x, t.has_edge(block.var(x), block.vplus));
  return a;
}

Assignment extract_assignment(const SpanningTree& t, const ReductionGraph& rg,
                              BlockId id) {
  int index = rg.block_at(id);
  if (index < 0)
    throw PreconditionError("extract: unknown block (" +
                            std::to_string(id.layer) + ", " +
                            std::to_string(id.index) + ")");
  return extract_assignment(t, rg, index);
}

namespace {

std::string block_name(const BlockInfo& b) {
  return "block (" + std::to_string(b.id.layer) + ", " +
         std::to_string(b.id.index) + ")";
}

// Tree-parent hub of a q vertex: q must have exactly one tree neighbor among
// the six g-array vertices of its clause, and that vertex exactly one tree
// neighbor among the hubs.
Vertex q_side(const SpanningTree& t, const ReductionGraph& rg,
              const BlockInfo& block, int c, int r) {
  Vertex g[6];
  for (int k = 0; k < 3; ++k) {
    g[2 * k] = block.var(rg.clauses[c - 1].literals[k].var);
    g[2 * k + 1] = block.clause_var(c, k);
  }
  Vertex attach = -1;
  for (Vertex w : t.neighbors(block.q(c, r))) {
    if (std::find(std::begin(g), std::end(g), w) == std::end(g)) continue;
    if (attach >= 0)
      throw PreconditionError("distance chain: q vertex " +
                              std::to_string(block.q(c, r)) + " of " +
                              block_name(block) +
                              " attaches to two g-array vertices");
    attach = w;
  }
  if (attach < 0)
    throw PreconditionError("distance chain: q vertex " +
                            std::to_string(block.q(c, r)) + " of " +
                            block_name(block) +
                            " has no tree edge into its g-array");
  Vertex side = -1;
  for (Vertex w : t.neighbors(attach)) {
    if (w != block.vplus && w != block.vminus) continue;
    if (side >= 0)
      throw PreconditionError("distance chain: vertex " +
                              std::to_string(attach) + " of " +
                              block_name(block) + " attaches to both hubs");
    side = w;
  }
  if (side < 0)
    throw PreconditionError("distance chain: vertex " + std::to_string(attach) +
                            " of " + block_name(block) +
                            " has no tree edge to a hub");
  return side;
}

}  // namespace

std::map<int, ChainWitness> verify_distance_chain(const SpanningTree& t,
                                                  const ReductionGraph& rg) {
  if (&t.host() != &rg.graph)
    throw PreconditionError("distance chain: tree does not span the reduction graph");
  if (!is_v_concentrated(t, rg.center))
    throw PreconditionError("distance chain: tree is not v-concentrated");

  const Formula f(rg.variable_count, rg.clauses);
  std::vector<Assignment> extracted(rg.block_count());
  const int blocks = rg.block_count();
#pragma omp parallel for schedule(static)
  for (int k = 0; k < blocks; ++k) extracted[k] = extract_assignment(t, rg, k);
  for (int k = 0; k < blocks; ++k) {
    if (evaluate(f, extracted[k]))
      throw PreconditionError(
          "distance chain: assignment extracted from " +
          block_name(rg.blocks[k]) + " satisfies the formula");
  }

  TreeMetric metric(t, rg.center);
  std::map<int, ChainWitness> chain;
  int current = 0;  // block (1,1)
  {
    const BlockInfo& b = rg.blocks[current];
    int d = metric.distance(b.vplus, b.vminus);
    if (d < 4)
      throw PreconditionError("distance chain: hub distance of " +
                              block_name(b) + " is below 4");
    chain[1] = ChainWitness{b.id, d};
  }

  for (int layer = 2; layer <= rg.height; ++layer) {
    const BlockInfo& block = rg.blocks[current];
    const Assignment& a = extracted[current];
    int false_clause = 0;
    for (int c = 1; c <= rg.clause_count; ++c) {
      if (!clause_satisfied(rg.clauses[c - 1], a)) {
        false_clause = c;
        break;
      }
    }
    // Unreachable: every extracted assignment falsifies some clause.
    if (false_clause == 0)
      throw Error("distance chain: no false clause in " + block_name(block));

    // The wiring forces both hubs to appear among the q attachments of a
    // false clause, so some consecutive pair straddles the hubs.
    Vertex prev = q_side(t, rg, block, false_clause, 1);
    int straddle = 0;
    for (int r = 2; r <= 8; ++r) {
      Vertex side = q_side(t, rg, block, false_clause, r);
      if (side != prev) {
        straddle = r - 1;
        break;
      }
      prev = side;
    }
    if (straddle == 0)
      throw Error("distance chain: q vertices of clause " +
                  std::to_string(false_clause) + " in " + block_name(block) +
                  " all attach to one hub");

    int d = metric.distance(block.q(false_clause, straddle),
                            block.q(false_clause, straddle + 1));
    if (d < 4 * layer)
      throw Error("distance chain: witness distance " + std::to_string(d) +
                  " at layer " + std::to_string(layer) + " is below " +
                  std::to_string(4 * layer));
    current = rg.child_block(current, false_clause, straddle);
    chain[layer] = ChainWitness{rg.blocks[current].id, d};
  }
  return chain;
}

DecisionTrace decide_sat(const Formula& f, SpannerProvider& provider,
                         int m_exponent, int exhaustive_threshold) {
  if (m_exponent < 1)
    throw PreconditionError("decide: m exponent must be positive");
  if (exhaustive_threshold < 0 ||
      exhaustive_threshold > kMaxExhaustiveThreshold)
    throw PreconditionError("decide: exhaustive threshold out of range");

  DecisionTrace trace;
  if (f.variable_count() <= exhaustive_threshold) {
    trace.used_exhaustive = true;
    auto a = exhaustive_solve(f, exhaustive_threshold);
    trace.satisfiable = a.has_value();
    trace.assignment = std::move(a);
    return trace;
  }

  const double raw =
      std::pow(std::log2(static_cast<double>(f.variable_count())),
               static_cast<double>(m_exponent));
  if (!(raw < 1e9))
    throw PreconditionError("decide: requested height is astronomically large");
  trace.height = std::max(2, static_cast<int>(std::ceil(raw)));

  ReductionGraph rg = build_reduction(f, trace.height);
  std::vector<Edge> claimed = provider.build_tree(rg, rg.center);
  std::string reason;
  auto tree = SpanningTree::try_build(rg.graph, std::move(claimed), &reason);
  if (!tree)
    throw ProviderFault("provider '" + provider.name() +
                        "' did not return a spanning tree: " + reason);
  trace.provider_tree_v_concentrated = is_v_concentrated(*tree, rg.center);

  const int blocks = rg.block_count();
  std::vector<Assignment> extracted(blocks);
#pragma omp parallel for schedule(static)
  for (int k = 0; k < blocks; ++k)
    extracted[k] = extract_assignment(*tree, rg, k);

  int hit = -1;
  for (int k = 0; k < blocks && hit < 0; ++k)
    if (evaluate(f, extracted[k])) hit = k;

  const int examined = hit < 0 ? blocks : hit + 1;
  trace.per_block.reserve(examined);
  for (int k = 0; k < examined; ++k)
    trace.per_block.emplace_back(rg.blocks[k].id, extracted[k]);

  if (hit >= 0) {
    trace.satisfiable = true;
    trace.assignment = extracted[hit];
    trace.yes_block = rg.blocks[hit].id;
  } else if (trace.provider_tree_v_concentrated) {
    trace.chain = verify_distance_chain(*tree, rg);
  }
  return trace;
}

}  // namespace treespan
