#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "treespan/cnf.hpp"
#include "treespan/graph.hpp"
#include "treespan/reduction.hpp"

namespace treespan {

// Produces a spanning tree of the reduction graph that is claimed to be
// v-concentrated. The block decomposition travels with the graph, matching
// how the decision pipeline hands its input around. Returned edges are
// validated by the pipeline, never trusted; anything that is not a spanning
// tree is reported as a provider fault.
class SpannerProvider {
 public:
  virtual ~SpannerProvider() = default;
  virtual std::vector<Edge> build_tree(const ReductionGraph& rg,
                                       Vertex center) = 0;
  virtual std::string name() const = 0;
};

// Seeded BFS tree from the center.
std::unique_ptr<SpannerProvider> make_bfs_provider(uint64_t seed);

// Best of k seeded BFS trees, by max stretch; ties go to the earliest
// sample.
std::unique_ptr<SpannerProvider> make_best_of_k_provider(int k, uint64_t seed);

// Testing-only: solves the formula exhaustively. Satisfiable instances yield
// the witness 7-spanner, unsatisfiable ones a seeded BFS tree.
std::unique_ptr<SpannerProvider> make_oracle_provider(Formula f, uint64_t seed);

// Replays a fixed edge set (e.g. a tree computed by an external tool).
std::unique_ptr<SpannerProvider> make_file_provider(std::vector<Edge> edges);

// Per-block assignment readout: a(x) = 1 exactly when the edge from the
// block's vertex of x to its vplus hub is in the tree; everything else,
// including a missing vminus edge, reads as 0.
Assignment extract_assignment(const SpanningTree& t, const ReductionGraph& rg,
                              int block_index);
Assignment extract_assignment(const SpanningTree& t, const ReductionGraph& rg,
                              BlockId id);

struct ChainWitness {
  BlockId block;
  int tree_distance = 0;  // d_T between the block's hubs
};

// Induction witnesses: for each layer i a block whose hubs are at tree
// distance >= 4i. Requires a v-concentrated tree all of whose per-block
// extracted assignments falsify the encoded formula; violations raise
// PreconditionError naming the offender.
std::map<int, ChainWitness> verify_distance_chain(const SpanningTree& t,
                                                  const ReductionGraph& rg);

struct DecisionTrace {
  bool satisfiable = false;
  std::optional<Assignment> assignment;  // set on YES
  std::optional<BlockId> yes_block;      // block whose extraction satisfied
  bool used_exhaustive = false;
  int height = 0;                        // 0 when the exhaustive branch ran
  bool provider_tree_v_concentrated = false;
  std::vector<std::pair<BlockId, Assignment>> per_block;  // examined blocks
  std::map<int, ChainWitness> chain;  // filled on NO for concentrated trees
};

// Decision pipeline: with n at most exhaustive_threshold the instance is
// solved exhaustively; otherwise the reduction of height
// max(2, ceil((log2 n)^m_exponent)) is built, the provider's tree is
// validated, and per-block extraction decides. The first satisfying block in
// registry order wins.
DecisionTrace decide_sat(const Formula& f, SpannerProvider& provider,
                         int m_exponent = 1,
                         int exhaustive_threshold = kDefaultExhaustiveThreshold);

}  // namespace treespan
