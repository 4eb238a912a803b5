#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "treespan/cnf.hpp"
#include "treespan/graph.hpp"

namespace treespan {

// Wiring between the six per-clause g-array vertices
// [y, y_c, z, z_c, w, w_c] and the eight q vertices. Rows (1,2), (3,4),
// (5,6) are complementary, and every row subset that covers all eight
// columns contains a complementary pair; both properties are what the
// construction leans on.
inline constexpr int kWiringRows = 6;
inline constexpr int kWiringCols = 8;
inline constexpr int kWiring[kWiringRows][kWiringCols] = {
    {1, 1, 1, 1, 0, 0, 0, 0},
    {0, 0, 0, 0, 1, 1, 1, 1},
    {1, 1, 0, 0, 1, 1, 0, 0},
    {0, 0, 1, 1, 0, 0, 1, 1},
    {1, 0, 1, 0, 1, 0, 1, 0},
    {0, 1, 0, 1, 0, 1, 0, 1},
};

// Brute-forces all 64 row subsets. True iff rows (1,2), (3,4), (5,6) are
// exactly the complementary pairs and every column-covering subset contains
// one of them.
bool verify_wiring_properties();

struct BlockId {
  int layer = 0;  // i, 1-based
  int index = 0;  // j, 1-based within the layer

  bool operator==(const BlockId&) const = default;
  auto operator<=>(const BlockId&) const = default;
};

// Vertex roles of one block. The hub vertices vplus/vminus are shared with
// the parent (path endpoints for the first block, a consecutive q pair of
// the parent block otherwise); all other vertices belong to this block
// alone.
struct BlockInfo {
  BlockId id;
  Vertex vplus = -1;
  Vertex vminus = -1;
  std::vector<Vertex> var_vertex;         // [x-1] -> vertex of variable x
  std::vector<Vertex> clause_var_vertex;  // [(c-1)*3 + k] -> vertex of the
                                          // k-th literal's per-clause copy
  std::vector<Vertex> q_vertex;           // [(c-1)*8 + (r-1)]

  int variable_count() const { return static_cast<int>(var_vertex.size()); }
  int clause_count() const { return static_cast<int>(q_vertex.size()) / 8; }

  Vertex var(int x) const { return var_vertex[x - 1]; }
  Vertex clause_var(int c, int k) const {  // k = 0..2, clause literal order
    return clause_var_vertex[(c - 1) * 3 + k];
  }
  Vertex q(int c, int r) const { return q_vertex[(c - 1) * 8 + (r - 1)]; }
};

// Output of the layered construction: the graph, the block registry, and
// the attachment structure. Block (1,1) hangs off the central path; each
// later block is glued onto a consecutive q pair of its parent by sharing
// those two vertices as its own vplus/vminus.
struct ReductionGraph {
  Graph graph;
  Vertex center = 2;
  int variable_count = 0;
  int clause_count = 0;
  int height = 0;
  // Clause literals (variable and sign, in clause order) replicated by every
  // block; when loading from files the signs are reconstructed from the
  // adjacency of the per-clause variable copies.
  std::vector<Clause> clauses;
  std::vector<BlockInfo> blocks;                  // creation order
  std::vector<std::pair<int, int>> layer_range;   // per layer, [begin, end)

  int block_count() const { return static_cast<int>(blocks.size()); }
  // Index into blocks, or -1 when the id is unknown.
  int block_at(BlockId id) const;

  // Child glued to the (r, r+1) q pair of clause c of blocks[parent_index];
  // -1 when the parent sits in the last layer. r in [1,7].
  int child_block(int parent_index, int c, int r) const;

  struct Attachment {
    int parent_index;
    int clause;
    int r;
  };
  // Where blocks[child_index] is glued; nullopt for the first block.
  std::optional<Attachment> attachment(int child_index) const;
};

// Standalone gadget for one formula copy: 2 + n + 11m vertices (vplus = 0,
// vminus = 1) and 2n + 27m edges. layer/index only affect labels.
std::pair<Graph, BlockInfo> build_block(const Formula& f, int layer,
                                        int index);

// The central path {q1, p1, v, p2, q2}, recovered structurally: v is the
// center, its two neighbors are p1/p2, and the first block's hubs are the
// endpoints.
std::array<Vertex, 5> path_vertices(const ReductionGraph& rg);

inline constexpr long long kMaxReductionVertices = 4'000'000;

// Layered assembly: central path q1,p1,v,p2,q2 plus (7m)^{i-1} blocks in
// layer i, for i = 1..height. Requires height > 1.
ReductionGraph build_reduction(const Formula& f, int height);

struct ReductionSize {
  unsigned long long vertices = 0;
  unsigned long long edges = 0;
  unsigned long long blocks = 0;
  unsigned long long vertex_bound = 0;  // closed-form upper bound
};

// Exact counts for the construction on an n-variable, m-clause instance of
// height h, together with the upper bound
// (n + 88 n^3) * ((56 n^3)^h - 1) / (56 n^3 - 1) + 5.
// Requires n >= 3, 1 <= m <= 8 n^3, h > 1. Throws on 64-bit overflow.
ReductionSize reduction_size(int n, int m, int h);

// Block-registry sidecar: one`b` line per block followed by its `x`, `xc`,
// and `q` role lines.
void write_registry(std::ostream& out, const ReductionGraph& rg);
void write_registry_file(const std::string& path, const ReductionGraph& rg);

// Rebuilds a ReductionGraph from the graph file and its registry sidecar,
// validating the attachment structure.
ReductionGraph read_reduction(std::istream& graph_in,
                              std::istream& registry_in);
ReductionGraph load_reduction(const std::string& graph_path,
                              const std::string& registry_path);

}  // namespace treespan
