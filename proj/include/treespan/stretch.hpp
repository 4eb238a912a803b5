#pragma once

#include <optional>
#include <vector>

#include "treespan/graph.hpp"

namespace treespan {

// Per-edge tree distances over the host edge list. max_stretch is the
// smallest k for which the tree is a tree k-spanner of its host; for an
// unweighted host it equals the largest tree distance between endpoints of
// a host edge.
struct StretchReport {
  int max_stretch = 1;
  std::optional<Edge> witness_edge;         // first host edge attaining max
  std::vector<int> per_edge_tree_distance;  // aligned with host().edges()
};

// Rooted distance oracle over a spanning tree. Queries climb parent links to
// the lowest common ancestor, so a query costs O(tree depth).
class TreeMetric {
 public:
  TreeMetric(const SpanningTree& t, Vertex root);

  int distance(Vertex u, Vertex v) const;
  int depth(Vertex v) const { return depth_[v]; }
  Vertex parent(Vertex v) const { return parent_[v]; }
  Vertex root() const { return root_; }

 private:
  Vertex root_;
  std::vector<Vertex> parent_;
  std::vector<int> depth_;
};

// Parallel kernel: one rooted traversal, then independent LCA queries per
// host edge.
StretchReport max_stretch(const SpanningTree& t);

// Serial reference: one full tree BFS per distinct edge endpoint. Kept for
// testing against the kernel; results are identical.
StretchReport max_stretch_serial(const SpanningTree& t);

// Hop distances inside the tree (ignoring non-tree host edges).
std::vector<int> tree_bfs_distances(const SpanningTree& t, Vertex source);

// True iff for every radius i the subgraph of t induced on the host ball
// N^i[v] is connected.
bool is_v_concentrated(const SpanningTree& t, Vertex v);

// True iff every vertex u != v has a tree neighbor strictly closer to v in
// the host metric; such trees realize all host distances from v.
bool is_bfs_tree(const SpanningTree& t, Vertex v);

// Relaxed concentration: for every d >= 0, all vertices of N^d[v] lie in a
// single component of t induced on N^{d + floor((stretch-1)/2)}[v].
bool is_loosely_concentrated(const SpanningTree& t, Vertex v, int stretch);

}  // namespace treespan
