#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "treespan/errors.hpp"

namespace treespan {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;  // stored with first < second

inline Edge make_edge(Vertex u, Vertex v) {
  return u < v ? Edge{u, v} : Edge{v, u};
}

// Immutable undirected simple graph on vertices 0..n-1, with optional
// per-vertex text labels. All operations on it are pure; instances are safe
// to share across threads.
class Graph {
 public:
  Graph() : Graph(0, {}) {}
  Graph(int vertex_count, std::vector<Edge> edges,
        std::vector<std::string> labels = {});

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + adj_offset_[v], adj_.data() + adj_offset_[v + 1]};
  }
  int degree(Vertex v) const { return adj_offset_[v + 1] - adj_offset_[v]; }

  bool has_vertex(Vertex v) const { return v >= 0 && v < vertex_count_; }
  bool has_edge(Vertex u, Vertex v) const { return edge_index(u, v) >= 0; }
  // Position of the normalized edge in edges(), or -1.
  int edge_index(Vertex u, Vertex v) const;

  bool has_labels() const { return !labels_.empty(); }
  const std::string& label(Vertex v) const;
  std::optional<Vertex> find_label(const std::string& label) const;

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;          // sorted ascending
  std::vector<std::string> labels_;  // empty, or one entry per vertex
  std::vector<int> adj_offset_;
  std::vector<Vertex> adj_;
};

// Exact hop distances from v. Throws PreconditionError when v is out of
// range or some vertex is unreachable from v (the message names one).
std::vector<int> bfs_distances(const Graph& g, Vertex v);

// Vertices at distance <= radius from v, ascending.
std::vector<Vertex> neighborhood(const Graph& g, Vertex v, int radius);

int eccentricity(const Graph& g, Vertex v);

bool is_connected(const Graph& g);

// Spanning tree of a host graph. Construction validates structure: every
// tree edge is a host edge, there are exactly n-1 of them, and they are
// acyclic and spanning. The host must outlive the tree.
class SpanningTree {
 public:
  SpanningTree(const Graph& host, std::vector<Edge> tree_edges);

  // Non-throwing variant for untrusted edge sets; on failure returns nullopt
  // and, when given, stores the reason.
  static std::optional<SpanningTree> try_build(const Graph& host,
                                               std::vector<Edge> tree_edges,
                                               std::string* reason = nullptr);

  const Graph& host() const { return *host_; }
  int vertex_count() const { return host_->vertex_count(); }
  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + adj_offset_[v], adj_.data() + adj_offset_[v + 1]};
  }
  bool has_edge(Vertex u, Vertex v) const;

  bool operator==(const SpanningTree& other) const {
    return host_ == other.host_ && edges_ == other.edges_;
  }

 private:
  SpanningTree() = default;
  void build_adjacency();

  const Graph* host_ = nullptr;
  std::vector<Edge> edges_;  // sorted ascending
  std::vector<int> adj_offset_;
  std::vector<Vertex> adj_;
};

}  // namespace treespan
