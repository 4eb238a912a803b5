#include "treespan/graph.hpp"

#include <algorithm>
#include <queue>

#include "treespan/dsu.hpp"

namespace treespan {

Graph::Graph(int vertex_count, std::vector<Edge> edges,
             std::vector<std::string> labels)
    : vertex_count_(vertex_count),
      edges_(std::move(edges)),
      labels_(std::move(labels)) {
  if (vertex_count_ < 0)
    throw PreconditionError("graph: negative vertex count");
  if (!labels_.empty() && static_cast<int>(labels_.size()) != vertex_count_)
    throw PreconditionError("graph: label table size does not match vertex count");

  for (auto& e : edges_) {
    if (e.first > e.second) std::swap(e.first, e.second);
    if (e.first == e.second)
      throw PreconditionError("graph: self-loop at vertex " +
                              std::to_string(e.first));
    if (e.first < 0 || e.second >= vertex_count_)
      throw PreconditionError("graph: edge endpoint out of range: (" +
                              std::to_string(e.first) + ", " +
                              std::to_string(e.second) + ")");
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end())
    throw PreconditionError("graph: duplicate edge (" +
                            std::to_string(dup->first) + ", " +
                            std::to_string(dup->second) + ")");

  adj_offset_.assign(vertex_count_ + 1, 0);
  for (const auto& [u, v] : edges_) {
    ++adj_offset_[u + 1];
    ++adj_offset_[v + 1];
  }
  for (int i = 0; i < vertex_count_; ++i) adj_offset_[i + 1] += adj_offset_[i];
  adj_.resize(edges_.size() * 2);
  std::vector<int> cursor(adj_offset_.begin(), adj_offset_.end() - 1);
  for (const auto& [u, v] : edges_) {
    adj_[cursor[u]++] = v;
    adj_[cursor[v]++] = u;
  }
  // Neighbor lists come out sorted because the edge list is sorted by
  // (min, max); the second pass inserts the smaller endpoint in order too.
  for (int v = 0; v < vertex_count_; ++v) {
    auto s = adj_.begin() + adj_offset_[v];
    auto e = adj_.begin() + adj_offset_[v + 1];
    if (!std::is_sorted(s, e)) std::sort(s, e);
  }
}

int Graph::edge_index(Vertex u, Vertex v) const {
  Edge e = make_edge(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return -1;
  return static_cast<int>(it - edges_.begin());
}

const std::string& Graph::label(Vertex v) const {
  static const std::string kEmpty;
  if (!has_vertex(v))
    throw PreconditionError("label: vertex " + std::to_string(v) +
                            " out of range");
  if (labels_.empty()) return kEmpty;
  return labels_[v];
}

std::optional<Vertex> Graph::find_label(const std::string& label) const {
  for (int v = 0; v < static_cast<int>(labels_.size()); ++v)
    if (labels_[v] == label) return v;
  return std::nullopt;
}

std::vector<int> bfs_distances(const Graph& g, Vertex v) {
  if (!g.has_vertex(v))
    throw PreconditionError("bfs: source vertex " + std::to_string(v) +
                            " out of range");
  std::vector<int> dist(g.vertex_count(), -1);
  std::queue<Vertex> queue;
  dist[v] = 0;
  queue.push(v);
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push(w);
      }
    }
  }
  for (int u = 0; u < g.vertex_count(); ++u) {
    if (dist[u] < 0)
      throw PreconditionError("bfs: graph is disconnected; vertex " +
                              std::to_string(u) + " unreachable from " +
                              std::to_string(v));
  }
  return dist;
}

std::vector<Vertex> neighborhood(const Graph& g, Vertex v, int radius) {
  if (!g.has_vertex(v))
    throw PreconditionError("neighborhood: vertex " + std::to_string(v) +
                            " out of range");
  if (radius < 0)
    throw PreconditionError("neighborhood: negative radius");
  std::vector<int> dist(g.vertex_count(), -1);
  std::queue<Vertex> queue;
  dist[v] = 0;
  queue.push(v);
  std::vector<Vertex> ball{v};
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop();
    if (dist[u] == radius) continue;
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push(w);
        ball.push_back(w);
      }
    }
  }
  std::sort(ball.begin(), ball.end());
  return ball;
}

int eccentricity(const Graph& g, Vertex v) {
  auto dist = bfs_distances(g, v);
  return *std::max_element(dist.begin(), dist.end());
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() <= 1) return true;
  std::vector<char> seen(g.vertex_count(), 0);
  std::queue<Vertex> queue;
  seen[0] = 1;
  queue.push(0);
  int reached = 1;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop();
    for (Vertex w : g.neighbors(u)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        queue.push(w);
      }
    }
  }
  return reached == g.vertex_count();
}

SpanningTree::SpanningTree(const Graph& host, std::vector<Edge> tree_edges) {
  std::string reason;
  auto t = try_build(host, std::move(tree_edges), &reason);
  if (!t) throw PreconditionError("spanning tree: " + reason);
  *this = std::move(*t);
}

std::optional<SpanningTree> SpanningTree::try_build(
    const Graph& host, std::vector<Edge> tree_edges, std::string* reason) {
  auto fail = [&](const std::string& why) -> std::optional<SpanningTree> {
    if (reason) *reason = why;
    return std::nullopt;
  };
  const int n = host.vertex_count();
  if (n == 0) return fail("host graph has no vertices");

  for (auto& e : tree_edges) {
    if (e.first > e.second) std::swap(e.first, e.second);
    if (e.first < 0 || e.second >= n || e.first == e.second)
      return fail("edge (" + std::to_string(e.first) + ", " +
                  std::to_string(e.second) + ") is not a valid host edge");
    if (!host.has_edge(e.first, e.second))
      return fail("edge (" + std::to_string(e.first) + ", " +
                  std::to_string(e.second) + ") is not an edge of the host");
  }
  if (static_cast<int>(tree_edges.size()) != n - 1)
    return fail("expected " + std::to_string(n - 1) + " edges, got " +
                std::to_string(tree_edges.size()));

  Dsu dsu(n);
  for (const auto& [u, v] : tree_edges) {
    if (!dsu.merge(u, v))
      return fail("edges contain a cycle through (" + std::to_string(u) +
                  ", " + std::to_string(v) + ")");
  }
  if (dsu.components() != 1) return fail("edges do not span every vertex");

  SpanningTree t;
  t.host_ = &host;
  std::sort(tree_edges.begin(), tree_edges.end());
  t.edges_ = std::move(tree_edges);
  t.build_adjacency();
  return t;
}

void SpanningTree::build_adjacency() {
  const int n = host_->vertex_count();
  adj_offset_.assign(n + 1, 0);
  for (const auto& [u, v] : edges_) {
    ++adj_offset_[u + 1];
    ++adj_offset_[v + 1];
  }
  for (int i = 0; i < n; ++i) adj_offset_[i + 1] += adj_offset_[i];
  adj_.resize(edges_.size() * 2);
  std::vector<int> cursor(adj_offset_.begin(), adj_offset_.end() - 1);
  for (const auto& [u, v] : edges_) {
    adj_[cursor[u]++] = v;
    adj_[cursor[v]++] = u;
  }
  for (int v = 0; v < n; ++v)
    std::sort(adj_.begin() + adj_offset_[v], adj_.begin() + adj_offset_[v + 1]);
}

bool SpanningTree::has_edge(Vertex u, Vertex v) const {
  Edge e = make_edge(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

}  // namespace treespan
