#include "treespan/stretch.hpp"

#include <algorithm>
#include <queue>

#include "treespan/dsu.hpp"

namespace treespan {

TreeMetric::TreeMetric(const SpanningTree& t, Vertex root) : root_(root) {
  const int n = t.vertex_count();
  if (root < 0 || root >= n)
    throw PreconditionError("tree metric: root out of range");
  parent_.assign(n, -1);
  depth_.assign(n, -1);
  std::queue<Vertex> queue;
  depth_[root] = 0;
  queue.push(root);
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop();
    for (Vertex w : t.neighbors(u)) {
      if (depth_[w] < 0) {
        depth_[w] = depth_[u] + 1;
        parent_[w] = u;
        queue.push(w);
      }
    }
  }
}

int TreeMetric::distance(Vertex u, Vertex v) const {
  int d = 0;
  while (depth_[u] > depth_[v]) {
    u = parent_[u];
    ++d;
  }
  while (depth_[v] > depth_[u]) {
    v = parent_[v];
    ++d;
  }
  while (u != v) {
    u = parent_[u];
    v = parent_[v];
    d += 2;
  }
  return d;
}

namespace {

StretchReport report_from_distances(const Graph& host, std::vector<int> dist) {
  StretchReport report;
  report.per_edge_tree_distance = std::move(dist);
  report.max_stretch = 1;
  for (size_t i = 0; i < report.per_edge_tree_distance.size(); ++i) {
    if (report.per_edge_tree_distance[i] > report.max_stretch) {
      report.max_stretch = report.per_edge_tree_distance[i];
      report.witness_edge = host.edges()[i];
    }
  }
  if (!report.witness_edge && !host.edges().empty())
    report.witness_edge = host.edges().front();
  return report;
}

}  // namespace

StretchReport max_stretch(const SpanningTree& t) {
  const Graph& host = t.host();
  const auto& edges = host.edges();
  TreeMetric metric(t, 0);
  std::vector<int> dist(edges.size(), 0);
  const int m = static_cast<int>(edges.size());
#pragma omp parallel for schedule(static)
  for (int i = 0; i < m; ++i)
    dist[i] = metric.distance(edges[i].first, edges[i].second);
  return report_from_distances(host, std::move(dist));
}

StretchReport max_stretch_serial(const SpanningTree& t) {
  const Graph& host = t.host();
  const auto& edges = host.edges();
  std::vector<int> dist(edges.size(), 0);
  // Host edges are sorted by smaller endpoint, so walking them grouped by
  // first endpoint needs a single tree BFS per distinct endpoint.
  size_t i = 0;
  while (i < edges.size()) {
    Vertex source = edges[i].first;
    auto from_source = tree_bfs_distances(t, source);
    while (i < edges.size() && edges[i].first == source) {
      dist[i] = from_source[edges[i].second];
      ++i;
    }
  }
  return report_from_distances(host, std::move(dist));
}

std::vector<int> tree_bfs_distances(const SpanningTree& t, Vertex source) {
  const int n = t.vertex_count();
  if (source < 0 || source >= n)
    throw PreconditionError("tree bfs: source out of range");
  std::vector<int> dist(n, -1);
  std::queue<Vertex> queue;
  dist[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop();
    for (Vertex w : t.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push(w);
      }
    }
  }
  return dist;
}

namespace {

// Vertices of the host sorted by distance from v, with level boundaries.
struct LevelOrder {
  std::vector<int> level;            // host distance per vertex
  std::vector<Vertex> by_level;      // vertices sorted by level, then id
  std::vector<int> level_begin;      // index of first vertex of each level
  int eccentricity = 0;
};

LevelOrder level_order(const Graph& host, Vertex v) {
  LevelOrder order;
  order.level = bfs_distances(host, v);
  order.eccentricity =
      *std::max_element(order.level.begin(), order.level.end());
  order.by_level.resize(host.vertex_count());
  std::vector<int> count(order.eccentricity + 2, 0);
  for (int lvl : order.level) ++count[lvl + 1];
  for (int i = 0; i <= order.eccentricity; ++i) count[i + 1] += count[i];
  order.level_begin = count;
  std::vector<int> cursor(count.begin(), count.end() - 1);
  for (Vertex u = 0; u < host.vertex_count(); ++u)
    order.by_level[cursor[order.level[u]]++] = u;
  return order;
}

}  // namespace

bool is_v_concentrated(const SpanningTree& t, Vertex v) {
  const Graph& host = t.host();
  if (!host.has_vertex(v))
    throw PreconditionError("is_v_concentrated: vertex out of range");
  auto order = level_order(host, v);

  // Grow the ball one level at a time. Vertices within a level are added in
  // ascending id order, so a tree edge is merged exactly once: when its
  // later endpoint enters the ball.
  Dsu dsu(host.vertex_count());
  int in_ball = 0;
  int merges = 0;
  for (int radius = 0; radius <= order.eccentricity; ++radius) {
    for (int i = order.level_begin[radius]; i < order.level_begin[radius + 1];
         ++i) {
      Vertex u = order.by_level[i];
      ++in_ball;
      for (Vertex w : t.neighbors(u)) {
        bool w_already_in =
            order.level[w] < radius || (order.level[w] == radius && w < u);
        if (w_already_in && dsu.merge(u, w)) ++merges;
      }
    }
    if (in_ball - merges != 1) return false;
  }
  return true;
}

bool is_bfs_tree(const SpanningTree& t, Vertex v) {
  const Graph& host = t.host();
  if (!host.has_vertex(v))
    throw PreconditionError("is_bfs_tree: vertex out of range");
  auto level = bfs_distances(host, v);
  for (Vertex u = 0; u < host.vertex_count(); ++u) {
    if (u == v) continue;
    bool has_closer = false;
    for (Vertex w : t.neighbors(u)) {
      if (level[w] == level[u] - 1) {
        has_closer = true;
        break;
      }
    }
    if (!has_closer) return false;
  }
  return true;
}

bool is_loosely_concentrated(const SpanningTree& t, Vertex v, int stretch) {
  const Graph& host = t.host();
  if (!host.has_vertex(v))
    throw PreconditionError("is_loosely_concentrated: vertex out of range");
  if (stretch < 1)
    throw PreconditionError("is_loosely_concentrated: stretch must be >= 1");
  const int slack = (stretch - 1) / 2;
  auto order = level_order(host, v);

  // The outer ball N^{d+slack} grows with d, so one growing union-find
  // serves every query.
  Dsu dsu(host.vertex_count());
  int grown_to = -1;  // largest level added to the union-find
  auto grow = [&](int target) {
    target = std::min(target, order.eccentricity);
    while (grown_to < target) {
      ++grown_to;
      for (int i = order.level_begin[grown_to];
           i < order.level_begin[grown_to + 1]; ++i) {
        Vertex u = order.by_level[i];
        for (Vertex w : t.neighbors(u))
          if (order.level[w] <= grown_to) dsu.merge(u, w);
      }
    }
  };

  for (int d = 0; d <= order.eccentricity; ++d) {
    grow(d + slack);
    int rep = dsu.find(v);
    for (int i = 0; i < order.level_begin[d + 1]; ++i)
      if (dsu.find(order.by_level[i]) != rep) return false;
  }
  return true;
}

}  // namespace treespan
