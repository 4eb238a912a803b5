#include "treespan/oracles.hpp"

#include <algorithm>

#include "treespan/dsu.hpp"
#include "treespan/rng.hpp"
#include "treespan/stretch.hpp"

namespace treespan {

namespace {

// Backtracking over the sorted edge list: at position i either take edge i
// (if it closes no cycle) or skip it (if the remaining edges still connect
// everything). Each spanning tree corresponds to exactly one include set, so
// trees are visited once each, in lexicographic order of their edge sets.
class TreeEnumerator {
 public:
  TreeEnumerator(const Graph& g, uint64_t cap,
                 const std::function<void(SpanningTree&&)>& visit)
      : g_(g), cap_(cap), visit_(visit), dsu_(g.vertex_count()) {
    chosen_.reserve(g.vertex_count() - 1);
  }

  uint64_t run() {
    if (g_.vertex_count() == 0)
      throw PreconditionError("enumeration: empty graph");
    if (!is_connected(g_))
      throw PreconditionError("enumeration: graph is disconnected");
    recurse(0);
    return count_;
  }

 private:
  void recurse(size_t i) {
    if (static_cast<int>(chosen_.size()) == g_.vertex_count() - 1) {
      if (count_ == cap_)
        throw CapExceeded("enumeration: more than " + std::to_string(cap_) +
                          " spanning trees");
      ++count_;
      visit_(SpanningTree(g_, chosen_));
      return;
    }
    if (i == g_.edges().size()) return;
    const auto& [u, v] = g_.edges()[i];

    if (!dsu_.same(u, v)) {
      size_t mark = dsu_.mark();
      dsu_.merge(u, v);
      chosen_.push_back(g_.edges()[i]);
      recurse(i + 1);
      chosen_.pop_back();
      dsu_.rollback(mark);
    }
    if (still_connected_without(i)) recurse(i + 1);
  }

  // Can the chosen edges plus edges after position i still span?
  bool still_connected_without(size_t i) {
    Dsu probe(g_.vertex_count());
    for (const auto& [u, v] : chosen_) probe.merge(u, v);
    for (size_t k = i + 1; k < g_.edges().size(); ++k)
      probe.merge(g_.edges()[k].first, g_.edges()[k].second);
    return probe.components() == 1;
  }

  const Graph& g_;
  uint64_t cap_;
  const std::function<void(SpanningTree&&)>& visit_;
  RollbackDsu dsu_;
  std::vector<Edge> chosen_;
  uint64_t count_ = 0;
};

}  // namespace

void for_each_spanning_tree(const Graph& g, uint64_t cap,
                            const std::function<void(SpanningTree&&)>& visit) {
  TreeEnumerator(g, cap, visit).run();
}

std::vector<SpanningTree> enumerate_spanning_trees(const Graph& g,
                                                   uint64_t cap) {
  std::vector<SpanningTree> trees;
  for_each_spanning_tree(g, cap,
                         [&](SpanningTree&& t) { trees.push_back(std::move(t)); });
  return trees;
}

uint64_t count_spanning_trees(const Graph& g, uint64_t cap) {
  uint64_t count = 0;
  for_each_spanning_tree(g, cap, [&](SpanningTree&&) { ++count; });
  return count;
}

std::vector<SpanningTree> enumerate_v_concentrated_trees(const Graph& g,
                                                         Vertex v,
                                                         uint64_t cap) {
  if (!g.has_vertex(v))
    throw PreconditionError("enumeration: root vertex out of range");
  std::vector<SpanningTree> trees;
  for_each_spanning_tree(g, cap, [&](SpanningTree&& t) {
    if (is_v_concentrated(t, v)) trees.push_back(std::move(t));
  });
  return trees;
}

MmstResult exact_mmst(const Graph& g, uint64_t cap) {
  std::optional<MmstResult> best;
  for_each_spanning_tree(g, cap, [&](SpanningTree&& t) {
    // The serial reference keeps this oracle independent of the stretch
    // kernel it is used to check.
    int stretch = max_stretch_serial(t).max_stretch;
    if (!best || stretch < best->min_max_stretch)
      best = MmstResult{stretch, std::move(t)};
  });
  return *best;
}

SpanningTree sample_bfs_tree(const Graph& g, Vertex v, uint64_t seed) {
  auto level = bfs_distances(g, v);
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  edges.reserve(g.vertex_count() - 1);
  std::vector<Vertex> closer;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    if (u == v) continue;
    closer.clear();
    for (Vertex w : g.neighbors(u))
      if (level[w] == level[u] - 1) closer.push_back(w);
    edges.push_back(make_edge(u, closer[rng.below(closer.size())]));
  }
  return SpanningTree(g, std::move(edges));
}

}  // namespace treespan
