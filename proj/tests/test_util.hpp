#pragma once

#include <vector>

#include "treespan/cnf.hpp"
#include "treespan/graph.hpp"
#include "treespan/oracles.hpp"
#include "treespan/rng.hpp"
#include "treespan/stretch.hpp"

namespace treespan::testutil {

// (x1 v x2 v -x3)
inline Formula phi1() {
  return Formula(3, {Clause{{Literal{1, true}, Literal{2, true},
                             Literal{3, false}}}});
}

// All eight sign patterns over {x1,x2,x3}; unsatisfiable, since every
// assignment falsifies the clause whose literals it flips.
inline Formula all_sign_patterns() {
  std::vector<Clause> clauses;
  for (int s = 0; s < 8; ++s) {
    Clause c;
    for (int k = 0; k < 3; ++k)
      c.literals[k] = Literal{k + 1, (s & (1 << k)) == 0};
    clauses.push_back(c);
  }
  return Formula(3, std::move(clauses));
}

inline Formula random_formula(int n, int m, SplitMix64& rng) {
  std::vector<Clause> clauses;
  clauses.reserve(m);
  for (int i = 0; i < m; ++i) {
    int a = 1 + static_cast<int>(rng.below(n));
    int b, c;
    do { b = 1 + static_cast<int>(rng.below(n)); } while (b == a);
    do { c = 1 + static_cast<int>(rng.below(n)); } while (c == a || c == b);
    clauses.push_back(Clause{{Literal{a, rng.coin()}, Literal{b, rng.coin()},
                              Literal{c, rng.coin()}}});
  }
  return Formula(n, std::move(clauses));
}

inline Formula random_satisfiable_formula(int n, int m, SplitMix64& rng) {
  for (;;) {
    Formula f = random_formula(n, m, rng);
    if (exhaustive_solve_serial(f).has_value()) return f;
  }
}

inline Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

inline Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  edges.push_back({0, n - 1});
  return Graph(n, std::move(edges));
}

inline Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

inline Graph random_connected_graph(int n, SplitMix64& rng) {
  const int percent = 30 + static_cast<int>(rng.below(60));
  for (;;) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (static_cast<int>(rng.below(100)) < percent)
          edges.push_back({u, v});
    Graph g(n, std::move(edges));
    if (is_connected(g)) return g;
  }
}

// Every connected labeled graph on exactly n vertices, by edge-mask sweep.
// Meant for n <= 5.
inline std::vector<Graph> all_connected_graphs(int n) {
  std::vector<Edge> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.push_back({u, v});
  std::vector<Graph> out;
  for (uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
    std::vector<Edge> edges;
    for (size_t i = 0; i < slots.size(); ++i)
      if (mask & (1u << i)) edges.push_back(slots[i]);
    Graph g(n, std::move(edges));
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

// Every BFS tree from v, over all tie-breaks of the parent choice.
inline std::vector<SpanningTree> enumerate_bfs_trees(const Graph& g, Vertex v,
                                                     uint64_t cap = 100000) {
  auto level = bfs_distances(g, v);
  std::vector<std::vector<Vertex>> candidates;
  std::vector<Vertex> order;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    if (u == v) continue;
    order.push_back(u);
    std::vector<Vertex> closer;
    for (Vertex w : g.neighbors(u))
      if (level[w] == level[u] - 1) closer.push_back(w);
    candidates.push_back(std::move(closer));
  }
  std::vector<SpanningTree> trees;
  std::vector<Edge> chosen;
  auto recurse = [&](auto&& self, size_t i) -> void {
    if (i == order.size()) {
      if (trees.size() == cap)
        throw CapExceeded("bfs tree enumeration cap");
      trees.emplace_back(g, chosen);
      return;
    }
    for (Vertex parent : candidates[i]) {
      chosen.push_back(make_edge(order[i], parent));
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  recurse(recurse, 0);
  return trees;
}

// Maximum over all vertex pairs of ceil(d_T / d_G); the all-pairs route to
// the same number the per-edge report computes.
inline int all_pairs_max_stretch(const SpanningTree& t) {
  const Graph& g = t.host();
  int worst = 1;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    auto dg = bfs_distances(g, u);
    auto dt = tree_bfs_distances(t, u);
    for (Vertex w = 0; w < g.vertex_count(); ++w) {
      if (w == u) continue;
      int stretch = (dt[w] + dg[w] - 1) / dg[w];
      worst = std::max(worst, stretch);
    }
  }
  return worst;
}

}  // namespace treespan::testutil
