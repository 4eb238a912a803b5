#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "treespan/graph.hpp"

namespace treespan {

inline constexpr uint64_t kDefaultTreeCap = 1'000'000;

// Visits every spanning tree of g exactly once, in the canonical
// include/exclude order over the sorted edge list. Throws CapExceeded after
// `cap` trees have been visited (the visited ones are a deterministic
// prefix).
void for_each_spanning_tree(const Graph& g, uint64_t cap,
                            const std::function<void(SpanningTree&&)>& visit);

std::vector<SpanningTree> enumerate_spanning_trees(
    const Graph& g, uint64_t cap = kDefaultTreeCap);

uint64_t count_spanning_trees(const Graph& g, uint64_t cap = kDefaultTreeCap);

// The spanning trees whose restriction to every host ball around v stays
// connected, in enumeration order.
std::vector<SpanningTree> enumerate_v_concentrated_trees(
    const Graph& g, Vertex v, uint64_t cap = kDefaultTreeCap);

struct MmstResult {
  int min_max_stretch = 0;
  SpanningTree tree;  // first minimizer in enumeration order
};

// Exact minimum max-stretch over all spanning trees, by sweep.
MmstResult exact_mmst(const Graph& g, uint64_t cap = kDefaultTreeCap);

// Seeded BFS tree from v: every non-root vertex picks a parent uniformly
// among its strictly closer neighbors. Always a BFS tree, hence
// v-concentrated.
SpanningTree sample_bfs_tree(const Graph& g, Vertex v, uint64_t seed);

}  // namespace treespan
