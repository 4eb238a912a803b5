#include <algorithm>

#include "doctest.h"
#include "test_util.hpp"
#include "treespan/graph.hpp"

using namespace treespan;
namespace tu = treespan::testutil;

TEST_CASE("bfs distances on the central path") {
  // q1, p1, v, p2, q2 with v in the middle
  Graph g = tu::path_graph(5);
  auto dist = bfs_distances(g, 2);
  CHECK(dist == std::vector<int>{2, 1, 0, 1, 2});
  CHECK(dist[2] == 0);
}

TEST_CASE("bfs distance of the source to itself is zero") {
  SplitMix64 rng(7);
  for (int n = 2; n <= 9; ++n) {
    Graph g = tu::random_connected_graph(n, rng);
    for (Vertex v = 0; v < n; ++v) CHECK(bfs_distances(g, v)[v] == 0);
  }
}

TEST_CASE("bfs levels of adjacent vertices differ by at most one") {
  SplitMix64 rng(8);
  for (int round = 0; round < 20; ++round) {
    Graph g = tu::random_connected_graph(3 + round % 6, rng);
    auto dist = bfs_distances(g, 0);
    for (const auto& [u, v] : g.edges())
      CHECK(std::abs(dist[u] - dist[v]) <= 1);
  }
}

TEST_CASE("bfs rejects bad input") {
  Graph disconnected(4, {{0, 1}, {2, 3}});
  CHECK_THROWS_WITH_AS(bfs_distances(disconnected, 0),
                       doctest::Contains("unreachable"), PreconditionError);
  Graph g = tu::path_graph(3);
  CHECK_THROWS_AS(bfs_distances(g, 5), PreconditionError);
  CHECK_THROWS_AS(bfs_distances(g, -1), PreconditionError);
}

TEST_CASE("neighborhood radii") {
  Graph path = tu::path_graph(5);
  CHECK(neighborhood(path, 2, 0) == std::vector<Vertex>{2});
  CHECK(neighborhood(path, 2, 1) == std::vector<Vertex>{1, 2, 3});
  CHECK(neighborhood(path, 2, 2) == std::vector<Vertex>{0, 1, 2, 3, 4});

  Graph k4 = tu::complete_graph(4);
  for (Vertex v = 0; v < 4; ++v)
    CHECK(neighborhood(k4, v, 1).size() == 4);

  CHECK_THROWS_AS(neighborhood(path, 9, 1), PreconditionError);
}

TEST_CASE("graph construction rejects malformed inputs") {
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), PreconditionError);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), PreconditionError);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), PreconditionError);
  CHECK_THROWS_AS(Graph(3, {{-1, 2}}), PreconditionError);
  CHECK_THROWS_AS(Graph(3, {}, {"a", "b"}), PreconditionError);
  CHECK_THROWS_AS(Graph(-1, {}), PreconditionError);
}

TEST_CASE("graph accessors") {
  Graph g(4, {{0, 1}, {2, 3}, {1, 2}}, {"a", "b", "c", "d"});
  CHECK(g.edge_count() == 3);
  CHECK(g.has_edge(1, 0));
  CHECK(!g.has_edge(0, 2));
  CHECK(g.edge_index(2, 1) == 1);
  CHECK(g.edge_index(0, 3) == -1);
  CHECK(g.label(2) == "c");
  CHECK(g.find_label("d") == 3);
  CHECK(!g.find_label("z").has_value());
  auto nbrs = g.neighbors(1);
  CHECK(std::vector<Vertex>(nbrs.begin(), nbrs.end()) ==
        std::vector<Vertex>{0, 2});
}

TEST_CASE("spanning tree validation") {
  Graph c4 = tu::cycle_graph(4);
  CHECK_NOTHROW(SpanningTree(c4, {{0, 1}, {1, 2}, {2, 3}}));

  std::string reason;
  CHECK(!SpanningTree::try_build(c4, {{0, 2}, {0, 1}, {1, 2}}, &reason));
  CHECK(reason.find("not an edge") != std::string::npos);

  CHECK(!SpanningTree::try_build(c4, {{0, 1}, {1, 2}}, &reason));
  CHECK(reason.find("expected 3 edges") != std::string::npos);

  Graph k4 = tu::complete_graph(4);
  CHECK(!SpanningTree::try_build(k4, {{0, 1}, {1, 2}, {0, 2}}, &reason));
  CHECK(reason.find("cycle") != std::string::npos);

  Graph two(4, {{0, 1}, {2, 3}, {1, 2}, {0, 2}});
  CHECK(SpanningTree::try_build(two, {{0, 1}, {1, 2}, {2, 3}}, &reason));
}

TEST_CASE("eccentricity and connectivity") {
  CHECK(eccentricity(tu::path_graph(5), 0) == 4);
  CHECK(eccentricity(tu::path_graph(5), 2) == 2);
  CHECK(is_connected(tu::cycle_graph(6)));
  CHECK(!is_connected(Graph(3, {{0, 1}})));
  CHECK(is_connected(Graph(1, {})));
}
