#include <sstream>

#include "doctest.h"
#include "test_util.hpp"
#include "treespan/graph_io.hpp"
#include "treespan/reduction.hpp"

using namespace treespan;
namespace tu = treespan::testutil;

TEST_CASE("wiring matrix properties") {
  CHECK(verify_wiring_properties());

  // Rows 1 and 2 cover every column together.
  for (int l = 0; l < kWiringCols; ++l)
    CHECK((kWiring[0][l] | kWiring[1][l]) == 1);
  // Rows 1, 3, 5 miss the last column.
  CHECK((kWiring[0][7] | kWiring[2][7] | kWiring[4][7]) == 0);
  // Row 5 alternates starting with 1.
  for (int l = 0; l < kWiringCols; ++l) CHECK(kWiring[4][l] == (l + 1) % 2);
}

TEST_CASE("single-clause building block") {
  auto [g, info] = build_block(tu::phi1(), 1, 1);
  CHECK(g.vertex_count() == 16);
  CHECK(g.edge_count() == 33);

  // First literal x1: its variable vertex wires to q1..q4, its per-clause
  // copy to q5..q8.
  for (int r = 1; r <= 8; ++r) {
    CHECK(g.has_edge(info.var(1), info.q(1, r)) == (r <= 4));
    CHECK(g.has_edge(info.clause_var(1, 0), info.q(1, r)) == (r >= 5));
  }
  // Third literal is negated, so its per-clause copy hangs off vminus.
  CHECK(g.has_edge(info.clause_var(1, 2), info.vminus));
  CHECK(!g.has_edge(info.clause_var(1, 2), info.vplus));
  CHECK(g.has_edge(info.clause_var(1, 0), info.vplus));
  // Fifth wiring row: the third variable's vertex meets q1, q3, q5, q7.
  for (int r = 1; r <= 8; ++r)
    CHECK(g.has_edge(info.var(3), info.q(1, r)) == (r % 2 == 1));
  // Every variable vertex touches both hubs.
  for (int x = 1; x <= 3; ++x) {
    CHECK(g.has_edge(info.var(x), info.vplus));
    CHECK(g.has_edge(info.var(x), info.vminus));
  }
  // q vertices are pairwise non-adjacent, and so are variable vertices.
  for (int r = 1; r <= 8; ++r)
    for (int s = r + 1; s <= 8; ++s)
      CHECK(!g.has_edge(info.q(1, r), info.q(1, s)));
  for (int x = 1; x <= 3; ++x)
    for (int y = x + 1; y <= 3; ++y)
      CHECK(!g.has_edge(info.var(x), info.var(y)));
  // The hubs are never adjacent to each other.
  CHECK(!g.has_edge(info.vplus, info.vminus));
}

TEST_CASE("building blocks are deterministic") {
  auto [g1, i1] = build_block(tu::phi1(), 2, 5);
  auto [g2, i2] = build_block(tu::phi1(), 2, 5);
  CHECK(g1.edges() == g2.edges());
  for (Vertex v = 0; v < g1.vertex_count(); ++v)
    CHECK(g1.label(v) == g2.label(v));
}

TEST_CASE("two-layer reduction of the single-clause instance") {
  ReductionGraph rg = build_reduction(tu::phi1(), 2);
  CHECK(rg.graph.vertex_count() == 117);
  CHECK(rg.graph.edge_count() == 268);
  CHECK(rg.block_count() == 8);
  CHECK(rg.layer_range[0] == std::pair<int, int>{0, 1});
  CHECK(rg.layer_range[1] == std::pair<int, int>{1, 8});
  CHECK(is_connected(rg.graph));
  CHECK(rg.graph.label(rg.center) == "v");

  // Attachments stay within one clause and walk consecutive q pairs.
  for (int k = 0; k < rg.block_count(); ++k) {
    auto at = rg.attachment(k);
    if (!at) continue;
    const BlockInfo& parent = rg.blocks[at->parent_index];
    CHECK(at->r >= 1);
    CHECK(at->r <= 7);
    CHECK(rg.blocks[k].vplus == parent.q(at->clause, at->r));
    CHECK(rg.blocks[k].vminus == parent.q(at->clause, at->r + 1));
    CHECK(rg.child_block(at->parent_index, at->clause, at->r) == k);
  }
  // The single layer-1 block hosts exactly 7 children, one per q pair.
  int children = 0;
  for (int k = 0; k < rg.block_count(); ++k)
    if (auto at = rg.attachment(k); at && at->parent_index == 0) ++children;
  CHECK(children == 7);
}

TEST_CASE("two-layer reduction of the all-patterns instance") {
  Formula f = tu::all_sign_patterns();
  auto [block, info] = build_block(f, 1, 1);
  CHECK(block.vertex_count() == 93);

  ReductionGraph rg = build_reduction(f, 2);
  CHECK(rg.graph.vertex_count() == 5192);
  CHECK(rg.block_count() == 1 + 56);
  CHECK(is_connected(rg.graph));
}

TEST_CASE("height must exceed one") {
  CHECK_THROWS_AS(build_reduction(tu::phi1(), 1), PreconditionError);
  CHECK_THROWS_AS(build_reduction(tu::phi1(), 0), PreconditionError);
}

TEST_CASE("distance ladder from the center") {
  ReductionGraph rg = build_reduction(tu::phi1(), 2);
  auto dist = bfs_distances(rg.graph, rg.center);

  const BlockInfo& first = rg.blocks[0];
  CHECK(dist[first.vplus] == 2);
  CHECK(dist[first.vminus] == 2);
  for (int x = 1; x <= 3; ++x) CHECK(dist[first.var(x)] == 3);
  CHECK(dist[first.var(1)] == 3);  // d(v, x1 of block (1,1))
  for (int k = 0; k < 3; ++k) CHECK(dist[first.clause_var(1, k)] == 3);
  // All q vertices of a clause sit at one distance.
  for (int r = 1; r <= 8; ++r) CHECK(dist[first.q(1, r)] == 4);

  for (int k = rg.layer_range[1].first; k < rg.layer_range[1].second; ++k) {
    const BlockInfo& b = rg.blocks[k];
    CHECK(dist[b.vplus] == 4);
    CHECK(dist[b.vminus] == 4);
    for (int x = 1; x <= 3; ++x) CHECK(dist[b.var(x)] == 5);
    for (int r = 1; r <= 8; ++r) CHECK(dist[b.q(1, r)] == 6);
  }
}

TEST_CASE("closer neighbors inside a block are exactly the expected ones") {
  ReductionGraph rg = build_reduction(tu::all_sign_patterns(), 2);
  auto dist = bfs_distances(rg.graph, rg.center);
  for (const BlockInfo& b : rg.blocks) {
    for (int x = 1; x <= rg.variable_count; ++x) {
      for (Vertex w : rg.graph.neighbors(b.var(x)))
        if (dist[w] < dist[b.var(x)])
          CHECK((w == b.vplus || w == b.vminus));
    }
    for (int c = 1; c <= rg.clause_count; ++c) {
      for (int k = 0; k < 3; ++k) {
        for (Vertex w : rg.graph.neighbors(b.clause_var(c, k)))
          if (dist[w] < dist[b.clause_var(c, k)])
            CHECK((w == b.vplus || w == b.vminus));
      }
      for (int r = 1; r <= 8; ++r) {
        int closer = 0;
        for (Vertex w : rg.graph.neighbors(b.q(c, r))) {
          if (dist[w] >= dist[b.q(c, r)]) continue;
          ++closer;
          bool in_g_array = false;
          for (int k = 0; k < 3; ++k) {
            if (w == b.var(rg.clauses[c - 1].literals[k].var) ||
                w == b.clause_var(c, k))
              in_g_array = true;
          }
          CHECK(in_g_array);
        }
        CHECK(closer == 3);  // one per complementary wiring pair
      }
    }
  }
}

TEST_CASE("reduction is deterministic") {
  ReductionGraph a = build_reduction(tu::phi1(), 2);
  ReductionGraph b = build_reduction(tu::phi1(), 2);
  CHECK(a.graph.edges() == b.graph.edges());
  for (Vertex v = 0; v < a.graph.vertex_count(); ++v)
    CHECK(a.graph.label(v) == b.graph.label(v));
}

TEST_CASE("registry files round-trip") {
  ReductionGraph rg = build_reduction(tu::phi1(), 3);
  std::ostringstream gout, rout;
  write_graph(gout, rg.graph);
  write_registry(rout, rg);

  std::istringstream gin(gout.str()), rin(rout.str());
  ReductionGraph back = read_reduction(gin, rin);
  CHECK(back.center == rg.center);
  CHECK(back.variable_count == rg.variable_count);
  CHECK(back.clause_count == rg.clause_count);
  CHECK(back.height == rg.height);
  CHECK(back.clauses == rg.clauses);
  CHECK(back.layer_range == rg.layer_range);
  REQUIRE(back.block_count() == rg.block_count());
  for (int k = 0; k < rg.block_count(); ++k) {
    CHECK(back.blocks[k].id == rg.blocks[k].id);
    CHECK(back.blocks[k].vplus == rg.blocks[k].vplus);
    CHECK(back.blocks[k].var_vertex == rg.blocks[k].var_vertex);
    CHECK(back.blocks[k].clause_var_vertex == rg.blocks[k].clause_var_vertex);
    CHECK(back.blocks[k].q_vertex == rg.blocks[k].q_vertex);
  }
}

TEST_CASE("registry rejects unknown prefixes and tampering") {
  ReductionGraph rg = build_reduction(tu::phi1(), 2);
  std::ostringstream gout, rout;
  write_graph(gout, rg.graph);
  write_registry(rout, rg);

  {
    std::istringstream gin(gout.str()), rin("z 1 1 0 4\n" + rout.str());
    CHECK_THROWS_WITH_AS(read_reduction(gin, rin),
                         doctest::Contains("unknown line prefix"), ParseError);
  }
  {
    // Divert one q id of block (1,1); the glued child no longer matches.
    std::string tampered = rout.str();
    auto pos = tampered.find("q 1 1 1 1 11");
    REQUIRE(pos != std::string::npos);
    tampered.replace(pos, 12, "q 1 1 1 1 12");
    std::istringstream gin(gout.str()), rin(tampered);
    CHECK_THROWS_WITH_AS(read_reduction(gin, rin),
                         doctest::Contains("does not match"), ParseError);
  }
}

TEST_CASE("size accounting matches the builds and the closed-form bound") {
  ReductionSize small = reduction_size(3, 1, 2);
  CHECK(small.vertices == 117);
  CHECK(small.edges == 268);
  CHECK(small.blocks == 8);
  CHECK(small.vertices <= small.vertex_bound);

  ReductionSize eight = reduction_size(3, 8, 2);
  CHECK(eight.vertices == 5192);
  CHECK(eight.vertices <= eight.vertex_bound);

  // One more layer multiplies the new-block count by 7m.
  for (int h = 2; h <= 4; ++h) {
    ReductionSize a = reduction_size(4, 3, h);
    ReductionSize b = reduction_size(4, 3, h + 1);
    unsigned long long grew = b.blocks - a.blocks;
    unsigned long long prev = h == 2 ? 21 : a.blocks - reduction_size(4, 3, h - 1).blocks;
    CHECK(grew == 21 * prev);
    CHECK(b.vertices - a.vertices == grew * (4 + 11 * 3));
  }
}

TEST_CASE("size accounting rejects bad parameters") {
  CHECK_THROWS_AS(reduction_size(2, 1, 2), PreconditionError);
  CHECK_THROWS_AS(reduction_size(3, 0, 2), PreconditionError);
  CHECK_THROWS_AS(reduction_size(3, 1, 1), PreconditionError);
  CHECK_THROWS_AS(reduction_size(3, 8 * 27 + 1, 2), PreconditionError);
  CHECK_THROWS_AS(reduction_size(3, 8, 100), PreconditionError);  // overflow
}

TEST_CASE("oversized constructions are refused before allocation") {
  CHECK_THROWS_WITH_AS(build_reduction(tu::all_sign_patterns(), 6),
                       doctest::Contains("build limit"), PreconditionError);
}
