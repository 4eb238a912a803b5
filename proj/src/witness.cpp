#include "treespan/witness.hpp"

namespace treespan {

int choose_satisfying_literal(const Clause& c, const Assignment& a) {
  for (int k = 0; k < 3; ++k) {
    const Literal& lit = c.literals[k];
    if (a.value(lit.var) == lit.positive) return k;
  }
  throw PreconditionError("clause is false under the assignment");
}

int choose_satisfying_variable(const Clause& c, const Assignment& a) {
  return c.literals[choose_satisfying_literal(c, a)].var;
}

SpanningTree tree_7_spanner(const ReductionGraph& rg, const Formula& f,
                            const Assignment& a,
                            const std::vector<int>* tie_break,
                            std::vector<int>* chosen_out) {
  if (f.variable_count() != rg.variable_count ||
      f.clauses() != rg.clauses)
    throw PreconditionError(
        "witness: reduction graph was built from a different formula");
  if (!evaluate(f, a))
    throw PreconditionError("witness: assignment does not satisfy the formula");

  const int n = rg.variable_count;
  const int m = rg.clause_count;

  if (tie_break && static_cast<int>(tie_break->size()) != m)
    throw PreconditionError("witness: tie-break vector must have one entry per clause");

  // Resolve the per-clause anchor literal up front; every block reuses it.
  std::vector<int> chosen(m);
  for (int c = 1; c <= m; ++c) {
    if (tie_break) {
      int k = (*tie_break)[c - 1];
      if (k < 0 || k > 2)
        throw PreconditionError("witness: tie-break literal index out of range");
      const Literal& lit = f.clause(c).literals[k];
      if (a.value(lit.var) != lit.positive)
        throw PreconditionError("witness: tie-break literal " +
                                std::to_string(k) + " of clause " +
                                std::to_string(c) + " is not satisfying");
      chosen[c - 1] = k;
    } else {
      chosen[c - 1] = choose_satisfying_literal(f.clause(c), a);
    }
  }
  if (chosen_out) *chosen_out = chosen;

  std::vector<Edge> edges;
  edges.reserve(4 + rg.blocks.size() * (n + 11 * m));
  auto path = path_vertices(rg);
  for (int i = 0; i < 4; ++i) edges.push_back(make_edge(path[i], path[i + 1]));

  for (const BlockInfo& block : rg.blocks) {
    for (int x = 1; x <= n; ++x)
      edges.push_back(make_edge(block.var(x),
                                a.value(x) ? block.vplus : block.vminus));
    for (int c = 1; c <= m; ++c) {
      const Clause& clause = f.clause(c);
      for (int k = 0; k < 3; ++k)
        edges.push_back(make_edge(
            block.clause_var(c, k),
            clause.literals[k].positive ? block.vplus : block.vminus));
      // The anchor variable's vertex and per-clause copy sit on
      // complementary wiring rows, so each q vertex gains exactly one edge.
      const int k = chosen[c - 1];
      const Vertex anchor_var = block.var(clause.literals[k].var);
      const Vertex anchor_copy = block.clause_var(c, k);
      for (int l = 1; l <= kWiringCols; ++l) {
        if (kWiring[2 * k][l - 1])
          edges.push_back(make_edge(block.q(c, l), anchor_var));
        else
          edges.push_back(make_edge(block.q(c, l), anchor_copy));
      }
    }
  }
  return SpanningTree(rg.graph, std::move(edges));
}

}  // namespace treespan
