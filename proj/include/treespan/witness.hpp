#pragma once

#include <vector>

#include "treespan/cnf.hpp"
#include "treespan/graph.hpp"
#include "treespan/reduction.hpp"

namespace treespan {

// Position (0..2) of the first literal of c made true by a; throws
// PreconditionError when the clause is false under a.
int choose_satisfying_literal(const Clause& c, const Assignment& a);

// Variable index of that literal.
int choose_satisfying_variable(const Clause& c, const Assignment& a);

// v-concentrated tree 7-spanner of the reduction graph, built from a
// satisfying assignment: the central path, one hub edge per variable vertex
// (vplus side iff the variable is true), the single hub edge of every
// per-clause variable copy, and per clause the eight wiring edges anchored
// at the chosen satisfying variable.
//
// tie_break, when given, picks per clause which satisfying literal anchors
// the q vertices (entries index into the clause's literals and must be
// satisfying); by default the first satisfying literal is used. chosen_out,
// when given, receives the per-clause selection actually applied.
SpanningTree tree_7_spanner(const ReductionGraph& rg, const Formula& f,
                            const Assignment& a,
                            const std::vector<int>* tie_break = nullptr,
                            std::vector<int>* chosen_out = nullptr);

}  // namespace treespan
