#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "treespan/graph.hpp"

namespace treespan {

// Graph text format, line oriented:
//   g <vertex_count> <edge_count>
//   e <u> <v>          one per edge, u < v
//   l <u> <label>      optional labels
// Tree files carry only the host vertex count:
//   t <host_vertex_count>
//   e <u> <v>
// Unknown line prefixes are rejected in both formats.

Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);
void write_graph_file(const std::string& path, const Graph& g);

struct TreeFile {
  int host_vertex_count = 0;
  std::vector<Edge> edges;
};

// Parses the format only; structural validation happens when the edges are
// bound to a host graph.
TreeFile read_tree(std::istream& in);
TreeFile read_tree_file(const std::string& path);

// Binds a tree file to its host. Throws ParseError on vertex-count mismatch
// and PreconditionError when the edges do not form a spanning tree.
SpanningTree read_spanning_tree_file(const std::string& path,
                                     const Graph& host);

void write_tree(std::ostream& out, const SpanningTree& t);
void write_tree_file(const std::string& path, const SpanningTree& t);

}  // namespace treespan
