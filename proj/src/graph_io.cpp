#include "treespan/graph_io.hpp"

#include <fstream>
#include <sstream>

namespace treespan {

namespace {

[[noreturn]] void fail(int line_no, const std::string& what) {
  throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  return out;
}

struct LineReader {
  std::istream& in;
  int line_no = 0;

  // Returns false at end of input; skips blank lines.
  bool next(std::istringstream& fields, std::string& prefix) {
    std::string line;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      fields.clear();
      fields.str(line);
      if (!(fields >> prefix)) continue;
      return true;
    }
    return false;
  }
};

Edge parse_edge_line(std::istringstream& fields, int line_no, int n) {
  long long u, v;
  if (!(fields >> u >> v)) fail(line_no, "expected 'e <u> <v>'");
  if (u < 0 || v < 0 || u >= n || v >= n)
    fail(line_no, "edge endpoint out of range");
  if (u >= v) fail(line_no, "edge endpoints must satisfy u < v");
  return Edge{static_cast<Vertex>(u), static_cast<Vertex>(v)};
}

void expect_no_trailing(std::istringstream& fields, int line_no) {
  std::string extra;
  if (fields >> extra) fail(line_no, "unexpected trailing field '" + extra + "'");
}

}  // namespace

Graph read_graph(std::istream& in) {
  LineReader reader{in};
  std::istringstream fields;
  std::string prefix;

  if (!reader.next(fields, prefix)) throw ParseError("empty graph file");
  if (prefix != "g") fail(reader.line_no, "expected header 'g <n> <m>'");
  long long n, m;
  if (!(fields >> n >> m) || n < 0 || m < 0)
    fail(reader.line_no, "expected header 'g <n> <m>'");
  if (n > 1'000'000'000 || m > 2'000'000'000)
    fail(reader.line_no, "header declares an implausibly large graph");
  expect_no_trailing(fields, reader.line_no);

  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(m));
  std::vector<std::string> labels;
  bool any_label = false;

  while (reader.next(fields, prefix)) {
    if (prefix == "e") {
      Edge e = parse_edge_line(fields, reader.line_no, static_cast<int>(n));
      expect_no_trailing(fields, reader.line_no);
      edges.push_back(e);
    } else if (prefix == "l") {
      long long v;
      std::string label;
      if (!(fields >> v >> label)) fail(reader.line_no, "expected 'l <v> <label>'");
      if (v < 0 || v >= n) fail(reader.line_no, "label vertex out of range");
      expect_no_trailing(fields, reader.line_no);
      if (!any_label) {
        labels.assign(static_cast<size_t>(n), "");
        any_label = true;
      }
      labels[static_cast<size_t>(v)] = label;
    } else {
      fail(reader.line_no, "unknown line prefix '" + prefix + "'");
    }
  }
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError("header declares " + std::to_string(m) + " edges, file has " +
                     std::to_string(edges.size()));
  try {
    return Graph(static_cast<int>(n), std::move(edges), std::move(labels));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

Graph read_graph_file(const std::string& path) {
  auto in = open_input(path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "g " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
  if (g.has_labels()) {
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (!g.label(v).empty()) out << "l " << v << ' ' << g.label(v) << '\n';
  }
}

void write_graph_file(const std::string& path, const Graph& g) {
  auto out = open_output(path);
  write_graph(out, g);
}

TreeFile read_tree(std::istream& in) {
  LineReader reader{in};
  std::istringstream fields;
  std::string prefix;

  if (!reader.next(fields, prefix)) throw ParseError("empty tree file");
  if (prefix != "t") fail(reader.line_no, "expected header 't <n>'");
  long long n;
  if (!(fields >> n) || n < 0) fail(reader.line_no, "expected header 't <n>'");
  if (n > 1'000'000'000)
    fail(reader.line_no, "header declares an implausibly large tree");
  expect_no_trailing(fields, reader.line_no);

  TreeFile file;
  file.host_vertex_count = static_cast<int>(n);
  while (reader.next(fields, prefix)) {
    if (prefix != "e") fail(reader.line_no, "unknown line prefix '" + prefix + "'");
    Edge e = parse_edge_line(fields, reader.line_no, file.host_vertex_count);
    expect_no_trailing(fields, reader.line_no);
    file.edges.push_back(e);
  }
  return file;
}

TreeFile read_tree_file(const std::string& path) {
  auto in = open_input(path);
  return read_tree(in);
}

SpanningTree read_spanning_tree_file(const std::string& path,
                                     const Graph& host) {
  TreeFile file = read_tree_file(path);
  if (file.host_vertex_count != host.vertex_count())
    throw ParseError(path + ": tree is over " +
                     std::to_string(file.host_vertex_count) +
                     " vertices, host graph has " +
                     std::to_string(host.vertex_count()));
  return SpanningTree(host, std::move(file.edges));
}

void write_tree(std::ostream& out, const SpanningTree& t) {
  out << "t " << t.vertex_count() << '\n';
  for (const auto& [u, v] : t.edges()) out << "e " << u << ' ' << v << '\n';
}

void write_tree_file(const std::string& path, const SpanningTree& t) {
  auto out = open_output(path);
  write_tree(out, t);
}

}  // namespace treespan
