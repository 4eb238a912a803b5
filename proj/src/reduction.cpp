#include "treespan/reduction.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "treespan/graph_io.hpp"

namespace treespan {

namespace {

bool rows_complementary(int a, int b) {
  for (int l = 0; l < kWiringCols; ++l)
    if (kWiring[a][l] == kWiring[b][l]) return false;
  return true;
}

}  // namespace

bool verify_wiring_properties() {
  // The three pairs must be complementary and nothing else may be.
  for (int a = 0; a < kWiringRows; ++a) {
    for (int b = a + 1; b < kWiringRows; ++b) {
      bool expected = (a % 2 == 0) && (b == a + 1);
      if (rows_complementary(a, b) != expected) return false;
    }
  }
  // Every column-covering row subset contains a complementary pair.
  for (int subset = 0; subset < (1 << kWiringRows); ++subset) {
    int covered = 0;
    for (int row = 0; row < kWiringRows; ++row) {
      if (!(subset & (1 << row))) continue;
      for (int l = 0; l < kWiringCols; ++l)
        if (kWiring[row][l]) covered |= 1 << l;
    }
    if (covered != (1 << kWiringCols) - 1) continue;
    bool has_pair = false;
    for (int a = 0; a < kWiringRows && !has_pair; a += 2)
      if ((subset & (1 << a)) && (subset & (1 << (a + 1)))) has_pair = true;
    if (!has_pair) return false;
  }
  return true;
}

namespace {

std::string label_suffix(BlockId id) {
  return std::to_string(id.layer) + ':' + std::to_string(id.index);
}

// Role vertices of a block whose fresh vertices start at first_new, laid out
// as: variables x1..xn, then per clause its three per-clause variable copies
// followed by q_1..q_8.
BlockInfo make_block_info(const Formula& f, BlockId id, Vertex vplus,
                          Vertex vminus, Vertex first_new) {
  const int n = f.variable_count();
  const int m = f.clause_count();
  BlockInfo info;
  info.id = id;
  info.vplus = vplus;
  info.vminus = vminus;
  info.var_vertex.resize(n);
  info.clause_var_vertex.resize(3 * m);
  info.q_vertex.resize(8 * m);
  for (int x = 1; x <= n; ++x) info.var_vertex[x - 1] = first_new + (x - 1);
  for (int c = 1; c <= m; ++c) {
    Vertex base = first_new + n + (c - 1) * 11;
    for (int k = 0; k < 3; ++k) info.clause_var_vertex[(c - 1) * 3 + k] = base + k;
    for (int r = 1; r <= 8; ++r) info.q_vertex[(c - 1) * 8 + (r - 1)] = base + 3 + (r - 1);
  }
  return info;
}

// One edge slot per wiring 1 plus variable and sign edges.
int edges_per_block(int n, int m) { return 2 * n + 27 * m; }
int new_vertices_per_block(int n, int m) { return n + 11 * m; }

// Writes the block's 2n + 27m edges into out[0..epb).
void emit_block_edges(const Formula& f, const BlockInfo& info, Edge* out) {
  const int n = f.variable_count();
  const int m = f.clause_count();
  int idx = 0;
  for (int x = 1; x <= n; ++x) {
    out[idx++] = make_edge(info.var(x), info.vplus);
    out[idx++] = make_edge(info.var(x), info.vminus);
  }
  for (int c = 1; c <= m; ++c) {
    const Clause& clause = f.clause(c);
    // g-array [y, y_c, z, z_c, w, w_c] in clause literal order.
    Vertex g[6];
    for (int k = 0; k < 3; ++k) {
      g[2 * k] = info.var(clause.literals[k].var);
      g[2 * k + 1] = info.clause_var(c, k);
    }
    for (int row = 0; row < kWiringRows; ++row)
      for (int l = 1; l <= kWiringCols; ++l)
        if (kWiring[row][l - 1]) out[idx++] = make_edge(g[row], info.q(c, l));
    for (int k = 0; k < 3; ++k) {
      Vertex hub = clause.literals[k].positive ? info.vplus : info.vminus;
      out[idx++] = make_edge(info.clause_var(c, k), hub);
    }
  }
}

void emit_block_labels(const Formula& f, const BlockInfo& info,
                       std::vector<std::string>& labels) {
  const int n = f.variable_count();
  const int m = f.clause_count();
  const std::string suffix = label_suffix(info.id);
  for (int x = 1; x <= n; ++x)
    labels[info.var(x)] = "x:" + std::to_string(x) + ':' + suffix;
  for (int c = 1; c <= m; ++c) {
    for (int k = 0; k < 3; ++k)
      labels[info.clause_var(c, k)] =
          "xc:" + std::to_string(f.clause(c).literals[k].var) + ':' +
          std::to_string(c) + ':' + suffix;
    for (int r = 1; r <= 8; ++r)
      labels[info.q(c, r)] =
          "q:" + std::to_string(r) + ':' + std::to_string(c) + ':' + suffix;
  }
}

unsigned long long checked_mul(unsigned long long a, unsigned long long b) {
  unsigned long long r;
  if (__builtin_mul_overflow(a, b, &r))
    throw PreconditionError("size computation overflows 64 bits");
  return r;
}

unsigned long long checked_add(unsigned long long a, unsigned long long b) {
  unsigned long long r;
  if (__builtin_add_overflow(a, b, &r))
    throw PreconditionError("size computation overflows 64 bits");
  return r;
}

// 1 + base + ... + base^(terms-1), overflow checked.
unsigned long long geometric_sum(unsigned long long base, int terms) {
  unsigned long long sum = 0, term = 1;
  for (int i = 0; i < terms; ++i) {
    sum = checked_add(sum, term);
    if (i + 1 < terms) term = checked_mul(term, base);
  }
  return sum;
}

}  // namespace

std::pair<Graph, BlockInfo> build_block(const Formula& f, int layer,
                                        int index) {
  const int n = f.variable_count();
  const int m = f.clause_count();
  BlockInfo info = make_block_info(f, BlockId{layer, index}, 0, 1, 2);
  const int vertices = 2 + new_vertices_per_block(n, m);
  std::vector<Edge> edges(edges_per_block(n, m));
  emit_block_edges(f, info, edges.data());
  std::vector<std::string> labels(vertices);
  labels[0] = "vplus:" + label_suffix(info.id);
  labels[1] = "vminus:" + label_suffix(info.id);
  emit_block_labels(f, info, labels);
  return {Graph(vertices, std::move(edges), std::move(labels)),
          std::move(info)};
}

ReductionGraph build_reduction(const Formula& f, int height) {
  if (height <= 1)
    throw PreconditionError("reduction: height must be greater than 1");
  const int n = f.variable_count();
  const int m = f.clause_count();
  const int epb = edges_per_block(n, m);
  const int nvpb = new_vertices_per_block(n, m);

  // Layer sizes and totals, guarded before any allocation.
  std::vector<unsigned long long> layer_size(height);
  unsigned long long total_blocks = 0;
  for (int i = 0; i < height; ++i) {
    layer_size[i] = i == 0 ? 1
                           : checked_mul(layer_size[i - 1],
                                         7ull * static_cast<unsigned>(m));
    total_blocks = checked_add(total_blocks, layer_size[i]);
  }
  unsigned long long total_vertices =
      checked_add(5, checked_mul(total_blocks, nvpb));
  if (total_vertices > static_cast<unsigned long long>(kMaxReductionVertices))
    throw PreconditionError(
        "reduction: construction would have " + std::to_string(total_vertices) +
        " vertices, above the build limit of " +
        std::to_string(kMaxReductionVertices));
  unsigned long long total_edges = 4 + total_blocks * epb;

  ReductionGraph rg;
  rg.variable_count = n;
  rg.clause_count = m;
  rg.height = height;
  rg.center = 2;
  rg.clauses = f.clauses();
  rg.blocks.reserve(total_blocks);
  rg.layer_range.reserve(height);

  // Pass 1 (serial): registry with precomputed vertex ranges. Block k in
  // creation order owns fresh ids [5 + k*nvpb, 5 + (k+1)*nvpb).
  int begin = 0;
  for (int layer = 1; layer <= height; ++layer) {
    const int count = static_cast<int>(layer_size[layer - 1]);
    rg.layer_range.emplace_back(begin, begin + count);
    for (int j = 1; j <= count; ++j) {
      const int k = begin + (j - 1);
      const Vertex first_new = 5 + k * nvpb;
      Vertex vplus, vminus;
      if (layer == 1) {
        vplus = 0;  // path endpoint q1
        vminus = 4; // path endpoint q2
      } else {
        const int t = j - 1;
        const int r = t % 7 + 1;
        const int c = (t / 7) % m + 1;
        const int s = t / (7 * m) + 1;
        const BlockInfo& parent = rg.blocks[rg.layer_range[layer - 2].first + (s - 1)];
        vplus = parent.q(c, r);
        vminus = parent.q(c, r + 1);
      }
      rg.blocks.push_back(
          make_block_info(f, BlockId{layer, j}, vplus, vminus, first_new));
    }
    begin += count;
  }

  // Pass 2 (parallel): edges and labels; every block writes disjoint slots.
  std::vector<Edge> edges(total_edges);
  edges[0] = {0, 1};
  edges[1] = {1, 2};
  edges[2] = {2, 3};
  edges[3] = {3, 4};
  std::vector<std::string> labels(total_vertices);
  labels[0] = "q1";
  labels[1] = "p1";
  labels[2] = "v";
  labels[3] = "p2";
  labels[4] = "q2";
  const int block_count = static_cast<int>(total_blocks);
#pragma omp parallel for schedule(static)
  for (int k = 0; k < block_count; ++k) {
    emit_block_edges(f, rg.blocks[k], edges.data() + 4 + k * epb);
    emit_block_labels(f, rg.blocks[k], labels);
  }

  rg.graph = Graph(static_cast<int>(total_vertices), std::move(edges),
                   std::move(labels));
  return rg;
}

std::array<Vertex, 5> path_vertices(const ReductionGraph& rg) {
  if (rg.blocks.empty())
    throw PreconditionError("path: reduction graph has no blocks");
  const Vertex v = rg.center;
  const Vertex q1 = rg.blocks.front().vplus;
  const Vertex q2 = rg.blocks.front().vminus;
  auto center_neighbors = rg.graph.neighbors(v);
  if (center_neighbors.size() != 2)
    throw PreconditionError("path: center vertex does not have degree 2");
  Vertex p1 = -1, p2 = -1;
  for (Vertex w : center_neighbors) {
    if (rg.graph.has_edge(w, q1)) p1 = w;
    if (rg.graph.has_edge(w, q2)) p2 = w;
  }
  if (p1 < 0 || p2 < 0 || p1 == p2)
    throw PreconditionError("path: central path structure is malformed");
  return {q1, p1, v, p2, q2};
}

int ReductionGraph::block_at(BlockId id) const {
  if (id.layer < 1 || id.layer > height) return -1;
  auto [begin, end] = layer_range[id.layer - 1];
  if (id.index < 1 || id.index > end - begin) return -1;
  return begin + id.index - 1;
}

int ReductionGraph::child_block(int parent_index, int c, int r) const {
  const BlockInfo& parent = blocks[parent_index];
  if (parent.id.layer >= height) return -1;
  if (c < 1 || c > clause_count || r < 1 || r > 7)
    throw PreconditionError("child_block: clause or q index out of range");
  const int j = ((parent.id.index - 1) * clause_count + (c - 1)) * 7 + r;
  return layer_range[parent.id.layer].first + (j - 1);
}

std::optional<ReductionGraph::Attachment> ReductionGraph::attachment(
    int child_index) const {
  const BlockInfo& child = blocks[child_index];
  if (child.id.layer == 1) return std::nullopt;
  const int t = child.id.index - 1;
  Attachment at;
  at.r = t % 7 + 1;
  at.clause = (t / 7) % clause_count + 1;
  const int s = t / (7 * clause_count) + 1;
  at.parent_index = layer_range[child.id.layer - 2].first + (s - 1);
  return at;
}

ReductionSize reduction_size(int n, int m, int h) {
  if (n < 3) throw PreconditionError("size: n must be at least 3");
  if (m < 1) throw PreconditionError("size: m must be positive");
  unsigned long long n3 = checked_mul(checked_mul(n, n), n);
  if (static_cast<unsigned long long>(m) > checked_mul(8, n3))
    throw PreconditionError("size: m exceeds 8 n^3");
  if (h <= 1) throw PreconditionError("size: h must be greater than 1");

  ReductionSize size;
  size.blocks = geometric_sum(7ull * m, h);
  size.vertices = checked_add(
      5, checked_mul(size.blocks, static_cast<unsigned long long>(n) + 11ull * m));
  size.edges = checked_add(
      4, checked_mul(size.blocks, 2ull * n + 27ull * m));
  unsigned long long per_block_bound = checked_add(n, checked_mul(88, n3));
  size.vertex_bound = checked_add(
      checked_mul(per_block_bound, geometric_sum(checked_mul(56, n3), h)), 5);
  return size;
}

void write_registry(std::ostream& out, const ReductionGraph& rg) {
  for (const BlockInfo& b : rg.blocks) {
    out << "b " << b.id.layer << ' ' << b.id.index << ' ' << b.vplus << ' '
        << b.vminus << '\n';
    for (int x = 1; x <= rg.variable_count; ++x)
      out << "x " << b.id.layer << ' ' << b.id.index << ' ' << x << ' '
          << b.var(x) << '\n';
    for (int c = 1; c <= rg.clause_count; ++c) {
      for (int k = 0; k < 3; ++k)
        out << "xc " << b.id.layer << ' ' << b.id.index << ' '
            << rg.clauses[c - 1].literals[k].var << ' ' << c << ' '
            << b.clause_var(c, k) << '\n';
      for (int r = 1; r <= 8; ++r)
        out << "q " << b.id.layer << ' ' << b.id.index << ' ' << c << ' ' << r
            << ' ' << b.q(c, r) << '\n';
    }
  }
}

void write_registry_file(const std::string& path, const ReductionGraph& rg) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  write_registry(out, rg);
}

namespace {

struct RawBlock {
  Vertex vplus = -1, vminus = -1;
  bool seen_header = false;
  std::map<int, Vertex> vars;                                      // x -> id
  std::map<int, std::vector<std::pair<int, Vertex>>> clause_vars;  // c -> (x, id) in file order
  std::map<std::pair<int, int>, Vertex> qs;                        // (c, r) -> id
};

[[noreturn]] void registry_fail(int line_no, const std::string& what) {
  throw ParseError("registry line " + std::to_string(line_no) + ": " + what);
}

void check_vertex(int line_no, const Graph& g, long long id) {
  if (id < 0 || id >= g.vertex_count())
    registry_fail(line_no, "vertex id " + std::to_string(id) + " out of range");
}

}  // namespace

ReductionGraph read_reduction(std::istream& graph_in,
                              std::istream& registry_in) {
  ReductionGraph rg;
  rg.graph = read_graph(graph_in);
  auto center = rg.graph.find_label("v");
  if (!center) throw ParseError("graph has no vertex labeled 'v'");
  rg.center = *center;

  std::map<BlockId, RawBlock> raw;
  std::string line;
  int line_no = 0;
  while (std::getline(registry_in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream fields(line);
    std::string prefix;
    fields >> prefix;
    int i, j;
    if (!(fields >> i >> j) || i < 1 || j < 1)
      registry_fail(line_no, "expected block coordinates");
    RawBlock& block = raw[BlockId{i, j}];
    if (prefix == "b") {
      long long vplus, vminus;
      if (!(fields >> vplus >> vminus))
        registry_fail(line_no, "expected 'b <i> <j> <vplus> <vminus>'");
      check_vertex(line_no, rg.graph, vplus);
      check_vertex(line_no, rg.graph, vminus);
      block.seen_header = true;
      block.vplus = static_cast<Vertex>(vplus);
      block.vminus = static_cast<Vertex>(vminus);
    } else if (prefix == "x") {
      long long x, id;
      if (!(fields >> x >> id) || x < 1)
        registry_fail(line_no, "expected 'x <i> <j> <var> <id>'");
      check_vertex(line_no, rg.graph, id);
      if (!block.vars.emplace(static_cast<int>(x), static_cast<Vertex>(id)).second)
        registry_fail(line_no, "duplicate variable vertex");
    } else if (prefix == "xc") {
      long long x, c, id;
      if (!(fields >> x >> c >> id) || x < 1 || c < 1)
        registry_fail(line_no, "expected 'xc <i> <j> <var> <clause> <id>'");
      check_vertex(line_no, rg.graph, id);
      block.clause_vars[static_cast<int>(c)].emplace_back(
          static_cast<int>(x), static_cast<Vertex>(id));
    } else if (prefix == "q") {
      long long c, r, id;
      if (!(fields >> c >> r >> id) || c < 1 || r < 1 || r > 8)
        registry_fail(line_no, "expected 'q <i> <j> <c> <r> <id>'");
      check_vertex(line_no, rg.graph, id);
      if (!block.qs.emplace(std::make_pair(static_cast<int>(c), static_cast<int>(r)),
                            static_cast<Vertex>(id)).second)
        registry_fail(line_no, "duplicate q vertex");
    } else {
      registry_fail(line_no, "unknown line prefix '" + prefix + "'");
    }
  }
  if (raw.empty()) throw ParseError("registry: no blocks");

  // Dimensions from the first block; every block must agree.
  const RawBlock& first = raw.begin()->second;
  const int n = static_cast<int>(first.vars.size());
  const int m = static_cast<int>(first.clause_vars.size());
  rg.variable_count = n;
  rg.clause_count = m;
  rg.height = raw.rbegin()->first.layer;

  // Clause literal order and signs, reconstructed from block (1,1): each
  // per-clause copy is adjacent to exactly one hub, vplus for a positive
  // standing and vminus for a negated one.
  auto first_it = raw.find(BlockId{1, 1});
  if (first_it == raw.end()) throw ParseError("registry: missing block (1,1)");
  rg.clauses.reserve(m);
  for (int c = 1; c <= m; ++c) {
    auto cv = first_it->second.clause_vars.find(c);
    if (cv == first_it->second.clause_vars.end() || cv->second.size() != 3)
      throw ParseError("registry: clause " + std::to_string(c) +
                       " does not have exactly 3 variable copies");
    Clause clause;
    for (int k = 0; k < 3; ++k) {
      auto [x, id] = cv->second[k];
      bool plus = rg.graph.has_edge(id, first_it->second.vplus);
      bool minus = rg.graph.has_edge(id, first_it->second.vminus);
      if (plus == minus)
        throw ParseError("registry: per-clause vertex " + std::to_string(id) +
                         " is not adjacent to exactly one hub");
      clause.literals[k] = Literal{x, plus};
    }
    rg.clauses.push_back(clause);
  }

  // Assemble blocks in (layer, index) order and validate the layering.
  std::vector<unsigned long long> expect_size;
  unsigned long long expect = 1;
  for (int i = 1; i <= rg.height; ++i) {
    expect_size.push_back(expect);
    expect = checked_mul(expect, 7ull * static_cast<unsigned>(m));
  }
  int begin = 0;
  int layer = 0;
  for (auto& [id, block] : raw) {
    if (id.layer != layer) {
      if (id.layer != layer + 1)
        throw ParseError("registry: layer " + std::to_string(layer + 1) +
                         " is missing");
      if (layer > 0) {
        int size = static_cast<int>(rg.blocks.size()) - begin;
        if (static_cast<unsigned long long>(size) != expect_size[layer - 1])
          throw ParseError("registry: layer " + std::to_string(layer) +
                           " has wrong block count");
        rg.layer_range.emplace_back(begin, begin + size);
        begin += size;
      }
      layer = id.layer;
    }
    if (!block.seen_header)
      throw ParseError("registry: block without a 'b' line");
    if (id.index != static_cast<int>(rg.blocks.size()) - begin + 1)
      throw ParseError("registry: block indices of layer " +
                       std::to_string(layer) + " are not contiguous");
    if (static_cast<int>(block.vars.size()) != n ||
        static_cast<int>(block.clause_vars.size()) != m ||
        static_cast<int>(block.qs.size()) != 8 * m)
      throw ParseError("registry: block dimensions are inconsistent");

    BlockInfo info;
    info.id = id;
    info.vplus = block.vplus;
    info.vminus = block.vminus;
    info.var_vertex.resize(n);
    for (auto [x, vid] : block.vars) {
      if (x > n) throw ParseError("registry: variable index out of range");
      info.var_vertex[x - 1] = vid;
    }
    info.clause_var_vertex.resize(3 * m);
    for (auto& [c, copies] : block.clause_vars) {
      if (c > m || copies.size() != 3)
        throw ParseError("registry: malformed clause vertices");
      for (int k = 0; k < 3; ++k) {
        if (copies[k].first != rg.clauses[c - 1].literals[k].var)
          throw ParseError("registry: clause literal order is inconsistent");
        info.clause_var_vertex[(c - 1) * 3 + k] = copies[k].second;
      }
    }
    info.q_vertex.resize(8 * m);
    for (auto& [cr, vid] : block.qs) {
      if (cr.first > m) throw ParseError("registry: q clause out of range");
      info.q_vertex[(cr.first - 1) * 8 + (cr.second - 1)] = vid;
    }
    rg.blocks.push_back(std::move(info));
  }
  int size = static_cast<int>(rg.blocks.size()) - begin;
  if (static_cast<unsigned long long>(size) != expect_size[layer - 1])
    throw ParseError("registry: layer " + std::to_string(layer) +
                     " has wrong block count");
  rg.layer_range.emplace_back(begin, begin + size);

  // The graph must have exactly the construction's size for these blocks.
  unsigned long long expect_vertices =
      5 + rg.blocks.size() * static_cast<unsigned long long>(
                                 new_vertices_per_block(n, m));
  unsigned long long expect_edges =
      4 + rg.blocks.size() * static_cast<unsigned long long>(
                                 edges_per_block(n, m));
  if (static_cast<unsigned long long>(rg.graph.vertex_count()) != expect_vertices ||
      static_cast<unsigned long long>(rg.graph.edge_count()) != expect_edges)
    throw ParseError("registry does not correspond to the graph: expected " +
                     std::to_string(expect_vertices) + " vertices and " +
                     std::to_string(expect_edges) + " edges");

  // The glueing must match the canonical child ordering.
  for (int k = 0; k < rg.block_count(); ++k) {
    auto at = rg.attachment(k);
    if (!at) {
      if (rg.blocks[k].id != (BlockId{1, 1}))
        throw ParseError("registry: only block (1,1) may lack a parent");
      continue;
    }
    const BlockInfo& parent = rg.blocks[at->parent_index];
    if (parent.q(at->clause, at->r) != rg.blocks[k].vplus ||
        parent.q(at->clause, at->r + 1) != rg.blocks[k].vminus)
      throw ParseError("registry: block attachment of layer " +
                       std::to_string(rg.blocks[k].id.layer) + " block " +
                       std::to_string(rg.blocks[k].id.index) +
                       " does not match its parent's q vertices");
  }
  return rg;
}

ReductionGraph load_reduction(const std::string& graph_path,
                              const std::string& registry_path) {
  std::ifstream gin(graph_path);
  if (!gin) throw ParseError("cannot open " + graph_path);
  std::ifstream rin(registry_path);
  if (!rin) throw ParseError("cannot open " + registry_path);
  return read_reduction(gin, rin);
}

}  // namespace treespan
