#include "treespan/cnf.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace treespan {

namespace {

void check_clause(const Clause& c, int variable_count, int clause_no) {
  for (const auto& lit : c.literals) {
    if (lit.var < 1 || lit.var > variable_count)
      throw PreconditionError("clause " + std::to_string(clause_no) +
                              ": variable x" + std::to_string(lit.var) +
                              " out of range");
  }
  const auto& l = c.literals;
  if (l[0].var == l[1].var || l[0].var == l[2].var || l[1].var == l[2].var)
    throw PreconditionError("clause " + std::to_string(clause_no) +
                            ": variables are not distinct");
}

}  // namespace

Formula::Formula(int variable_count, std::vector<Clause> clauses)
    : variable_count_(variable_count), clauses_(std::move(clauses)) {
  if (variable_count_ < 1)
    throw PreconditionError("formula: variable count must be positive");
  if (clauses_.empty()) throw PreconditionError("formula: empty instance");
  for (size_t i = 0; i < clauses_.size(); ++i)
    check_clause(clauses_[i], variable_count_, static_cast<int>(i) + 1);
}

Assignment Assignment::from_index(uint64_t index, int variable_count) {
  std::vector<uint8_t> values(variable_count);
  for (int k = 1; k <= variable_count; ++k)
    values[k - 1] = (index >> (variable_count - k)) & 1u;
  return Assignment(std::move(values));
}

std::string Assignment::to_bits() const {
  std::string bits(values_.size(), '0');
  for (size_t i = 0; i < values_.size(); ++i)
    if (values_[i]) bits[i] = '1';
  return bits;
}

Assignment Assignment::from_bits(const std::string& bits) {
  std::vector<uint8_t> values(bits.size());
  for (size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != '0' && bits[i] != '1')
      throw ParseError("assignment string must be over {0,1}");
    values[i] = bits[i] == '1';
  }
  return Assignment(std::move(values));
}

namespace {

struct DimacsToken {
  long long value = 0;
  int line_no = 0;
};

// Splits a DIMACS body into integer tokens, tracking line numbers and
// skipping comment lines. base_line is the number of lines the header
// consumed before this lexer took over.
class DimacsLexer {
 public:
  DimacsLexer(std::istream& in, int base_line)
      : in_(in), line_no_(base_line) {}

  // Reads tokens of the current line buffer, refilling as needed. Returns
  // false at end of file.
  bool next(DimacsToken& token) {
    for (;;) {
      if (!(line_stream_ >> std::ws) || line_stream_.eof()) {
        if (!refill()) return false;
        continue;
      }
      std::string word;
      line_stream_ >> word;
      try {
        size_t used = 0;
        token.value = std::stoll(word, &used);
        if (used != word.size()) throw std::invalid_argument(word);
      } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line_no_) +
                         ": expected an integer, got '" + word + "'");
      }
      token.line_no = line_no_;
      return true;
    }
  }

  int line_no() const { return line_no_; }

 private:
  bool refill() {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (line.empty() || line[0] == 'c') continue;
      line_stream_.clear();
      line_stream_.str(line);
      return true;
    }
    return false;
  }

  std::istream& in_;
  std::istringstream line_stream_;
  int line_no_;
};

}  // namespace

Formula parse_dimacs(std::istream& in, ParseMode mode) {
  std::string line;
  int line_no = 0;
  long long n = -1, m = -1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream header(line);
    std::string p, kind;
    if (!(header >> p >> kind >> n >> m) || p != "p" || kind != "cnf")
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected 'p cnf <n> <m>'");
    break;
  }
  if (n < 0) throw ParseError("missing 'p cnf' header");
  if (n < 1 || m < 1)
    throw ParseError("header must declare at least one variable and clause");
  if (n > 1'000'000'000 || m > 100'000'000)
    throw ParseError("header declares an implausibly large instance");

  DimacsLexer lexer(in, line_no);
  std::vector<std::vector<Literal>> raw;
  std::vector<Literal> current;
  std::vector<int> clause_line;
  DimacsToken token;
  int pending_line = 0;
  while (lexer.next(token)) {
    if (token.value == 0) {
      raw.push_back(current);
      clause_line.push_back(pending_line);
      current.clear();
      continue;
    }
    long long var = token.value < 0 ? -token.value : token.value;
    if (var > n)
      throw ParseError("line " + std::to_string(token.line_no) +
                       ": literal " + std::to_string(token.value) +
                       " exceeds declared variable count");
    if (current.empty()) pending_line = token.line_no;
    current.push_back(Literal{static_cast<int>(var), token.value > 0});
  }
  if (!current.empty())
    throw ParseError("unterminated clause at end of input (missing 0)");
  if (static_cast<long long>(raw.size()) != m)
    throw ParseError("header declares " + std::to_string(m) +
                     " clauses, file has " + std::to_string(raw.size()));

  std::vector<Clause> clauses;
  clauses.reserve(raw.size());
  for (size_t idx = 0; idx < raw.size(); ++idx) {
    auto lits = raw[idx];
    const std::string where =
        "clause " + std::to_string(idx + 1) + " (line " +
        std::to_string(clause_line[idx]) + ")";
    if (mode == ParseMode::kNormalize) {
      // Drop repeated literals, keeping first occurrences.
      std::vector<Literal> unique;
      for (const auto& lit : lits)
        if (std::find(unique.begin(), unique.end(), lit) == unique.end())
          unique.push_back(lit);
      lits = std::move(unique);
      bool tautology = false;
      for (size_t a = 0; a < lits.size() && !tautology; ++a)
        for (size_t b = a + 1; b < lits.size(); ++b)
          if (lits[a].var == lits[b].var &&
              lits[a].positive != lits[b].positive) {
            tautology = true;
            break;
          }
      if (tautology) continue;
    }
    if (lits.size() != 3)
      throw ParseError(where + ": expected exactly 3 literals, got " +
                       std::to_string(lits.size()));
    Clause c{{lits[0], lits[1], lits[2]}};
    if (c.literals[0].var == c.literals[1].var ||
        c.literals[0].var == c.literals[2].var ||
        c.literals[1].var == c.literals[2].var)
      throw ParseError(where + ": variables are not distinct");
    clauses.push_back(c);
  }
  if (clauses.empty())
    throw ParseError("empty instance: every clause was tautological");
  return Formula(static_cast<int>(n), std::move(clauses));
}

Formula parse_dimacs_file(const std::string& path, ParseMode mode) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_dimacs(in, mode);
}

void write_dimacs(std::ostream& out, const Formula& f) {
  out << "p cnf " << f.variable_count() << ' ' << f.clause_count() << '\n';
  for (const auto& c : f.clauses()) {
    for (const auto& lit : c.literals)
      out << (lit.positive ? lit.var : -lit.var) << ' ';
    out << "0\n";
  }
}

bool clause_satisfied(const Clause& c, const Assignment& a) {
  for (const auto& lit : c.literals)
    if (a.value(lit.var) == lit.positive) return true;
  return false;
}

bool evaluate(const Formula& f, const Assignment& a) {
  if (a.variable_count() != f.variable_count())
    throw PreconditionError(
        "evaluate: assignment covers " + std::to_string(a.variable_count()) +
        " variables, formula has " + std::to_string(f.variable_count()));
  for (const auto& c : f.clauses())
    if (!clause_satisfied(c, a)) return false;
  return true;
}

namespace {

void check_threshold(const Formula& f, int threshold) {
  if (threshold < 0 || threshold > kMaxExhaustiveThreshold)
    throw PreconditionError("exhaustive solve: threshold must be in [0, " +
                            std::to_string(kMaxExhaustiveThreshold) + "]");
  if (f.variable_count() > threshold)
    throw PreconditionError(
        "exhaustive solve: instance has " +
        std::to_string(f.variable_count()) +
        " variables, above the threshold of " + std::to_string(threshold));
}

bool index_satisfies(const Formula& f, uint64_t index) {
  const int n = f.variable_count();
  for (const auto& c : f.clauses()) {
    bool sat = false;
    for (const auto& lit : c.literals) {
      bool value = (index >> (n - lit.var)) & 1u;
      if (value == lit.positive) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

}  // namespace

std::optional<Assignment> exhaustive_solve(const Formula& f, int threshold) {
  check_threshold(f, threshold);
  const int n = f.variable_count();
  const uint64_t total = uint64_t{1} << n;
  const uint64_t block = 1u << 16;

  // Scan fixed-size blocks in order; within a block the parallel loop keeps
  // the smallest satisfying index, so the first hit is still the
  // lexicographically first assignment overall.
  for (uint64_t begin = 0; begin < total; begin += block) {
    const uint64_t end = std::min(total, begin + block);
    uint64_t found = UINT64_MAX;
#pragma omp parallel for schedule(static) reduction(min : found)
    for (long long i = static_cast<long long>(begin);
         i < static_cast<long long>(end); ++i) {
      if (index_satisfies(f, static_cast<uint64_t>(i)))
        found = std::min(found, static_cast<uint64_t>(i));
    }
    if (found != UINT64_MAX) return Assignment::from_index(found, n);
  }
  return std::nullopt;
}

std::optional<Assignment> exhaustive_solve_serial(const Formula& f,
                                                  int threshold) {
  check_threshold(f, threshold);
  const int n = f.variable_count();
  const uint64_t total = uint64_t{1} << n;
  for (uint64_t index = 0; index < total; ++index)
    if (index_satisfies(f, index)) return Assignment::from_index(index, n);
  return std::nullopt;
}

}  // namespace treespan
