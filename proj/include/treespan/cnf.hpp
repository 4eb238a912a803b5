#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "treespan/errors.hpp"

namespace treespan {

struct Literal {
  int var = 0;  // 1-based variable index
  bool positive = true;

  bool operator==(const Literal&) const = default;
};

// Disjunction of exactly three literals over three distinct variables.
struct Clause {
  std::array<Literal, 3> literals;

  bool operator==(const Clause&) const = default;
};

// Nonempty 3-CNF instance. Clause order and literal order are preserved from
// the input; downstream constructions iterate in exactly this order.
class Formula {
 public:
  Formula(int variable_count, std::vector<Clause> clauses);

  int variable_count() const { return variable_count_; }
  int clause_count() const { return static_cast<int>(clauses_.size()); }
  const std::vector<Clause>& clauses() const { return clauses_; }
  const Clause& clause(int c) const { return clauses_[c - 1]; }  // 1-based

  bool operator==(const Formula&) const = default;

 private:
  int variable_count_;
  std::vector<Clause> clauses_;
};

// Total truth assignment over x1..xn.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::vector<uint8_t> values) : values_(std::move(values)) {}

  // Bit n-k of index is the value of x_k: x1 is the most significant, so
  // numeric order on indices is lexicographic order on assignments.
  static Assignment from_index(uint64_t index, int variable_count);

  int variable_count() const { return static_cast<int>(values_.size()); }
  bool value(int var) const { return values_[var - 1] != 0; }
  void set(int var, bool v) { values_[var - 1] = v ? 1 : 0; }

  // E.g. "101" for a(x1)=1, a(x2)=0, a(x3)=1.
  std::string to_bits() const;
  static Assignment from_bits(const std::string& bits);

  bool operator==(const Assignment&) const = default;

 private:
  std::vector<uint8_t> values_;
};

enum class ParseMode { kStrict, kNormalize };

// DIMACS CNF reader. Strict mode requires every clause to have exactly three
// literals over three distinct variables. Normalize mode first drops
// duplicate literals and tautological clauses, then applies the strict
// check; an instance whose clauses all vanish is an error.
Formula parse_dimacs(std::istream& in, ParseMode mode);
Formula parse_dimacs_file(const std::string& path, ParseMode mode);
void write_dimacs(std::ostream& out, const Formula& f);

bool clause_satisfied(const Clause& c, const Assignment& a);

// True iff every clause has a literal made true by a. The assignment must be
// total over the formula's variables.
bool evaluate(const Formula& f, const Assignment& a);

inline constexpr int kDefaultExhaustiveThreshold = 20;
inline constexpr int kMaxExhaustiveThreshold = 30;

// Lexicographically first satisfying assignment, or nullopt if none exists.
// Refuses instances with more variables than the threshold.
std::optional<Assignment> exhaustive_solve(
    const Formula& f, int threshold = kDefaultExhaustiveThreshold);

// Serial reference for the blocked parallel scan above.
std::optional<Assignment> exhaustive_solve_serial(
    const Formula& f, int threshold = kDefaultExhaustiveThreshold);

}  // namespace treespan
