#include <sstream>

#include "doctest.h"
#include "test_util.hpp"
#include "treespan/cnf.hpp"

using namespace treespan;
namespace tu = treespan::testutil;

namespace {

Formula parse(const std::string& text, ParseMode mode = ParseMode::kStrict) {
  std::istringstream in(text);
  return parse_dimacs(in, mode);
}

}  // namespace

TEST_CASE("plain strict parse") {
  Formula f = parse("p cnf 3 1\n1 2 -3 0\n");
  CHECK(f.variable_count() == 3);
  REQUIRE(f.clause_count() == 1);
  CHECK(f.clause(1).literals[0] == Literal{1, true});
  CHECK(f.clause(1).literals[1] == Literal{2, true});
  CHECK(f.clause(1).literals[2] == Literal{3, false});
}

TEST_CASE("comments, blank lines and clauses spanning lines") {
  Formula f = parse("c header comment\np cnf 4 2\nc inner\n1 2\n-3 0\n2 3 4 0\n");
  CHECK(f.clause_count() == 2);
  CHECK(f.clause(1).literals[2] == Literal{3, false});
}

TEST_CASE("normalize drops tautologies and can empty the instance") {
  Formula f = parse("p cnf 3 2\n1 -1 2 0\n1 2 3 0\n", ParseMode::kNormalize);
  CHECK(f.clause_count() == 1);
  CHECK(f.clause(1).literals[0] == Literal{1, true});

  CHECK_THROWS_WITH_AS(parse("p cnf 3 1\n1 -1 2 0\n", ParseMode::kNormalize),
                       doctest::Contains("empty instance"), ParseError);
}

TEST_CASE("three-distinct-variables rule") {
  CHECK_THROWS_WITH_AS(parse("p cnf 3 1\n1 1 2 0\n"),
                       doctest::Contains("distinct"), ParseError);
  // Deduplication leaves two literals, which strict checking rejects.
  CHECK_THROWS_WITH_AS(parse("p cnf 3 1\n1 1 2 0\n", ParseMode::kNormalize),
                       doctest::Contains("3 literals"), ParseError);
  CHECK_THROWS_AS(parse("p cnf 4 1\n1 2 3 4 0\n"), ParseError);
  CHECK_THROWS_AS(parse("p cnf 3 1\n1 2 0\n"), ParseError);
}

TEST_CASE("syntax errors carry line numbers") {
  CHECK_THROWS_WITH_AS(parse("p cnf 3 1\n1 two 3 0\n"),
                       doctest::Contains("line 2"), ParseError);
  CHECK_THROWS_WITH_AS(parse("nonsense\n"), doctest::Contains("line 1"),
                       ParseError);
  CHECK_THROWS_WITH_AS(parse("p cnf 2 1\n1 2 3 0\n"),
                       doctest::Contains("exceeds"), ParseError);
  CHECK_THROWS_WITH_AS(parse("p cnf 3 2\n1 2 3 0\n"),
                       doctest::Contains("declares"), ParseError);
  CHECK_THROWS_WITH_AS(parse("p cnf 3 1\n1 2 3 0\n-1 2 3 0\n"),
                       doctest::Contains("declares"), ParseError);
  CHECK_THROWS_WITH_AS(parse("p cnf 3 1\n1 2 3\n"),
                       doctest::Contains("unterminated"), ParseError);
}

TEST_CASE("evaluate on the single-clause instance") {
  Formula f = tu::phi1();
  CHECK(evaluate(f, Assignment::from_bits("101")));
  CHECK(!evaluate(f, Assignment::from_bits("001")));
  CHECK_THROWS_AS(evaluate(f, Assignment::from_bits("10")), PreconditionError);
}

TEST_CASE("the all-sign-patterns formula is falsified by every assignment") {
  Formula f = tu::all_sign_patterns();
  for (uint64_t idx = 0; idx < 8; ++idx)
    CHECK(!evaluate(f, Assignment::from_index(idx, 3)));
}

TEST_CASE("exhaustive solve returns the lexicographically first model") {
  auto a = exhaustive_solve(tu::phi1());
  REQUIRE(a.has_value());
  CHECK(a->to_bits() == "000");
  CHECK(!exhaustive_solve(tu::all_sign_patterns()).has_value());
}

TEST_CASE("exhaustive solve refuses too many variables") {
  Formula wide(21, {Clause{{Literal{1, true}, Literal{2, true},
                            Literal{3, true}}}});
  CHECK_THROWS_WITH_AS(exhaustive_solve(wide), doctest::Contains("threshold"),
                       PreconditionError);
  CHECK_NOTHROW(exhaustive_solve(wide, 21));
  CHECK_THROWS_AS(exhaustive_solve(wide, 40), PreconditionError);
}

TEST_CASE("solver kernel agrees with the serial scan and with brute truth") {
  SplitMix64 rng(31);
  for (int round = 0; round < 60; ++round) {
    int n = 3 + static_cast<int>(rng.below(10));  // up to 12 variables
    int m = 1 + static_cast<int>(rng.below(12));
    Formula f = tu::random_formula(n, m, rng);
    auto fast = exhaustive_solve(f);
    auto slow = exhaustive_solve_serial(f);
    CHECK(fast == slow);
    if (fast) {
      CHECK(evaluate(f, *fast));
    } else {
      for (uint64_t idx = 0; idx < (uint64_t{1} << n); ++idx)
        CHECK(!evaluate(f, Assignment::from_index(idx, n)));
    }
  }
}

TEST_CASE("parse then serialize round-trips order") {
  SplitMix64 rng(32);
  for (int round = 0; round < 20; ++round) {
    Formula f = tu::random_formula(3 + round % 5, 1 + round % 7, rng);
    std::ostringstream out;
    write_dimacs(out, f);
    Formula back = parse(out.str());
    CHECK(back == f);
  }
}

TEST_CASE("assignment bit strings") {
  Assignment a = Assignment::from_bits("0110");
  CHECK(a.variable_count() == 4);
  CHECK(!a.value(1));
  CHECK(a.value(2));
  CHECK(a.to_bits() == "0110");
  CHECK(Assignment::from_index(0b0110, 4) == a);
  CHECK_THROWS_AS(Assignment::from_bits("01x"), ParseError);
}

TEST_CASE("formula invariants") {
  CHECK_THROWS_AS(Formula(3, {}), PreconditionError);
  CHECK_THROWS_AS(Formula(2, {Clause{{Literal{1, true}, Literal{2, true},
                                      Literal{3, true}}}}),
                  PreconditionError);
  CHECK_THROWS_AS(Formula(3, {Clause{{Literal{1, true}, Literal{1, false},
                                      Literal{3, true}}}}),
                  PreconditionError);
}
