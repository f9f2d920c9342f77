#include "doctest.h"

#include "warpcheck/normalize.hpp"
#include "warpcheck/errors.hpp"
#include "warpcheck/term.hpp"
#include "warpcheck/testkit.hpp"
#include "warpcheck/warp.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

using namespace warpcheck;

namespace {

Equation eq_of(const std::string& s) { return parse_equation(s); }

std::vector<std::vector<std::string>> goal_strings(const GoalSet& gs) {
  std::vector<std::vector<std::string>> out;
  for (const JoinGoal& g : gs.goals) {
    std::vector<std::string> row;
    for (const BasicTerm& b : g) row.push_back(print_term(b.term()));
    out.push_back(row);
  }
  return out;
}

/* Meaning of a goal set at one assignment: every goal's join dominates 1. */
bool goals_hold(const GoalSet& gs, const WarpAssignment& va,
                const WarpAssignment& ca) {
  RegularWarp one = RegularWarp::identity();
  for (const JoinGoal& g : gs.goals) {
    RegularWarp acc = RegularWarp::bottom();
    for (const BasicTerm& b : g) acc = warp_join(acc, term_warp(b.term(), va, ca));
    if (!warp_leq(one, acc)) return false;
  }
  return true;
}

bool equation_holds(const Equation& eq, const WarpAssignment& va,
                    const WarpAssignment& ca) {
  RegularWarp l = term_warp(eq.lhs, va, ca);
  RegularWarp r = term_warp(eq.rhs, va, ca);
  return eq.rel == Relation::LessOrEqual ? warp_leq(l, r)
                                         : (warp_leq(l, r) && warp_leq(r, l));
}

} // namespace

TEST_CASE("inequations become unit inequations") {
  TermPtr t = to_unit_inequation(eq_of("x <= y"));
  CHECK(print_term(t) == "x \\ y");

  t = to_unit_inequation(eq_of("x = y"));
  CHECK(print_term(t) == "(x \\ y) /\\ (y \\ x)");
}

TEST_CASE("residual elimination rewrites both residuals") {
  // x \ y -> (y' x)'
  TermPtr t = eliminate_residuals(parse_term("x \\ y"));
  CHECK(print_term(t) == "(y' * x)'");

  // y / x -> (x y')'
  t = eliminate_residuals(parse_term("y / x"));
  CHECK(print_term(t) == "(x * y')'");

  // nested occurrences are rewritten too
  t = eliminate_residuals(parse_term("(x \\ y) /\\ (y / x)"));
  CHECK(print_term(t) == "(y' * x)' /\\ (x * y')'");

  // residual under a product argument
  t = eliminate_residuals(parse_term("z * (x \\ y)"));
  CHECK(print_term(t) == "z * (y' * x)'");

  // and below an inverse
  t = eliminate_residuals(parse_term("(x \\ y)'"));
  CHECK(print_term(t) == "(y' * x)''");
}

TEST_CASE("residual elimination is semantics preserving") {
  std::vector<std::string> inputs = {
      "x \\ y", "y / x", "(x \\ y) \\ z", "x * (y / z)", "(x \\ y)'",
  };
  WarpAssignment consts = {{"bot", RegularWarp::bottom()},
                           {"top", RegularWarp::top()}};
  for (const std::string& s : inputs) {
    TermPtr before = parse_term(s);
    TermPtr after = eliminate_residuals(before);
    std::vector<std::string> vars = term_vars(before);
    for (uint64_t seed = 0; seed < 40; ++seed) {
      WarpGen gen(seed * 977 + 13);
      WarpAssignment va;
      for (const std::string& v : vars) va[v] = gen.next();
      RegularWarp a = term_warp(before, va, consts);
      RegularWarp b = term_warp(after, va, consts);
      REQUIRE(a == b);
    }
  }
}

TEST_CASE("basic-term simplification") {
  auto simp = [](const std::string& s) {
    return print_term(simplify_basic(BasicTerm(parse_term(s))).term());
  };
  CHECK(simp("x * 1") == "x");
  CHECK(simp("1 * x") == "x");
  CHECK(simp("x''") == "x");
  CHECK(simp("x''''") == "x");
  CHECK(simp("(x * 1)''") == "x");
  CHECK(simp("x' * (1 * y)") == "x' * y");
  CHECK(simp("1 * 1") == "1");
  CHECK(simp("x'''") == "x'");
  CHECK(simp("bot * 1") == "bot");
  // already-normal terms are untouched
  CHECK(simp("x * y'") == "x * y'");
}

TEST_CASE("meet of joins: shapes on small inputs") {
  // a single basic term is one singleton goal
  GoalSet gs = to_meet_of_joins(parse_term("x"));
  REQUIRE(gs.goals.size() == 1);
  CHECK(goal_strings(gs)[0] == std::vector<std::string>{"x"});

  // meets split into separate goals
  gs = to_meet_of_joins(parse_term("x /\\ y"));
  REQUIRE(gs.goals.size() == 2);

  // joins stay inside one goal, sorted by printed form
  gs = to_meet_of_joins(parse_term("y \\/ x"));
  REQUIRE(gs.goals.size() == 1);
  CHECK(goal_strings(gs)[0] == std::vector<std::string>{"x", "y"});

  // product distributes over join on both sides
  gs = to_meet_of_joins(parse_term("(x \\/ y) * z"));
  REQUIRE(gs.goals.size() == 1);
  CHECK(goal_strings(gs)[0] == std::vector<std::string>{"x * z", "y * z"});

  // inverse turns a join into a meet of singletons
  gs = to_meet_of_joins(parse_term("(x \\/ y)'"));
  std::vector<std::vector<std::string>> rows = goal_strings(gs);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == std::vector<std::string>{"x'"});
  CHECK(rows[1] == std::vector<std::string>{"y'"});

  // inverse of a meet keeps the join together
  gs = to_meet_of_joins(parse_term("(x /\\ y)'"));
  rows = goal_strings(gs);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0] == std::vector<std::string>{"x'", "y'"});
}

TEST_CASE("meet of joins dedupes joinands and absorbs wider goals") {
  GoalSet gs = to_meet_of_joins(parse_term("x \\/ x"));
  REQUIRE(gs.goals.size() == 1);
  CHECK(gs.goals[0].size() == 1);

  // (x /\ (x \/ y)) has goals {x} and {x, y}; the second is implied
  gs = to_meet_of_joins(parse_term("x /\\ (x \\/ y)"));
  REQUIRE(gs.goals.size() == 1);
  CHECK(goal_strings(gs)[0] == std::vector<std::string>{"x"});

  // same with the wider goal first
  gs = to_meet_of_joins(parse_term("(x \\/ y) /\\ x"));
  REQUIRE(gs.goals.size() == 1);
  CHECK(goal_strings(gs)[0] == std::vector<std::string>{"x"});

  // duplicate goals collapse
  gs = to_meet_of_joins(parse_term("x /\\ x"));
  CHECK(gs.goals.size() == 1);
}

TEST_CASE("meet of joins with simplification merges rewritten joinands") {
  GoalSet gs = to_meet_of_joins(parse_term("x \\/ (x * 1)"), true);
  REQUIRE(gs.goals.size() == 1);
  CHECK(goal_strings(gs)[0] == std::vector<std::string>{"x"});

  gs = to_meet_of_joins(parse_term("x'' /\\ x"), true);
  CHECK(gs.goals.size() == 1);
}

TEST_CASE("meet of joins rejects residuals") {
  CHECK_THROWS_AS(to_meet_of_joins(parse_term("x \\ y")), std::logic_error);
}

TEST_CASE("stacked inverses stay within the goal budget") {
  // Without absorption this shape squares the goal count at each level.
  Equation eq = eq_of("z /\\ bot = top /\\ 1 \\/ (x \\/ z) /\\ x / z \\/ x");
  GoalSet gs = normalize_equation(eq);
  CHECK(gs.goals.size() <= 64);
}

TEST_CASE("normalization preserves the equation's meaning") {
  std::vector<std::string> eqs = {
      "x <= y",
      "x = y",
      "x * (y \\/ z) = x * y \\/ x * z",
      "(x /\\ y)' = x' \\/ y'",
      "x \\ y = (y' * x)'",
      "1 <= x \\/ x'",
      "x * bot <= y",
      "(x \\/ y) * z <= x * z \\/ y * z",
  };
  WarpAssignment consts = {{"bot", RegularWarp::bottom()},
                           {"top", RegularWarp::top()}};
  for (const std::string& s : eqs) {
    Equation eq = eq_of(s);
    GoalSet gs = normalize_equation(eq);
    std::vector<std::string> vars = equation_vars(eq);
    for (uint64_t seed = 0; seed < 60; ++seed) {
      WarpGen gen(seed * 31 + 7);
      WarpAssignment va;
      for (const std::string& v : vars) va[v] = gen.next();
      REQUIRE(equation_holds(eq, va, consts) == goals_hold(gs, va, consts));
    }
  }
}

TEST_CASE("normalization is deterministic") {
  Equation eq = eq_of("(x \\/ y) * (y \\/ z) = z' /\\ x * y");
  GoalSet a = normalize_equation(eq);
  GoalSet b = normalize_equation(eq);
  CHECK(goal_strings(a) == goal_strings(b));
}

TEST_CASE("runaway distribution raises a resource error") {
  // Each residual layer conjugates the previous normal form; a tower of
  // them overflows any goal budget and must fail cleanly.
  std::string s = "x \\/ y'";
  for (int i = 0; i < 6; ++i) s = "(" + s + ") \\ (y \\/ z * (" + s + "))";
  Equation eq;
  eq.rel = Relation::LessOrEqual;
  eq.lhs = parse_term(s);
  eq.rhs = parse_term("z");
  CHECK_THROWS_AS(normalize_equation(eq), ResourceError);
}
