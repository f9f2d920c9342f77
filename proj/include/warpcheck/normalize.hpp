#pragma once

#include "warpcheck/term.hpp"

#include <vector>

namespace warpcheck {

/* One disjunction of basic terms; the whole goal is "1 <= join of these". */
using JoinGoal = std::vector<BasicTerm>;

/* Conjunction of goals. The source equation holds iff every goal does. */
struct GoalSet {
  std::vector<JoinGoal> goals;
};

/* u <= v becomes 1 <= u \ v; u = v becomes 1 <= (u \ v) /\ (v \ u). */
TermPtr to_unit_inequation(const Equation& eq);

/* Rewrites residuals away: x \ y -> (y' x)', y / x -> (x y')'. */
TermPtr eliminate_residuals(const TermPtr& t);

/* Distributes a residual-free term into a meet of joins of basic terms.
   Goals are kept as a minimal antichain under joinand-set inclusion: a
   goal that extends another by extra joinands is implied by it and is
   dropped, which keeps stacked inverses from cross-multiplying the
   representation. Joinands are deduplicated and kept sorted by their
   printed form, so goal order is deterministic. When simplify is set,
   every joinand is rewritten (t*1 -> t, 1*t -> t, t'' -> t) as it is
   produced, which lets more of them collide and be pruned early. */
GoalSet to_meet_of_joins(const TermPtr& t, bool simplify = false);

/* Normal form for t*1 -> t, 1*t -> t, t'' -> t. The rewrite system is
   confluent and terminating, so the result is order independent. */
BasicTerm simplify_basic(const BasicTerm& t);

/* The composition of the above, with optional basic-term simplification. */
GoalSet normalize_equation(const Equation& eq, bool simplify = true);

} // namespace warpcheck
