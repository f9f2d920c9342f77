#pragma once

#include "warpcheck/idl.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace warpcheck {

enum class SolveStatus { Sat, Unsat, BudgetExceeded };

struct SolveResult {
  SolveStatus status = SolveStatus::Unsat;
  std::vector<int64_t> model; // per variable; meaningful when Sat
  int64_t decisions = 0;
};

/* SAT-modulo-differences. The formula becomes a Tseitin CNF with shared
   gates; DPLL runs over it with two-watched-literal propagation and
   chronological backtracking, picking decision variables by conflict
   activity with ties broken on the index, so runs are reproducible.
   Asserted difference atoms feed an incremental graph kept feasible by
   a potential function; an assertion that cannot be repaired is exactly
   a negative cycle, which comes back as a learned clause, and repairs
   propagate atoms entailed (or refuted) by the new shortest paths. Sat
   models are normalised so zero_var reads 0 (or the minimum does, when
   no zero_var is set), and are re-checked against the original
   conjuncts before being returned. */
SolveResult solve_idl(const IdlProblem& p, int64_t max_decisions = 1'000'000);

/* Exhaustive search over the box {0..bound}^n, with zero_var (when set)
   fixed to 0. Returns nothing when the box exceeds `cap` points. An
   Unsat result means only that no model lies inside the box. */
std::optional<SolveResult> solve_bruteforce(const IdlProblem& p, int64_t bound,
                                            int64_t cap = 10'000'000);

} // namespace warpcheck
