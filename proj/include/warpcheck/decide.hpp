#pragma once

#include "warpcheck/constants.hpp"
#include "warpcheck/errors.hpp"
#include "warpcheck/normalize.hpp"
#include "warpcheck/omega.hpp"
#include "warpcheck/term.hpp"
#include "warpcheck/warp.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace warpcheck {

enum class Backend { Internal, Smtlib };

struct DecideOptions {
  bool simplify = true;      // basic-term rewriting during normalisation
  Backend backend = Backend::Internal;
  std::string smt_solver;    // external command; env fallback applies
  int smt_timeout = 0;       // seconds; 0 means none
  int64_t budget = 1'000'000; // internal solver decision budget
  bool all_goals = false;    // collect every failing goal, not just the first
  std::ostream* trace = nullptr; // saturation/constraint narration when set
  std::string emit_smtlib;   // write each goal's script here (.N suffix if several)
};

struct Counterexample {
  int goal_index = 0;
  std::string goal_text; // the failing join of basic terms
  OmegaPlus witness;     // instant at which every joinand drops below it
  WarpAssignment vars;   // reconstructed warps, one per equation variable
  std::vector<std::pair<std::string, OmegaPlus>> diagram; // sample -> value
};

struct DecideResult {
  bool valid = false;
  GoalSet goals;
  std::vector<Counterexample> counterexamples; // nonempty iff not valid
};

/* Decides eq against all join-preserving maps on omega-plus. Every
   returned counterexample has been replayed concretely: the goal's
   joinands are evaluated at the witness and checked to fall below it. */
DecideResult decide(const Equation& eq, const ConstantRegistry& registry,
                    const DecideOptions& opts = {});

/* Command-line driver. Exit codes: 0 valid, 1 invalid, 2 usage or parse
   error, 3 resource limit, 4 internal error. */
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace warpcheck
