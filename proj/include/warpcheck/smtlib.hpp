#pragma once

#include "warpcheck/idl.hpp"

#include <optional>
#include <string>
#include <vector>

namespace warpcheck {

/* QF_IDL script for an external solver. Variables are named v0..vN-1;
   every atom is rendered as (<= (- u v) c). When zero_var is set it is
   pinned to 0 so models decode directly. */
std::string to_smtlib(const IdlProblem& p);

struct SmtResult {
  enum class Status { Sat, Unsat, Unknown, Error } status = Status::Error;
  std::vector<int64_t> model; // meaningful when Sat, normalised to zero_var = 0
  std::string detail;         // raw solver output or an error note
};

/* Parses `sat`/`unsat`/`unknown` plus (define-fun vK () Int n) bindings,
   including (- n) literals. Variables the solver omits default to 0. */
SmtResult parse_smt_output(const std::string& output, const IdlProblem& p);

/* Resolves the solver command line: an explicit value wins, otherwise the
   WARPCHECK_SMT_SOLVER environment variable, otherwise nothing. */
std::optional<std::string> smt_solver_command(const std::string& explicit_cmd);

/* Writes the script to a temp file and runs `cmd <file>` through the
   shell, wrapped in `timeout <secs>` when timeout_secs > 0. */
SmtResult run_smt_solver(const std::string& cmd, const IdlProblem& p,
                         int timeout_secs = 0);

} // namespace warpcheck
