#pragma once

#include "warpcheck/term.hpp"
#include "warpcheck/warp.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace warpcheck {

/* Deterministic random generators for the test suites. Everything is
   driven by std::mt19937_64, so a seed pins the whole run. */

class WarpGen {
public:
  explicit WarpGen(uint64_t seed) : rng_(seed) {}

  /* Valid by construction: monotone prefix of length <= 6 with values
     <= 8 (or omega), tails with offsets in [-6, 6]. */
  RegularWarp next();

  std::mt19937_64& rng() { return rng_; }

private:
  std::mt19937_64 rng_;
};

class TermGen {
public:
  explicit TermGen(uint64_t seed, int max_depth = 4,
                   std::vector<std::string> vars = {"x", "y", "z"},
                   std::vector<std::string> consts = {"bot", "top"});

  TermPtr next() { return gen(max_depth_); }

private:
  TermPtr gen(int depth);

  std::mt19937_64 rng_;
  int max_depth_;
  std::vector<std::string> vars_, consts_;
};

Equation random_equation(uint64_t seed, int max_depth = 4);

struct FoundCounterexample {
  WarpAssignment vars;
  OmegaPlus point;
};

/* Random search over warp assignments. Per assignment the check is
   exact: the two sides are compared as warps, and a failing assignment
   always yields a concrete point (canonical warps that differ must
   differ on {0..m+1, w}). */
std::optional<FoundCounterexample> falsify_by_search(const Equation& eq,
                                                     const WarpAssignment& consts,
                                                     uint64_t seed, int trials = 200);

} // namespace warpcheck
