#pragma once

#include "warpcheck/diagram.hpp"
#include "warpcheck/idl.hpp"
#include "warpcheck/omega.hpp"

#include <map>

namespace warpcheck {

/* Mapping from omega-plus to the naturals: w reads 0, a finite n reads
   n + 1. Two distinguished integer variables stand for the encoded
   constants: zero_var (the image of w) and one_var (the image of 0),
   pinned one above zero_var. Every difference constant stays in
   {-1, 0, 1}. */

struct VarMap {
  std::map<SampleId, int> sample_var;
  std::map<int, int> aux_var;
  int zero_var = -1;
  int one_var = -1;
  int num_vars = 0;
};

struct EncodedQuery {
  IdlProblem problem;
  VarMap vars;
};

/* Encodes one constraint; the map must already cover its variables. */
IdlPtr encode_formula(const FOPtr& f, const VarMap& vm);

/* Encodes background + failure constraints, nonnegativity for every
   variable, and the pin of one_var. */
EncodedQuery encode_query(const ConstraintSet& cs);

/* Interprets a solver value: 0 is w, n >= 1 is n - 1. */
OmegaPlus decode_value(int64_t n);

/* Largest value a satisfiable encoded query may need, given the number of
   sample and auxiliary variables. */
int64_t small_model_bound(size_t delta_size, size_t aux_count);

} // namespace warpcheck
