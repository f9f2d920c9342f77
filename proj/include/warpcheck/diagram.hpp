#pragma once

#include "warpcheck/constants.hpp"
#include "warpcheck/fo.hpp"
#include "warpcheck/normalize.hpp"
#include "warpcheck/sample.hpp"

#include <map>
#include <vector>

namespace warpcheck {

/* The constraints a valuation of a saturated sample set must satisfy to
   describe a family of warps, plus the failure requirement that every
   joinand lands strictly below the distinguished time variable. */
struct ConstraintSet {
  SampleId kappa = -1;
  std::vector<FOPtr> structural; // order, zero, successor, stabilisation
  std::vector<FOPtr> monoid;     // unit and composition laws
  std::vector<FOPtr> inverse;    // involution bounds
  std::vector<FOPtr> constant;   // registered-constant axioms
  std::vector<FOPtr> fail;       // t_i[kappa] < kappa per joinand
  std::map<int, int> schema_count; // schema number -> instances generated
  int aux_count = 0;

  std::vector<FOPtr> all() const;
  std::vector<FOPtr> background() const; // everything except fail
};

/* Instantiates the constraint schemas over a saturated sample set.
   Throws std::logic_error if delta is not closed under the derivation
   rules or does not contain t[kappa] for every joinand. */
ConstraintSet generate(const SampleTable& table, const std::vector<SampleId>& delta,
                       const std::vector<BasicTerm>& joinands, SampleId kappa,
                       const ConstantRegistry& registry);

/* Evaluates all constraints under a valuation of samples (and auxiliary
   variables, if any). Throws std::invalid_argument on an unassigned
   variable. */
bool satisfies(const std::map<SampleId, OmegaPlus>& delta_val,
               const std::map<int, OmegaPlus>& aux_val, const ConstraintSet& cs);

/* Indented spanning tree of the saturated set, derivation order. */
std::string print_saturation_tree(SampleTable& table, const std::vector<SampleId>& seeds);

std::string print_constraints(const ConstraintSet& cs, const SampleTable& table);

} // namespace warpcheck
