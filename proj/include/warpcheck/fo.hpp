#pragma once

#include "warpcheck/omega.hpp"
#include "warpcheck/sample.hpp"

#include <functional>
#include <memory>
#include <vector>

namespace warpcheck {

/* First-order constraints over omega-plus in the signature
   { <=, successor, 0, w }. Terms are flat: a sample variable, an
   auxiliary variable, or one of the two constants. The successor symbol
   appears only at the root of an EqSuc atom. */

struct FOTerm {
  enum class Kind { Sample, Aux, Zero, Omega } kind;
  int id = -1; // Sample, Aux

  static FOTerm sample(SampleId s) { return {Kind::Sample, s}; }
  static FOTerm aux(int a) { return {Kind::Aux, a}; }
  static FOTerm zero() { return {Kind::Zero, -1}; }
  static FOTerm omega_c() { return {Kind::Omega, -1}; }
};

struct FOFormula;
using FOPtr = std::shared_ptr<const FOFormula>;

struct FOFormula {
  enum class Kind { Leq, Eq, EqSuc, Not, And, Or, Implies, Iff } kind;
  FOTerm a, b;              // atoms; EqSuc(a, b) reads a = S(b)
  std::vector<FOPtr> kids;  // Not: 1; Implies, Iff: 2; And, Or: n-ary
};

FOPtr fo_leq(FOTerm a, FOTerm b);
FOPtr fo_eq(FOTerm a, FOTerm b);
FOPtr fo_eqsuc(FOTerm a, FOTerm b); // a = S(b)
FOPtr fo_not(FOPtr f);
FOPtr fo_and(std::vector<FOPtr> fs);
FOPtr fo_or(std::vector<FOPtr> fs);
FOPtr fo_implies(FOPtr a, FOPtr b);
FOPtr fo_iff(FOPtr a, FOPtr b);
/* a < b, expanded to a <= b and not (b <= a). */
FOPtr fo_lt(FOTerm a, FOTerm b);

/* Valuation of FO terms in omega-plus. */
using FOValuation = std::function<OmegaPlus(const FOTerm&)>;

bool fo_eval(const FOPtr& f, const FOValuation& val);

/* Rendering for diagnostics: samples by their printed form, w for omega,
   S(-) for successor, the a < b sugar recovered where it occurs. */
std::string fo_print(const FOPtr& f, const SampleTable& table);

/* All sample and auxiliary variables occurring in a formula. */
void fo_collect_vars(const FOPtr& f, std::vector<SampleId>& samples, std::vector<int>& auxs);

} // namespace warpcheck
