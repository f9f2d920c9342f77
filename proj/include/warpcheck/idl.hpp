#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

namespace warpcheck {

/* Integer difference logic: boolean combinations of atoms u - v <= c
   over integer variables 0 .. num_vars-1. */

struct DiffAtom {
  int u = -1, v = -1;
  int64_t c = 0;
};

struct IdlNode;
using IdlPtr = std::shared_ptr<const IdlNode>;

struct IdlNode {
  enum class Kind { Atom, Not, And, Or, Implies, Iff } kind;
  DiffAtom atom;
  std::vector<IdlPtr> kids;
};

IdlPtr idl_atom(int u, int v, int64_t c);
IdlPtr idl_not(IdlPtr f);
IdlPtr idl_and(std::vector<IdlPtr> fs);
IdlPtr idl_or(std::vector<IdlPtr> fs);
IdlPtr idl_implies(IdlPtr a, IdlPtr b);
IdlPtr idl_iff(IdlPtr a, IdlPtr b);

/* A conjunction of formulas over a shared variable space. zero_var, when
   set, is the variable models are normalised against (it reads 0). */
struct IdlProblem {
  std::vector<IdlPtr> conjuncts;
  int num_vars = 0;
  std::optional<int> zero_var;
};

bool idl_eval(const IdlPtr& f, const std::function<int64_t(int)>& val);
bool idl_eval_problem(const IdlProblem& p, const std::vector<int64_t>& model);

void idl_collect_atoms(const IdlPtr& f, std::vector<DiffAtom>& out);

} // namespace warpcheck
