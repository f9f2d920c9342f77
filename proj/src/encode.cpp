#include "warpcheck/encode.hpp"

#include <algorithm>
#include <stdexcept>

namespace warpcheck {

namespace {

int var_of(const FOTerm& t, const VarMap& vm) {
  switch (t.kind) {
    case FOTerm::Kind::Zero: return vm.one_var;
    case FOTerm::Kind::Omega: return vm.zero_var;
    case FOTerm::Kind::Sample: {
      auto it = vm.sample_var.find(t.id);
      if (it == vm.sample_var.end())
        throw std::logic_error("encode: sample variable missing from map");
      return it->second;
    }
    case FOTerm::Kind::Aux: {
      auto it = vm.aux_var.find(t.id);
      if (it == vm.aux_var.end())
        throw std::logic_error("encode: auxiliary variable missing from map");
      return it->second;
    }
  }
  throw std::logic_error("encode: bad FO term");
}

IdlPtr enc_eq(int a, int b) {
  return idl_and({idl_atom(a, b, 0), idl_atom(b, a, 0)});
}

/* a reads as b + 1 */
IdlPtr enc_succ_eq(int a, int b) {
  return idl_and({idl_atom(a, b, 1), idl_atom(b, a, -1)});
}

} // namespace

IdlPtr encode_formula(const FOPtr& f, const VarMap& vm) {
  switch (f->kind) {
    case FOFormula::Kind::Leq: {
      // u <= v holds when v encodes w, or u encodes a positive value
      // (i.e. a finite one) no greater than v's.
      int u = var_of(f->a, vm), v = var_of(f->b, vm);
      return idl_or({enc_eq(v, vm.zero_var),
                     idl_and({idl_atom(vm.one_var, u, 0), idl_atom(u, v, 0)})});
    }
    case FOFormula::Kind::Eq:
      return enc_eq(var_of(f->a, vm), var_of(f->b, vm));
    case FOFormula::Kind::EqSuc: {
      // a = S(b): either b is w and then a is w, or b is finite and a
      // encodes one more than b.
      int a = var_of(f->a, vm), b = var_of(f->b, vm);
      return idl_or({idl_and({enc_eq(b, vm.zero_var), enc_eq(a, vm.zero_var)}),
                     idl_and({idl_atom(vm.one_var, b, 0), enc_succ_eq(a, b)})});
    }
    case FOFormula::Kind::Not:
      return idl_not(encode_formula(f->kids[0], vm));
    case FOFormula::Kind::And: {
      std::vector<IdlPtr> kids;
      for (const auto& k : f->kids) kids.push_back(encode_formula(k, vm));
      return idl_and(std::move(kids));
    }
    case FOFormula::Kind::Or: {
      std::vector<IdlPtr> kids;
      for (const auto& k : f->kids) kids.push_back(encode_formula(k, vm));
      return idl_or(std::move(kids));
    }
    case FOFormula::Kind::Implies:
      return idl_implies(encode_formula(f->kids[0], vm), encode_formula(f->kids[1], vm));
    case FOFormula::Kind::Iff:
      return idl_iff(encode_formula(f->kids[0], vm), encode_formula(f->kids[1], vm));
  }
  throw std::logic_error("encode: bad FO formula");
}

EncodedQuery encode_query(const ConstraintSet& cs) {
  EncodedQuery q;
  VarMap& vm = q.vars;
  vm.zero_var = vm.num_vars++;
  vm.one_var = vm.num_vars++;

  std::vector<SampleId> samples;
  std::vector<int> auxs;
  for (const FOPtr& f : cs.all()) fo_collect_vars(f, samples, auxs);
  // kappa may occur even if some constraint sets omit it; register anyway.
  if (cs.kappa >= 0 &&
      std::find(samples.begin(), samples.end(), cs.kappa) == samples.end())
    samples.push_back(cs.kappa);
  std::sort(samples.begin(), samples.end());
  std::sort(auxs.begin(), auxs.end());
  for (SampleId s : samples) vm.sample_var.emplace(s, vm.num_vars++);
  for (int a : auxs) vm.aux_var.emplace(a, vm.num_vars++);

  q.problem.num_vars = vm.num_vars;
  q.problem.zero_var = vm.zero_var;

  // one_var pinned directly above zero_var.
  q.problem.conjuncts.push_back(enc_succ_eq(vm.one_var, vm.zero_var));
  // Nonnegativity for every variable.
  for (int v = 0; v < vm.num_vars; ++v)
    q.problem.conjuncts.push_back(idl_atom(vm.zero_var, v, 0));

  for (const FOPtr& f : cs.all())
    q.problem.conjuncts.push_back(encode_formula(f, vm));
  return q;
}

OmegaPlus decode_value(int64_t n) {
  if (n < 0) throw std::invalid_argument("decode_value: negative solver value");
  if (n == 0) return omega;
  return OmegaPlus::fin(n - 1);
}

int64_t small_model_bound(size_t delta_size, size_t aux_count) {
  return static_cast<int64_t>(delta_size) + static_cast<int64_t>(aux_count) + 2;
}

} // namespace warpcheck
