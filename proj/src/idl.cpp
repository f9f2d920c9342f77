#include "warpcheck/idl.hpp"

#include <algorithm>

namespace warpcheck {

namespace {

IdlPtr conn(IdlNode::Kind k, std::vector<IdlPtr> kids) {
  auto f = std::make_shared<IdlNode>();
  f->kind = k;
  f->kids = std::move(kids);
  return f;
}

} // namespace

IdlPtr idl_atom(int u, int v, int64_t c) {
  auto f = std::make_shared<IdlNode>();
  f->kind = IdlNode::Kind::Atom;
  f->atom = {u, v, c};
  return f;
}

IdlPtr idl_not(IdlPtr f) { return conn(IdlNode::Kind::Not, {std::move(f)}); }
IdlPtr idl_and(std::vector<IdlPtr> fs) { return conn(IdlNode::Kind::And, std::move(fs)); }
IdlPtr idl_or(std::vector<IdlPtr> fs) { return conn(IdlNode::Kind::Or, std::move(fs)); }
IdlPtr idl_implies(IdlPtr a, IdlPtr b) {
  return conn(IdlNode::Kind::Implies, {std::move(a), std::move(b)});
}
IdlPtr idl_iff(IdlPtr a, IdlPtr b) {
  return conn(IdlNode::Kind::Iff, {std::move(a), std::move(b)});
}

bool idl_eval(const IdlPtr& f, const std::function<int64_t(int)>& val) {
  switch (f->kind) {
    case IdlNode::Kind::Atom:
      return val(f->atom.u) - val(f->atom.v) <= f->atom.c;
    case IdlNode::Kind::Not:
      return !idl_eval(f->kids[0], val);
    case IdlNode::Kind::And:
      return std::all_of(f->kids.begin(), f->kids.end(),
                         [&](const IdlPtr& k) { return idl_eval(k, val); });
    case IdlNode::Kind::Or:
      return std::any_of(f->kids.begin(), f->kids.end(),
                         [&](const IdlPtr& k) { return idl_eval(k, val); });
    case IdlNode::Kind::Implies:
      return !idl_eval(f->kids[0], val) || idl_eval(f->kids[1], val);
    case IdlNode::Kind::Iff:
      return idl_eval(f->kids[0], val) == idl_eval(f->kids[1], val);
  }
  return false;
}

bool idl_eval_problem(const IdlProblem& p, const std::vector<int64_t>& model) {
  auto val = [&](int v) { return model.at(static_cast<size_t>(v)); };
  return std::all_of(p.conjuncts.begin(), p.conjuncts.end(),
                     [&](const IdlPtr& f) { return idl_eval(f, val); });
}

void idl_collect_atoms(const IdlPtr& f, std::vector<DiffAtom>& out) {
  if (f->kind == IdlNode::Kind::Atom) {
    out.push_back(f->atom);
    return;
  }
  for (const auto& k : f->kids) idl_collect_atoms(k, out);
}

} // namespace warpcheck
