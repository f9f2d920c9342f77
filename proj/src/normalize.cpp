#include "warpcheck/normalize.hpp"

#include "warpcheck/errors.hpp"

#include <algorithm>
#include <iterator>
#include <map>

namespace warpcheck {

TermPtr to_unit_inequation(const Equation& eq) {
  if (eq.rel == Relation::LessOrEqual) return mk_resl(eq.lhs, eq.rhs);
  return mk_meet(mk_resl(eq.lhs, eq.rhs), mk_resl(eq.rhs, eq.lhs));
}

TermPtr eliminate_residuals(const TermPtr& t) {
  switch (t->kind) {
    case TermKind::Var:
    case TermKind::Unit:
    case TermKind::Const:
      return t;
    case TermKind::Inv:
      return mk_inv(eliminate_residuals(t->left));
    case TermKind::ResL: {
      // l \ r == (r' l)'
      TermPtr l = eliminate_residuals(t->left);
      TermPtr r = eliminate_residuals(t->right);
      return mk_inv(mk_prod(mk_inv(r), l));
    }
    case TermKind::ResR: {
      // l / r == (r l')'
      TermPtr l = eliminate_residuals(t->left);
      TermPtr r = eliminate_residuals(t->right);
      return mk_inv(mk_prod(r, mk_inv(l)));
    }
    default:
      break;
  }
  auto mk = t->kind == TermKind::Meet   ? mk_meet
            : t->kind == TermKind::Join ? mk_join
                                        : mk_prod;
  return mk(eliminate_residuals(t->left), eliminate_residuals(t->right));
}

namespace {

TermPtr simplify_rec(const TermPtr& t) {
  switch (t->kind) {
    case TermKind::Var:
    case TermKind::Unit:
    case TermKind::Const:
      return t;
    case TermKind::Inv: {
      TermPtr sub = simplify_rec(t->left);
      if (sub->kind == TermKind::Inv) return sub->left;
      return mk_inv(sub);
    }
    case TermKind::Prod: {
      TermPtr l = simplify_rec(t->left);
      TermPtr r = simplify_rec(t->right);
      if (l->kind == TermKind::Unit) return r;
      if (r->kind == TermKind::Unit) return l;
      return mk_prod(l, r);
    }
    default:
      throw std::logic_error("simplify_basic: non-basic node");
  }
}

/* Nested inverses square the naive meet-of-joins each time they are
   crossed out. Goal counts and total distribution work are both capped:
   hitting a cap means the input is out of reach, not that the answer is
   wrong, and callers see a clean resource error instead of an effective
   hang. */
constexpr size_t kGoalCap = 4096;
constexpr size_t kWorkCap = 20'000'000;

/* Meet-of-joins under construction. Joinands are interned by printed
   form so goals are plain id sets, and the goal list is a minimal
   antichain under inclusion: supersets are implied and dropped. */
struct NfCtx {
  bool simplify;
  size_t work = 0;
  std::map<std::string, int> ids;
  std::vector<TermPtr> terms;

  void charge(size_t units) {
    work += units;
    if (work > kWorkCap) throw ResourceError("normal form distribution budget exhausted");
  }

  int intern(TermPtr t) {
    if (simplify) t = simplify_rec(t);
    std::string key = print_term(t);
    charge(key.size());
    auto [it, fresh] = ids.emplace(std::move(key), static_cast<int>(terms.size()));
    if (fresh) terms.push_back(std::move(t));
    return it->second;
  }
};

using Goal = std::vector<int>; // sorted, unique joinand ids
using Nf = std::vector<Goal>;

void add_goal(NfCtx& cx, Nf& nf, Goal g) {
  cx.charge(nf.size() + g.size());
  for (const Goal& h : nf)
    if (std::includes(g.begin(), g.end(), h.begin(), h.end())) return;
  nf.erase(std::remove_if(nf.begin(), nf.end(),
                          [&](const Goal& h) {
                            return std::includes(h.begin(), h.end(), g.begin(), g.end());
                          }),
           nf.end());
  if (nf.size() >= kGoalCap)
    throw ResourceError("normal form exceeds " + std::to_string(kGoalCap) + " goals");
  nf.push_back(std::move(g));
}

Nf meet_nf(NfCtx& cx, Nf a, const Nf& b) {
  for (const Goal& g : b) add_goal(cx, a, g);
  return a;
}

Nf join_nf(NfCtx& cx, const Nf& a, const Nf& b) {
  Nf out;
  for (const Goal& ga : a)
    for (const Goal& gb : b) {
      Goal g;
      std::set_union(ga.begin(), ga.end(), gb.begin(), gb.end(), std::back_inserter(g));
      add_goal(cx, out, std::move(g));
    }
  return out;
}

Nf prod_nf(NfCtx& cx, const Nf& a, const Nf& b) {
  Nf out;
  for (const Goal& ga : a)
    for (const Goal& gb : b) {
      Goal g;
      for (int ia : ga)
        for (int ib : gb) g.push_back(cx.intern(mk_prod(cx.terms[ia], cx.terms[ib])));
      std::sort(g.begin(), g.end());
      g.erase(std::unique(g.begin(), g.end()), g.end());
      add_goal(cx, out, std::move(g));
    }
  return out;
}

/* (meet_i join_j t_ij)' == join_i meet_j t_ij', folded back into a meet
   of joins one goal at a time so absorption prunes as the cross product
   grows. */
Nf inv_nf(NfCtx& cx, const Nf& a) {
  Nf acc{{}};
  for (const Goal& goal : a) {
    Nf step;
    for (int id : goal) add_goal(cx, step, {cx.intern(mk_inv(cx.terms[id]))});
    acc = join_nf(cx, acc, step);
  }
  return acc;
}

Nf build_nf(NfCtx& cx, const TermPtr& t) {
  switch (t->kind) {
    case TermKind::Var:
    case TermKind::Unit:
    case TermKind::Const:
      return {{cx.intern(t)}};
    case TermKind::Meet:
      return meet_nf(cx, build_nf(cx, t->left), build_nf(cx, t->right));
    case TermKind::Join:
      return join_nf(cx, build_nf(cx, t->left), build_nf(cx, t->right));
    case TermKind::Prod: {
      if (is_basic_term(t)) return {{cx.intern(t)}};
      return prod_nf(cx, build_nf(cx, t->left), build_nf(cx, t->right));
    }
    case TermKind::Inv: {
      if (is_basic_term(t)) return {{cx.intern(t)}};
      return inv_nf(cx, build_nf(cx, t->left));
    }
    default:
      throw std::logic_error("to_meet_of_joins: residual in input");
  }
}

GoalSet finish(const NfCtx& cx, const Nf& nf) {
  GoalSet gs;
  for (const Goal& goal : nf) {
    std::map<std::string, TermPtr> ordered;
    for (int id : goal) ordered.emplace(print_term(cx.terms[id]), cx.terms[id]);
    JoinGoal jg;
    for (auto& [key, term] : ordered) jg.emplace_back(term);
    gs.goals.push_back(std::move(jg));
  }
  return gs;
}

} // namespace

GoalSet to_meet_of_joins(const TermPtr& t, bool simplify) {
  NfCtx cx{simplify, 0, {}, {}};
  return finish(cx, build_nf(cx, t));
}

BasicTerm simplify_basic(const BasicTerm& t) {
  return BasicTerm(simplify_rec(t.term()));
}

GoalSet normalize_equation(const Equation& eq, bool simplify) {
  return to_meet_of_joins(eliminate_residuals(to_unit_inequation(eq)), simplify);
}

} // namespace warpcheck
