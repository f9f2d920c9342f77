#include "warpcheck/fo.hpp"

#include <algorithm>
#include <sstream>

namespace warpcheck {

namespace {

FOPtr atom(FOFormula::Kind k, FOTerm a, FOTerm b) {
  auto f = std::make_shared<FOFormula>();
  f->kind = k;
  f->a = a;
  f->b = b;
  return f;
}

FOPtr conn(FOFormula::Kind k, std::vector<FOPtr> kids) {
  auto f = std::make_shared<FOFormula>();
  f->kind = k;
  f->kids = std::move(kids);
  return f;
}

} // namespace

FOPtr fo_leq(FOTerm a, FOTerm b) { return atom(FOFormula::Kind::Leq, a, b); }
FOPtr fo_eq(FOTerm a, FOTerm b) { return atom(FOFormula::Kind::Eq, a, b); }
FOPtr fo_eqsuc(FOTerm a, FOTerm b) { return atom(FOFormula::Kind::EqSuc, a, b); }
FOPtr fo_not(FOPtr f) { return conn(FOFormula::Kind::Not, {std::move(f)}); }
FOPtr fo_and(std::vector<FOPtr> fs) { return conn(FOFormula::Kind::And, std::move(fs)); }
FOPtr fo_or(std::vector<FOPtr> fs) { return conn(FOFormula::Kind::Or, std::move(fs)); }
FOPtr fo_implies(FOPtr a, FOPtr b) {
  return conn(FOFormula::Kind::Implies, {std::move(a), std::move(b)});
}
FOPtr fo_iff(FOPtr a, FOPtr b) {
  return conn(FOFormula::Kind::Iff, {std::move(a), std::move(b)});
}
FOPtr fo_lt(FOTerm a, FOTerm b) {
  return fo_and({fo_leq(a, b), fo_not(fo_leq(b, a))});
}

bool fo_eval(const FOPtr& f, const FOValuation& val) {
  switch (f->kind) {
    case FOFormula::Kind::Leq:
      return val(f->a) <= val(f->b);
    case FOFormula::Kind::Eq:
      return val(f->a) == val(f->b);
    case FOFormula::Kind::EqSuc:
      return val(f->a) == val(f->b).succ();
    case FOFormula::Kind::Not:
      return !fo_eval(f->kids[0], val);
    case FOFormula::Kind::And:
      return std::all_of(f->kids.begin(), f->kids.end(),
                         [&](const FOPtr& k) { return fo_eval(k, val); });
    case FOFormula::Kind::Or:
      return std::any_of(f->kids.begin(), f->kids.end(),
                         [&](const FOPtr& k) { return fo_eval(k, val); });
    case FOFormula::Kind::Implies:
      return !fo_eval(f->kids[0], val) || fo_eval(f->kids[1], val);
    case FOFormula::Kind::Iff:
      return fo_eval(f->kids[0], val) == fo_eval(f->kids[1], val);
  }
  return false;
}

namespace {

std::string term_str(const FOTerm& t, const SampleTable& table) {
  switch (t.kind) {
    case FOTerm::Kind::Sample: return table.print(t.id);
    case FOTerm::Kind::Aux: return "aux" + std::to_string(t.id);
    case FOTerm::Kind::Zero: return "0";
    case FOTerm::Kind::Omega: return "w";
  }
  return "?";
}

bool same_term(const FOTerm& a, const FOTerm& b) {
  return a.kind == b.kind && a.id == b.id;
}

/* Recognise the strict-order sugar And(Leq(a,b), Not(Leq(b,a))). */
bool is_lt(const FOPtr& f, FOTerm* a, FOTerm* b) {
  if (f->kind != FOFormula::Kind::And || f->kids.size() != 2) return false;
  const FOPtr& l = f->kids[0];
  const FOPtr& n = f->kids[1];
  if (l->kind != FOFormula::Kind::Leq || n->kind != FOFormula::Kind::Not) return false;
  const FOPtr& r = n->kids[0];
  if (r->kind != FOFormula::Kind::Leq) return false;
  if (!same_term(l->a, r->b) || !same_term(l->b, r->a)) return false;
  *a = l->a;
  *b = l->b;
  return true;
}

void print_rec(std::ostringstream& os, const FOPtr& f, const SampleTable& table, int parent_prec);

/* Precedence: atoms bind tightest, then ~, /\, \/, ->, <->. */
void print_nary(std::ostringstream& os, const FOPtr& f, const SampleTable& table,
                const char* op, int prec, int parent_prec) {
  if (prec < parent_prec) os << '(';
  bool first = true;
  for (const auto& k : f->kids) {
    if (!first) os << ' ' << op << ' ';
    first = false;
    print_rec(os, k, table, prec + 1);
  }
  if (prec < parent_prec) os << ')';
}

void print_rec(std::ostringstream& os, const FOPtr& f, const SampleTable& table, int parent_prec) {
  FOTerm a, b;
  if (is_lt(f, &a, &b)) {
    os << term_str(a, table) << " < " << term_str(b, table);
    if (parent_prec > 4) { /* atoms never need parens; keep lint quiet */ }
    return;
  }
  switch (f->kind) {
    case FOFormula::Kind::Leq:
      os << term_str(f->a, table) << " <= " << term_str(f->b, table);
      break;
    case FOFormula::Kind::Eq:
      os << term_str(f->a, table) << " = " << term_str(f->b, table);
      break;
    case FOFormula::Kind::EqSuc:
      os << term_str(f->a, table) << " = S(" << term_str(f->b, table) << ")";
      break;
    case FOFormula::Kind::Not:
      os << "~";
      print_rec(os, f->kids[0], table, 4);
      break;
    case FOFormula::Kind::And:
      print_nary(os, f, table, "/\\", 3, parent_prec);
      break;
    case FOFormula::Kind::Or:
      print_nary(os, f, table, "\\/", 2, parent_prec);
      break;
    case FOFormula::Kind::Implies:
      if (parent_prec > 1) os << '(';
      print_rec(os, f->kids[0], table, 2);
      os << " -> ";
      print_rec(os, f->kids[1], table, 1);
      if (parent_prec > 1) os << ')';
      break;
    case FOFormula::Kind::Iff:
      if (parent_prec > 0) os << '(';
      print_rec(os, f->kids[0], table, 1);
      os << " <-> ";
      print_rec(os, f->kids[1], table, 1);
      if (parent_prec > 0) os << ')';
      break;
  }
}

} // namespace

std::string fo_print(const FOPtr& f, const SampleTable& table) {
  std::ostringstream os;
  print_rec(os, f, table, 0);
  return os.str();
}

void fo_collect_vars(const FOPtr& f, std::vector<SampleId>& samples, std::vector<int>& auxs) {
  auto add_term = [&](const FOTerm& t) {
    if (t.kind == FOTerm::Kind::Sample &&
        std::find(samples.begin(), samples.end(), t.id) == samples.end())
      samples.push_back(t.id);
    if (t.kind == FOTerm::Kind::Aux &&
        std::find(auxs.begin(), auxs.end(), t.id) == auxs.end())
      auxs.push_back(t.id);
  };
  switch (f->kind) {
    case FOFormula::Kind::Leq:
    case FOFormula::Kind::Eq:
    case FOFormula::Kind::EqSuc:
      add_term(f->a);
      add_term(f->b);
      return;
    default:
      for (const auto& k : f->kids) fo_collect_vars(k, samples, auxs);
  }
}

} // namespace warpcheck
