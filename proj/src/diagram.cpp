#include "warpcheck/diagram.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace warpcheck {

std::vector<FOPtr> ConstraintSet::all() const {
  std::vector<FOPtr> out = background();
  out.insert(out.end(), fail.begin(), fail.end());
  return out;
}

std::vector<FOPtr> ConstraintSet::background() const {
  std::vector<FOPtr> out;
  for (const auto* group : {&structural, &monoid, &inverse, &constant}) {
    out.insert(out.end(), group->begin(), group->end());
  }
  return out;
}

namespace {

SampleId require(const std::optional<SampleId>& s, const char* what) {
  if (!s) throw std::logic_error(std::string("generate: sample set not saturated: missing ") + what);
  return *s;
}

} // namespace

ConstraintSet generate(const SampleTable& table, const std::vector<SampleId>& delta,
                       const std::vector<BasicTerm>& joinands, SampleId kappa,
                       const ConstantRegistry& registry) {
  ConstraintSet cs;
  cs.kappa = kappa;
  std::set<SampleId> in_delta(delta.begin(), delta.end());
  auto sv = [](SampleId s) { return FOTerm::sample(s); };
  auto count = [&cs](int schema) { ++cs.schema_count[schema]; };
  auto fresh_aux = [&cs]() { return FOTerm::aux(cs.aux_count++); };

  // Samples grouped by their term, for the order schema.
  std::map<TermId, std::vector<SampleId>> apps_by_term;
  for (SampleId s : delta)
    if (table.node(s).kind == SampleKind::App)
      apps_by_term[table.node(s).term].push_back(s);

  // (1) order preservation: a <= b -> t[a] <= t[b], ordered pairs, a != b.
  for (const auto& [term, apps] : apps_by_term) {
    for (SampleId s1 : apps)
      for (SampleId s2 : apps) {
        if (s1 == s2) continue;
        cs.structural.push_back(
            fo_implies(fo_leq(sv(table.node(s1).child), sv(table.node(s2).child)),
                       fo_leq(sv(s1), sv(s2))));
        count(1);
      }
  }

  for (SampleId s : delta) {
    const SampleNode& n = table.node(s);
    if (n.kind == SampleKind::App) {
      // (2) strictness: a = 0 -> t[a] = 0.
      cs.structural.push_back(fo_implies(fo_eq(sv(n.child), FOTerm::zero()),
                                         fo_eq(sv(s), FOTerm::zero())));
      count(2);
      // (4) stabilisation: last(t) <= a <-> t[last(t)] = t[a].
      SampleId last_t = require(table.find_last(n.term), "last(t)");
      SampleId app_last = require(table.find_app(n.term, last_t), "t[last(t)]");
      if (!in_delta.count(last_t) || !in_delta.count(app_last))
        throw std::logic_error("generate: sample set not saturated: last samples outside delta");
      cs.structural.push_back(
          fo_iff(fo_leq(sv(last_t), sv(n.child)), fo_eq(sv(app_last), sv(s))));
      count(4);
      // (5) sup at w: last(t) = w -> t[last(t)] = w, for the t[last(t)] sample.
      const SampleNode& arg = table.node(n.child);
      if (arg.kind == SampleKind::Last && arg.term == n.term) {
        cs.structural.push_back(fo_implies(fo_eq(sv(last_t), FOTerm::omega_c()),
                                           fo_eq(sv(s), FOTerm::omega_c())));
        count(5);
      }

      const TermPtr& t = table.term(n.term);
      if (t->kind == TermKind::Unit) {
        // (6) 1[a] = a.
        cs.monoid.push_back(fo_eq(sv(s), sv(n.child)));
        count(6);
      } else if (t->kind == TermKind::Prod) {
        // (8) (tu)[a] = t[u[a]].
        TermId lt = table.term_sub1(n.term);
        TermId rt = table.term_sub2(n.term);
        SampleId inner = require(table.find_app(rt, n.child), "u[a]");
        SampleId outer = require(table.find_app(lt, inner), "t[u[a]]");
        if (!in_delta.count(inner) || !in_delta.count(outer))
          throw std::logic_error("generate: sample set not saturated: product samples outside delta");
        cs.monoid.push_back(fo_eq(sv(s), sv(outer)));
        count(8);
      } else if (t->kind == TermKind::Inv) {
        TermId sub = table.term_sub1(n.term);
        // (10) 0 < a < w -> t[t'[a]] < a.
        SampleId wrapped = require(table.find_app(sub, s), "t[t'[a]]");
        if (!in_delta.count(wrapped))
          throw std::logic_error("generate: sample set not saturated: involution samples outside delta");
        cs.inverse.push_back(
            fo_implies(fo_and({fo_lt(FOTerm::zero(), sv(n.child)),
                               fo_lt(sv(n.child), FOTerm::omega_c())}),
                       fo_lt(sv(wrapped), sv(n.child))));
        count(10);
        // (11) t'[a] < w -> a <= t[suc(t'[a])].
        SampleId suc_s = require(table.find_suc(s), "suc(t'[a])");
        SampleId bound = require(table.find_app(sub, suc_s), "t[suc(t'[a])]");
        if (!in_delta.count(suc_s) || !in_delta.count(bound))
          throw std::logic_error("generate: sample set not saturated: involution samples outside delta");
        cs.inverse.push_back(fo_implies(fo_lt(sv(s), FOTerm::omega_c()),
                                        fo_leq(sv(n.child), sv(bound))));
        count(11);
      } else if (t->kind == TermKind::Const) {
        // graph axiom of a registered constant at (a, f[a]).
        cs.constant.push_back(registry.get(t->name).graph(sv(n.child), sv(s), fresh_aux));
        count(14);
      }
    } else if (n.kind == SampleKind::Suc) {
      // (3) suc(a) = S(a).
      cs.structural.push_back(fo_eqsuc(sv(s), sv(n.child)));
      count(3);
    } else if (n.kind == SampleKind::Last) {
      const TermPtr& t = table.term(n.term);
      if (t->kind == TermKind::Unit) {
        // (7) last(1) = w.
        cs.monoid.push_back(fo_eq(sv(s), FOTerm::omega_c()));
        count(7);
      } else if (t->kind == TermKind::Prod) {
        // (9) last(tu) = w -> last(t) = w and last(u) = w, when all present.
        auto lt = table.find_last(table.term_sub1(n.term));
        auto ru = table.find_last(table.term_sub2(n.term));
        if (lt && ru && in_delta.count(*lt) && in_delta.count(*ru)) {
          cs.monoid.push_back(
              fo_implies(fo_eq(sv(s), FOTerm::omega_c()),
                         fo_and({fo_eq(sv(*lt), FOTerm::omega_c()),
                                 fo_eq(sv(*ru), FOTerm::omega_c())})));
          count(9);
        }
      } else if (t->kind == TermKind::Inv) {
        // (12) last(t') = w -> last(t) = w, when both present.
        auto lt = table.find_last(table.term_sub1(n.term));
        if (lt && in_delta.count(*lt)) {
          cs.inverse.push_back(fo_implies(fo_eq(sv(s), FOTerm::omega_c()),
                                          fo_eq(sv(*lt), FOTerm::omega_c())));
          count(12);
        }
      } else if (t->kind == TermKind::Const) {
        // stabilisation axiom of a registered constant at last(f).
        cs.constant.push_back(registry.get(t->name).last_at(sv(s), fresh_aux));
        count(15);
      }
    }
  }

  // Failure requirement: every joinand observed strictly below kappa.
  for (const auto& j : joinands) {
    std::string key = print_term(j.term());
    auto tid = [&]() -> std::optional<TermId> {
      // find without interning: scan existing app children of kappa
      for (SampleId s : delta) {
        const SampleNode& n = table.node(s);
        if (n.kind == SampleKind::App && n.child == kappa &&
            print_term(table.term(n.term)) == key)
          return n.term;
      }
      return std::nullopt;
    }();
    SampleId goal = require(tid ? table.find_app(*tid, kappa) : std::nullopt, "t[kappa]");
    cs.fail.push_back(fo_lt(sv(goal), sv(kappa)));
    count(13);
  }
  return cs;
}

bool satisfies(const std::map<SampleId, OmegaPlus>& delta_val,
               const std::map<int, OmegaPlus>& aux_val, const ConstraintSet& cs) {
  FOValuation val = [&](const FOTerm& t) -> OmegaPlus {
    switch (t.kind) {
      case FOTerm::Kind::Zero: return OmegaPlus::fin(0);
      case FOTerm::Kind::Omega: return omega;
      case FOTerm::Kind::Sample: {
        auto it = delta_val.find(t.id);
        if (it == delta_val.end())
          throw std::invalid_argument("satisfies: unassigned sample variable");
        return it->second;
      }
      case FOTerm::Kind::Aux: {
        auto it = aux_val.find(t.id);
        if (it == aux_val.end())
          throw std::invalid_argument("satisfies: unassigned auxiliary variable");
        return it->second;
      }
    }
    throw std::invalid_argument("satisfies: bad term");
  };
  for (const FOPtr& f : cs.all())
    if (!fo_eval(f, val)) return false;
  return true;
}

std::string print_saturation_tree(SampleTable& table, const std::vector<SampleId>& seeds) {
  std::ostringstream os;
  std::set<SampleId> printed;
  std::function<void(SampleId, int)> rec = [&](SampleId s, int depth) {
    os << std::string(static_cast<size_t>(depth) * 2, ' ') << table.print(s) << "\n";
    if (!printed.insert(s).second) return;
    for (SampleId next : successors(table, s))
      if (!printed.count(next)) rec(next, depth + 1);
  };
  for (SampleId s : seeds) rec(s, 0);
  return os.str();
}

std::string print_constraints(const ConstraintSet& cs, const SampleTable& table) {
  std::ostringstream os;
  auto dump = [&](const char* title, const std::vector<FOPtr>& group) {
    if (group.empty()) return;
    os << title << ":\n";
    for (const FOPtr& f : group) os << "  " << fo_print(f, table) << "\n";
  };
  dump("structural", cs.structural);
  dump("monoid", cs.monoid);
  dump("inverse", cs.inverse);
  dump("constant", cs.constant);
  dump("failure", cs.fail);
  return os.str();
}

} // namespace warpcheck
