#include "doctest.h"

#include "warpcheck/sample.hpp"
#include "warpcheck/term.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

using namespace warpcheck;

namespace {

std::vector<std::string> printed(const SampleTable& table,
                                 const std::vector<SampleId>& ids) {
  std::vector<std::string> out;
  for (SampleId s : ids) out.push_back(table.print(s));
  return out;
}

std::vector<SampleId> closure_of(SampleTable& table, const std::string& term) {
  SampleId kappa = table.time_var("k");
  SampleId seed = table.app(table.intern_term(parse_term(term)), kappa);
  return saturate(table, {seed});
}

} // namespace

TEST_CASE("samples are hash-consed") {
  SampleTable t;
  SampleId k1 = t.time_var("k");
  SampleId k2 = t.time_var("k");
  CHECK(k1 == k2);
  CHECK(t.time_var("m") != k1);

  TermId x = t.intern_term(parse_term("x"));
  CHECK(t.intern_term(parse_term("x")) == x);
  SampleId a1 = t.app(x, k1);
  CHECK(t.app(x, k1) == a1);
  CHECK(t.suc(a1) == t.suc(a1));
  CHECK(t.last(x) == t.last(x));

  // lookups see exactly what was interned
  CHECK(t.find_app(x, k1) == a1);
  CHECK(t.find_suc(a1).has_value());
  CHECK(t.find_last(x).has_value());
  CHECK(!t.find_suc(k1).has_value());

  size_t n = t.size();
  t.app(x, k1);
  CHECK(t.size() == n); // no growth on re-intern
}

TEST_CASE("term interning shares subterms") {
  SampleTable t;
  TermId prod = t.intern_term(parse_term("x * x'"));
  TermId x = t.intern_term(parse_term("x"));
  TermId xp = t.intern_term(parse_term("x'"));
  CHECK(t.term_sub1(prod) == x);
  CHECK(t.term_sub2(prod) == xp);
  CHECK(t.term_sub1(xp) == x);
}

TEST_CASE("non-basic terms cannot be sampled") {
  SampleTable t;
  CHECK_THROWS_AS(t.intern_term(parse_term("x /\\ y")), std::logic_error);
  CHECK_THROWS_AS(t.intern_term(parse_term("x \\ y")), std::logic_error);
}

TEST_CASE("sample printing") {
  SampleTable t;
  SampleId k = t.time_var("k");
  TermId prod = t.intern_term(parse_term("x * y'"));
  CHECK(t.print(t.app(prod, k)) == "(x*y')[k]");
  CHECK(t.print(t.last(prod)) == "last(x*y')");
  CHECK(t.print(t.suc(k)) == "suc(k)");
  TermId v = t.intern_term(parse_term("x"));
  CHECK(t.print(t.app(v, t.suc(t.app(v, k)))) == "x[suc(x[k])]");
}

TEST_CASE("successor rules fire per head symbol, in rule order") {
  SampleTable t;
  SampleId k = t.time_var("k");

  CHECK(successors_with_rules(t, k).empty());
  TermId x = t.intern_term(parse_term("x"));
  CHECK(successors_with_rules(t, t.last(x)).empty());

  auto sr = successors_with_rules(t, t.suc(k));
  REQUIRE(sr.size() == 1);
  CHECK(sr[0].first == SatRule::SucChild);
  CHECK(sr[0].second == k);

  // variable head: only the generic application rules
  sr = successors_with_rules(t, t.app(x, k));
  REQUIRE(sr.size() == 2);
  CHECK(sr[0].first == SatRule::AppChild);
  CHECK(sr[1].first == SatRule::AppLast);
  CHECK(t.print(sr[1].second) == "x[last(x)]");

  // product head splits into nested applications
  TermId prod = t.intern_term(parse_term("x * y"));
  sr = successors_with_rules(t, t.app(prod, k));
  REQUIRE(sr.size() == 3);
  CHECK(sr[2].first == SatRule::ProdSplit);
  CHECK(t.print(sr[2].second) == "x[y[k]]");

  // inverse head wraps itself and its successor in the operand
  TermId inv = t.intern_term(parse_term("y'"));
  SampleId base = t.app(inv, k);
  sr = successors_with_rules(t, base);
  REQUIRE(sr.size() == 4);
  CHECK(sr[2].first == SatRule::InvWrap);
  CHECK(t.print(sr[2].second) == "y[y'[k]]");
  CHECK(sr[3].first == SatRule::InvSuc);
  CHECK(t.print(sr[3].second) == "y[suc(y'[k])]");
}

TEST_CASE("saturation of a single variable") {
  SampleTable t;
  std::vector<SampleId> closure = closure_of(t, "x");
  CHECK(printed(t, closure) ==
        std::vector<std::string>{"k", "x[k]", "last(x)", "x[last(x)]"});
}

TEST_CASE("saturation of x*x' reaches exactly nineteen samples") {
  SampleTable t;
  std::vector<SampleId> closure = closure_of(t, "x * x'");
  // creation order: breadth-first from the seed, rules in declaration order
  CHECK(printed(t, closure) == std::vector<std::string>{
                                   "k",
                                   "(x*x')[k]",
                                   "last(x*x')",
                                   "(x*x')[last(x*x')]",
                                   "x'[k]",
                                   "x[x'[k]]",
                                   "x'[last(x*x')]",
                                   "x[x'[last(x*x')]]",
                                   "last(x)",
                                   "x[last(x)]",
                                   "last(x')",
                                   "x'[last(x')]",
                                   "suc(x'[k])",
                                   "x[suc(x'[k])]",
                                   "suc(x'[last(x*x')])",
                                   "x[suc(x'[last(x*x')])]",
                                   "x[x'[last(x')]]",
                                   "suc(x'[last(x')])",
                                   "x[suc(x'[last(x')])]",
                               });
}

TEST_CASE("saturation is a closure operator") {
  std::vector<std::string> terms = {"x", "x * x'", "x' * y", "(x * y)'", "x''"};
  for (const std::string& s : terms) {
    SampleTable t;
    std::vector<SampleId> once = closure_of(t, s);
    std::vector<SampleId> twice = saturate(t, once);
    CHECK(once == twice); // idempotent, and seeds are contained

    // closed: every successor of a member is a member
    std::set<SampleId> members(once.begin(), once.end());
    for (SampleId id : once)
      for (SampleId next : successors(t, id)) CHECK(members.count(next) == 1);
  }
}

TEST_CASE("shared seeds share their closures") {
  SampleTable t;
  SampleId k = t.time_var("k");
  SampleId s1 = t.app(t.intern_term(parse_term("x * y")), k);
  SampleId s2 = t.app(t.intern_term(parse_term("y")), k);
  std::vector<SampleId> both = saturate(t, {s1, s2});
  // the product split already reaches y[k], so the second seed is free
  SampleTable t1;
  size_t alone = closure_of(t1, "x * y").size();
  CHECK(both.size() == alone);
}

TEST_CASE("symbol count and sample measure") {
  CHECK(term_symbol_count(parse_term("x")) == 1);
  CHECK(term_symbol_count(parse_term("1")) == 1);
  CHECK(term_symbol_count(parse_term("x'")) == 2);
  CHECK(term_symbol_count(parse_term("x * y'")) == 4);
  CHECK(term_symbol_count(parse_term("(x * y)'")) == 4);
  CHECK_THROWS_AS(term_symbol_count(parse_term("x /\\ y")), std::logic_error);

  SampleTable t;
  SampleId k = t.time_var("k");
  TermId prod = t.intern_term(parse_term("x * y'"));
  CHECK(sample_measure(t, k) == 0);
  CHECK(sample_measure(t, t.last(prod)) == 0);
  CHECK(sample_measure(t, t.suc(k)) == 1);
  CHECK(sample_measure(t, t.app(prod, t.suc(k))) == 5);
  CHECK(sample_measure(t, t.app(prod, t.last(prod))) == 4);
}

TEST_CASE("rules shrink the measure or shed an inverse") {
  // The application/suc rules never raise the measure; the inverse rules
  // strictly shrink the head term instead, which is what bounds the
  // closure. Checked over a closure big enough to exercise every rule.
  SampleTable t;
  std::vector<SampleId> closure = closure_of(t, "(x * y')' * z");
  bool saw_inv = false;
  for (SampleId id : closure) {
    for (const auto& [rule, next] : successors_with_rules(t, id)) {
      int before = sample_measure(t, id);
      int after = sample_measure(t, next);
      switch (rule) {
        case SatRule::AppChild:
        case SatRule::ProdSplit:
        case SatRule::SucChild:
          CHECK(after < before);
          break;
        case SatRule::AppLast:
          CHECK(after <= before);
          break;
        case SatRule::InvWrap:
        case SatRule::InvSuc: {
          saw_inv = true;
          const SampleNode& from = t.node(id);
          const SampleNode& to = t.node(next);
          CHECK(term_symbol_count(t.term(to.term)) <
                term_symbol_count(t.term(from.term)));
          break;
        }
      }
    }
  }
  CHECK(saw_inv);
}
