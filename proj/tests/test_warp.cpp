#include "doctest.h"

#include "warpcheck/omega.hpp"
#include "warpcheck/sample.hpp"
#include "warpcheck/term.hpp"
#include "warpcheck/testkit.hpp"
#include "warpcheck/warp.hpp"

#include <map>
#include <string>
#include <vector>

using namespace warpcheck;

namespace {

OmegaPlus fin(int64_t n) { return OmegaPlus::fin(n); }

RegularWarp mk(std::vector<int64_t> prefix, WarpTail tail) {
  std::vector<OmegaPlus> p;
  for (int64_t v : prefix) p.push_back(fin(v));
  return RegularWarp::make(std::move(p), tail);
}

/* Probe points that pin down any warp the generator can produce: both
   tails are affine past every prefix and crossing point, all of which
   sit far below 64 here. */
std::vector<OmegaPlus> probes() {
  std::vector<OmegaPlus> pts;
  for (int64_t i = 0; i <= 64; ++i) pts.push_back(fin(i));
  pts.push_back(omega);
  return pts;
}

} // namespace

TEST_CASE("canonical form has a minimal prefix") {
  CHECK(mk({1, 2}, WarpTail::linear(0)) == RegularWarp::identity());
  CHECK(mk({5}, WarpTail::constant(fin(5))) == mk({}, WarpTail::constant(fin(5))));
  CHECK(mk({0, 0, 2, 3}, WarpTail::constant(fin(3))).prefix_len() == 3);
  CHECK(mk({0, 0, 2, 3}, WarpTail::constant(fin(3))) ==
        mk({0, 0, 2}, WarpTail::constant(fin(3))));
  CHECK(RegularWarp::make({omega}, WarpTail::constant(omega)) == RegularWarp::top());
  // the canonical prefix may stop shrinking where a linear tail would go negative
  RegularWarp sp = mk({0}, WarpTail::linear(-2));
  CHECK(sp.prefix_len() == 1);
}

TEST_CASE("invalid descriptions are rejected") {
  CHECK_THROWS_AS(mk({2, 1}, WarpTail::constant(fin(5))), std::invalid_argument);
  CHECK_THROWS_AS(mk({3}, WarpTail::constant(fin(2))), std::invalid_argument);
  CHECK_THROWS_AS(mk({}, WarpTail::linear(-2)), std::invalid_argument);
  CHECK_THROWS_AS(mk({4}, WarpTail::linear(-3)), std::invalid_argument);
  CHECK_THROWS_AS(RegularWarp::make({omega, fin(3)}, WarpTail::constant(omega)),
                  std::invalid_argument);
}

TEST_CASE("evaluation") {
  RegularWarp f = mk({1, 1, 3}, WarpTail::linear(1));
  CHECK(f.eval(fin(0)) == fin(0));
  CHECK(f.eval(fin(1)) == fin(1));
  CHECK(f.eval(fin(2)) == fin(1));
  CHECK(f.eval(fin(3)) == fin(3));
  CHECK(f.eval(fin(4)) == fin(5));
  CHECK(f.eval(omega) == omega);

  RegularWarp g = mk({0, 2}, WarpTail::constant(fin(7)));
  CHECK(g.eval(fin(1)) == fin(0));
  CHECK(g.eval(fin(3)) == fin(7));
  CHECK(g.eval(omega) == fin(7));

  CHECK(RegularWarp::bottom().eval(omega) == fin(0));
  CHECK(RegularWarp::top().eval(fin(1)) == omega);
  CHECK(RegularWarp::top().eval(fin(0)) == fin(0));
  CHECK(RegularWarp::successor().eval(fin(1)) == fin(2));
  CHECK(RegularWarp::predecessor().eval(fin(1)) == fin(0));
  CHECK(RegularWarp::predecessor().eval(omega) == omega);
}

TEST_CASE("composition, meet and join act pointwise") {
  for (uint64_t seed = 0; seed < 150; ++seed) {
    WarpGen gen(seed);
    RegularWarp f = gen.next(), g = gen.next();
    RegularWarp fg = compose(f, g);
    RegularWarp mt = warp_meet(f, g);
    RegularWarp jn = warp_join(f, g);
    for (OmegaPlus n : probes()) {
      REQUIRE(fg.eval(n) == f.eval(g.eval(n)));
      REQUIRE(mt.eval(n) == std::min(f.eval(n), g.eval(n)));
      REQUIRE(jn.eval(n) == std::max(f.eval(n), g.eval(n)));
    }
  }
}

TEST_CASE("ordering is exact") {
  CHECK(warp_leq(RegularWarp::bottom(), RegularWarp::top()));
  CHECK(!warp_leq(RegularWarp::top(), RegularWarp::bottom()));
  CHECK(warp_leq(RegularWarp::predecessor(), RegularWarp::identity()));
  // a linear map eventually passes any finite constant
  CHECK(!warp_leq(RegularWarp::identity(), mk({}, WarpTail::constant(fin(1000)))));
  for (uint64_t seed = 0; seed < 200; ++seed) {
    WarpGen gen(seed + 1000);
    RegularWarp f = gen.next(), g = gen.next();
    bool expect = true;
    for (OmegaPlus n : probes())
      if (f.eval(n) > g.eval(n)) { expect = false; break; }
    REQUIRE(warp_leq(f, g) == expect);
  }
}

TEST_CASE("special inverses") {
  CHECK(involution(RegularWarp::identity()) == RegularWarp::predecessor());
  CHECK(involution(RegularWarp::bottom()) == RegularWarp::top());
  CHECK(involution(RegularWarp::top()) == RegularWarp::bottom());
  RegularWarp sp = involution(RegularWarp::successor());
  CHECK(sp == mk({0}, WarpTail::linear(-2)));
  CHECK(sp.eval(fin(2)) == fin(0));
  CHECK(sp.eval(fin(3)) == fin(1));
  CHECK(sp.eval(omega) == omega);
  // predecessor then successor only collapses the bottom step
  CHECK(compose(RegularWarp::predecessor(), RegularWarp::successor()) ==
        RegularWarp::identity());
  CHECK(compose(RegularWarp::successor(), RegularWarp::predecessor()) ==
        mk({0}, WarpTail::linear(0)));
}

TEST_CASE("inverse is characterised by its graph condition") {
  // g = f' holds iff for finite m and n >= 1: g(n) >= m  <=>  f(m) < n.
  for (uint64_t seed = 0; seed < 200; ++seed) {
    WarpGen gen(seed * 3 + 1);
    RegularWarp f = gen.next();
    RegularWarp g = involution(f);
    for (int64_t m = 0; m <= 16; ++m)
      for (OmegaPlus n : probes()) {
        if (n == fin(0)) continue;
        REQUIRE((g.eval(n) >= fin(m)) == (f.eval(fin(m)) < n));
      }
  }
}

TEST_CASE("inverse case split at omega") {
  // f'(n) = w iff f(w) < n; f'(w) = w iff f(w) < w or f never settles.
  for (uint64_t seed = 0; seed < 200; ++seed) {
    WarpGen gen(seed * 5 + 2);
    RegularWarp f = gen.next();
    RegularWarp g = involution(f);
    for (OmegaPlus n : probes()) {
      if (n == fin(0) || n.is_omega()) continue;
      REQUIRE((g.eval(n).is_omega()) == (f.eval(omega) < n));
    }
    bool expect = f.eval(omega).is_omega() ? warp_last(f).is_omega() : true;
    REQUIRE(g.eval(omega).is_omega() == expect);
    // and when finite, f steps to w right after it
    if (g.eval(omega).is_fin()) {
      OmegaPlus m = g.eval(omega);
      REQUIRE(f.eval(m) < omega);
      REQUIRE(f.eval(fin(m.value() + 1)) == omega);
    }
  }
}

TEST_CASE("double inverse and de Morgan") {
  for (uint64_t seed = 0; seed < 200; ++seed) {
    WarpGen gen(seed * 7 + 3);
    RegularWarp f = gen.next(), g = gen.next();
    REQUIRE(involution(involution(f)) == f);
    REQUIRE(involution(warp_join(f, g)) == warp_meet(involution(f), involution(g)));
    REQUIRE(involution(warp_meet(f, g)) == warp_join(involution(f), involution(g)));
  }
}

TEST_CASE("settling point") {
  CHECK(warp_last(RegularWarp::identity()) == omega);
  CHECK(warp_last(RegularWarp::bottom()) == fin(0));
  CHECK(warp_last(RegularWarp::top()) == fin(1));
  CHECK(warp_last(mk({0, 3}, WarpTail::constant(fin(3)))) == fin(2));
  CHECK(warp_last(mk({2}, WarpTail::constant(fin(2)))) == fin(1));
}

TEST_CASE("settling point interacts with product and inverse") {
  for (uint64_t seed = 0; seed < 200; ++seed) {
    WarpGen gen(seed * 11 + 4);
    RegularWarp f = gen.next(), g = gen.next();
    bool both = warp_last(f).is_omega() && warp_last(g).is_omega();
    REQUIRE(warp_last(compose(f, g)).is_omega() == both);
    REQUIRE(warp_last(involution(f)).is_omega() == warp_last(f).is_omega());
  }
}

TEST_CASE("residuals satisfy the adjunctions") {
  WarpAssignment consts;
  TermPtr under = parse_term("x \\ z");
  TermPtr over = parse_term("z / y");
  for (uint64_t seed = 0; seed < 150; ++seed) {
    WarpGen gen(seed * 13 + 5);
    RegularWarp f = gen.next(), g = gen.next(), h = gen.next();
    WarpAssignment va = {{"x", f}, {"y", g}, {"z", h}};
    bool lhs = warp_leq(compose(f, g), h);
    REQUIRE(lhs == warp_leq(g, term_warp(under, va, consts)));
    REQUIRE(lhs == warp_leq(f, term_warp(over, va, consts)));
  }
}

TEST_CASE("term evaluation") {
  WarpAssignment consts = {{"bot", RegularWarp::bottom()},
                           {"top", RegularWarp::top()}};
  WarpAssignment va = {{"x", RegularWarp::successor()}};
  CHECK(term_warp(parse_term("1"), va, consts) == RegularWarp::identity());
  CHECK(term_warp(parse_term("x * x'"), va, consts) ==
        compose(RegularWarp::successor(), involution(RegularWarp::successor())));
  CHECK(term_warp(parse_term("bot \\/ x"), va, consts) == RegularWarp::successor());
  CHECK(term_warp(parse_term("top /\\ x"), va, consts) == RegularWarp::successor());
  CHECK(eval_term(parse_term("x * x"), va, consts, fin(1)) == fin(3));
  CHECK_THROWS_AS(term_warp(parse_term("y"), va, consts), std::invalid_argument);
  CHECK_THROWS_AS(term_warp(parse_term("pre"), va, consts), std::invalid_argument);
}

TEST_CASE("printing and parsing round trip") {
  CHECK(print_warp(RegularWarp::identity()) == "prefix=[] tail=linear(0)");
  CHECK(print_warp(mk({0, 2}, WarpTail::constant(omega))) ==
        "prefix=[0,2] tail=const(w)");
  CHECK(parse_warp("prefix=[1,2,w] tail=const(w)") ==
        RegularWarp::make({fin(1), fin(2), omega}, WarpTail::constant(omega)));
  CHECK(parse_warp("prefix=[] tail=linear(-1)") == RegularWarp::predecessor());
  CHECK_THROWS_AS(parse_warp("gibberish"), std::invalid_argument);
  CHECK_THROWS_AS(parse_warp("prefix=[1] tail=cubic(2)"), std::invalid_argument);
  for (uint64_t seed = 0; seed < 100; ++seed) {
    WarpGen gen(seed * 17 + 6);
    RegularWarp f = gen.next();
    REQUIRE(parse_warp(print_warp(f)) == f);
  }
}

namespace {

struct Fixture {
  SampleTable table;
  std::vector<SampleId> delta;
  std::map<std::string, SampleId> by_name;

  explicit Fixture(const std::string& term) {
    SampleId kappa = table.time_var("k");
    SampleId seed = table.app(table.intern_term(parse_term(term)), kappa);
    delta = saturate(table, {seed});
    for (SampleId s : delta) by_name[table.print(s)] = s;
  }

  std::map<SampleId, OmegaPlus> diagram(
      const std::map<std::string, OmegaPlus>& values) const {
    std::map<SampleId, OmegaPlus> d;
    for (const auto& [name, v] : values) d[by_name.at(name)] = v;
    return d;
  }
};

} // namespace

TEST_CASE("reconstruction: everything collapses to bottom") {
  Fixture fx("x");
  auto d = fx.diagram({{"k", fin(2)},
                       {"x[k]", fin(0)},
                       {"last(x)", fin(1)},
                       {"x[last(x)]", fin(0)}});
  CHECK(reconstruct(fx.table, fx.delta, d, "x") == RegularWarp::bottom());
  // a variable without samples defaults to the identity
  CHECK(reconstruct(fx.table, fx.delta, d, "y") == RegularWarp::identity());
}

TEST_CASE("reconstruction: diverging samples give the identity") {
  Fixture fx("x * x'");
  std::map<std::string, OmegaPlus> vals;
  for (const auto& [name, id] : fx.by_name) vals[name] = omega;
  vals["x'[k]"] = fin(0);
  vals["x[x'[k]]"] = fin(0);
  vals["(x*x')[k]"] = fin(0);
  vals["x[suc(x'[k])]"] = fin(1);
  vals["suc(x'[k])"] = fin(1);
  vals["k"] = fin(1);
  REQUIRE(vals.size() == 19);
  CHECK(reconstruct(fx.table, fx.delta, fx.diagram(vals), "x") ==
        RegularWarp::identity());
}

TEST_CASE("reconstruction: interpolated staircase") {
  Fixture fx("x * x'");
  std::map<std::string, OmegaPlus> vals = {
      {"(x*x')[k]", fin(0)},
      {"x[x'[k]]", fin(0)},
      {"(x*x')[last(x*x')]", fin(0)},
      {"x[x'[last(x*x')]]", fin(0)},
      {"x'[last(x*x')]", fin(0)},
      {"x[x'[last(x')]]", fin(0)},
      {"x[suc(x'[last(x*x')])]", fin(0)},
      {"last(x*x')", fin(0)},
      {"suc(x'[last(x*x')])", fin(1)},
      {"last(x')", fin(1)},
      {"x[suc(x'[k])]", fin(2)},
      {"x'[k]", fin(2)},
      {"x[suc(x'[last(x')])]", fin(2)},
      {"x'[last(x')]", fin(2)},
      {"k", fin(2)},
      {"suc(x'[last(x')])", fin(3)},
      {"suc(x'[k])", fin(3)},
      {"x[last(x)]", fin(3)},
      {"last(x)", fin(4)},
  };
  REQUIRE(vals.size() == 19);
  RegularWarp got = reconstruct(fx.table, fx.delta, fx.diagram(vals), "x");
  CHECK(got == mk({0, 0, 2, 3}, WarpTail::constant(fin(3))));
  // spot-check the interpolation between the recovered graph points
  CHECK(got.eval(fin(1)) == fin(0));
  CHECK(got.eval(fin(3)) == fin(2));
  CHECK(got.eval(omega) == fin(3));
}

TEST_CASE("reconstruction rejects broken diagrams") {
  Fixture fx("x");
  // outputs decrease while inputs increase
  auto bad = fx.diagram({{"k", fin(1)},
                         {"x[k]", fin(5)},
                         {"last(x)", fin(2)},
                         {"x[last(x)]", fin(3)}});
  CHECK_THROWS_AS(reconstruct(fx.table, fx.delta, bad, "x"), std::invalid_argument);

  // unsaturated sample set: the settling sample is missing
  SampleTable t;
  SampleId k = t.time_var("k");
  SampleId xk = t.app(t.intern_term(parse_term("x")), k);
  std::map<SampleId, OmegaPlus> d = {{k, fin(1)}, {xk, fin(0)}};
  CHECK_THROWS_AS(reconstruct(t, {k, xk}, d, "x"), std::logic_error);
}

TEST_CASE("reconstruction round trips through a real valuation") {
  // Evaluate the closure of x*x' under a concrete warp, then rebuild the
  // warp from the diagram: the rebuilt map must agree with the original
  // on every graph point the diagram pinned down.
  Fixture fx("x * x'");
  for (uint64_t seed = 0; seed < 60; ++seed) {
    WarpGen gen(seed * 19 + 8);
    RegularWarp f = gen.next();
    WarpAssignment va = {{"x", f}};
    WarpAssignment consts;
    for (OmegaPlus kv : {fin(0), fin(1), fin(3), fin(7), omega}) {
      std::map<SampleId, OmegaPlus> d;
      // evaluate each sample bottom-up; ids are topologically ordered
      for (SampleId s : fx.delta) {
        const SampleNode& n = fx.table.node(s);
        switch (n.kind) {
          case SampleKind::TimeVar:
            d[s] = kv;
            break;
          case SampleKind::Suc:
            d[s] = d.at(n.child).succ();
            break;
          case SampleKind::Last:
            d[s] = warp_last(term_warp(fx.table.term(n.term), va, consts));
            break;
          case SampleKind::App:
            d[s] = term_warp(fx.table.term(n.term), va, consts).eval(d.at(n.child));
            break;
        }
      }
      RegularWarp rebuilt = reconstruct(fx.table, fx.delta, d, "x");
      // the settling sample pins the sup: f(last f) = f(w)
      REQUIRE(rebuilt.eval(omega) == f.eval(omega));
      // rebuilt agrees with f wherever the diagram pinned it down
      for (SampleId s : fx.delta) {
        const SampleNode& n = fx.table.node(s);
        if (n.kind != SampleKind::App) continue;
        const TermPtr& t = fx.table.term(n.term);
        if (t->kind != TermKind::Var) continue;
        REQUIRE(rebuilt.eval(d.at(n.child)) == d.at(s));
      }
    }
  }
}

TEST_CASE("counterexample checking") {
  WarpAssignment consts = {{"bot", RegularWarp::bottom()}};
  std::vector<BasicTerm> joinands = {BasicTerm(parse_term("x"))};
  WarpAssignment va = {{"x", RegularWarp::bottom()}};
  CHECK(verify_counterexample(joinands, va, consts, fin(1)));
  CHECK(verify_counterexample(joinands, va, consts, omega));
  CHECK(!verify_counterexample(joinands, va, consts, fin(0))); // 0 >= 0

  va["x"] = RegularWarp::identity();
  CHECK(!verify_counterexample(joinands, va, consts, fin(5)));

  // one joinand reaching k spoils the witness
  std::vector<BasicTerm> two = {BasicTerm(parse_term("bot")),
                                BasicTerm(parse_term("x"))};
  CHECK(!verify_counterexample(two, va, consts, fin(5)));
  va["x"] = RegularWarp::bottom();
  CHECK(verify_counterexample(two, va, consts, fin(5)));
}
