#include "warpcheck/testkit.hpp"

#include "warpcheck/errors.hpp"
#include "warpcheck/normalize.hpp"
#include "warpcheck/sample.hpp"

#include <algorithm>
#include <stdexcept>

namespace warpcheck {

RegularWarp WarpGen::next() {
  int L = std::uniform_int_distribution<int>(0, 6)(rng_);
  std::vector<OmegaPlus> prefix;
  int64_t cur = 0;
  bool hit_omega = false;
  for (int i = 0; i < L; ++i) {
    if (!hit_omega && std::uniform_int_distribution<int>(0, 11)(rng_) == 0)
      hit_omega = true;
    if (hit_omega) {
      prefix.push_back(omega);
      continue;
    }
    cur += std::uniform_int_distribution<int>(0, 2)(rng_);
    if (cur > 8) cur = 8;
    prefix.push_back(OmegaPlus::fin(cur));
  }
  OmegaPlus back = prefix.empty() ? OmegaPlus::fin(0) : prefix.back();

  bool linear = !back.is_omega() && std::uniform_int_distribution<int>(0, 1)(rng_) == 0;
  if (linear) {
    // junction: back <= (L+1) + k, and (L+1) + k >= 0
    int64_t lo = back.value() - (L + 1);
    if (lo < -(L + 1)) lo = -(L + 1);
    int64_t k = lo + std::uniform_int_distribution<int64_t>(0, 6)(rng_);
    if (k > 6) k = 6;
    if (k < lo) k = lo;
    return RegularWarp::make(std::move(prefix), WarpTail::linear(k));
  }
  if (back.is_omega() || std::uniform_int_distribution<int>(0, 5)(rng_) == 0)
    return RegularWarp::make(std::move(prefix), WarpTail::constant(omega));
  int64_t c = back.value() + std::uniform_int_distribution<int64_t>(0, 8)(rng_);
  return RegularWarp::make(std::move(prefix), WarpTail::constant(OmegaPlus::fin(c)));
}

TermGen::TermGen(uint64_t seed, int max_depth, std::vector<std::string> vars,
                 std::vector<std::string> consts)
    : rng_(seed), max_depth_(max_depth), vars_(std::move(vars)), consts_(std::move(consts)) {
  if (max_depth_ < 0) max_depth_ = 0;
  if (max_depth_ > 5) max_depth_ = 5;
}

TermPtr TermGen::gen(int depth) {
  int leaf_cut = depth <= 0 ? 100 : 30;
  if (std::uniform_int_distribution<int>(0, 99)(rng_) < leaf_cut) {
    int l = std::uniform_int_distribution<int>(0, 9)(rng_);
    if (l < 6 && !vars_.empty())
      return mk_var(vars_[std::uniform_int_distribution<size_t>(0, vars_.size() - 1)(rng_)]);
    if (l < 8 && !consts_.empty())
      return mk_const(consts_[std::uniform_int_distribution<size_t>(0, consts_.size() - 1)(rng_)]);
    return mk_unit();
  }
  switch (std::uniform_int_distribution<int>(0, 5)(rng_)) {
    case 0: return mk_meet(gen(depth - 1), gen(depth - 1));
    case 1: return mk_join(gen(depth - 1), gen(depth - 1));
    case 2: return mk_prod(gen(depth - 1), gen(depth - 1));
    case 3: return mk_inv(gen(depth - 1));
    case 4: return mk_resl(gen(depth - 1), gen(depth - 1));
    default: return mk_resr(gen(depth - 1), gen(depth - 1));
  }
}

Equation random_equation(uint64_t seed, int max_depth) {
  TermGen g(seed, max_depth);
  std::mt19937_64 rel_rng(seed ^ 0x9e3779b97f4a7c15ull);
  /* Stacked residuals can make the normal form exponentially wide and
     single joinands long enough that their closures dwarf everything
     else in a sweep. Such draws are redrawn from the same stream, so
     the result is still a pure function of the seed. */
  for (int attempt = 0;; ++attempt) {
    Equation eq;
    eq.lhs = g.next();
    eq.rhs = g.next();
    eq.rel = (rel_rng() & 1) ? Relation::Equal : Relation::LessOrEqual;
    if (attempt >= 64) return eq;
    try {
      GoalSet gs = normalize_equation(eq, true);
      if (gs.goals.size() > 32) continue;
      size_t total_closure = 0;
      bool tame = true;
      for (const JoinGoal& goal : gs.goals) {
        SampleTable table;
        SampleId kappa = table.time_var("k");
        std::vector<SampleId> seeds;
        for (const BasicTerm& b : goal)
          seeds.push_back(table.app(table.intern_term(b.term()), kappa));
        size_t closure = saturate(table, seeds).size();
        total_closure += closure;
        if (closure > 300 || total_closure > 1500) {
          tame = false;
          break;
        }
      }
      if (!tame) continue;
    } catch (const ResourceError&) {
      continue;
    }
    return eq;
  }
}

std::optional<FoundCounterexample> falsify_by_search(const Equation& eq,
                                                     const WarpAssignment& consts,
                                                     uint64_t seed, int trials) {
  const std::vector<std::string> vars = equation_vars(eq);
  WarpGen gen(seed);
  for (int t = 0; t < trials; ++t) {
    WarpAssignment a;
    for (const auto& v : vars) a.emplace(v, gen.next());
    RegularWarp lw = term_warp(eq.lhs, a, consts);
    RegularWarp rw = term_warp(eq.rhs, a, consts);
    bool refuted = eq.rel == Relation::Equal ? !(lw == rw) : !warp_leq(lw, rw);
    if (!refuted) continue;

    int64_t m = std::max(lw.prefix_len(), rw.prefix_len()) + 1;
    std::vector<OmegaPlus> probes;
    for (int64_t i = 0; i <= m; ++i) probes.push_back(OmegaPlus::fin(i));
    probes.push_back(omega);
    for (OmegaPlus n : probes) {
      OmegaPlus l = lw.eval(n), r = rw.eval(n);
      bool bad = eq.rel == Relation::Equal ? !(l == r) : l > r;
      if (bad) return FoundCounterexample{std::move(a), n};
    }
    throw std::logic_error("falsify_by_search: refuted warps agree on all probes");
  }
  return std::nullopt;
}

} // namespace warpcheck
