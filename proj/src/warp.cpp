#include "warpcheck/warp.hpp"

#include <algorithm>
#include <sstream>

namespace warpcheck {

namespace {

OmegaPlus tail_value(const WarpTail& tail, int64_t n) {
  if (tail.kind == WarpTail::Kind::Constant) return tail.c;
  return OmegaPlus::fin(n + tail.k);
}

OmegaPlus tail_sup(const WarpTail& tail) {
  return tail.kind == WarpTail::Kind::Constant ? tail.c : omega;
}

} // namespace

RegularWarp RegularWarp::make(std::vector<OmegaPlus> prefix, WarpTail tail) {
  const int64_t m = static_cast<int64_t>(prefix.size());
  if (tail.kind == WarpTail::Kind::Linear && m + 1 + tail.k < 0)
    throw std::invalid_argument("RegularWarp: linear tail dips below zero");
  for (int64_t i = 1; i < m; ++i)
    if (prefix[i - 1] > prefix[i])
      throw std::invalid_argument("RegularWarp: prefix not monotone");
  if (m > 0 && prefix[m - 1] > tail_value(tail, m + 1))
    throw std::invalid_argument("RegularWarp: tail below prefix");

  while (!prefix.empty()) {
    const int64_t i = static_cast<int64_t>(prefix.size());
    if (tail.kind == WarpTail::Kind::Linear && i + tail.k < 0) break;
    if (prefix.back() != tail_value(tail, i)) break;
    prefix.pop_back();
  }
  RegularWarp w;
  w.prefix_ = std::move(prefix);
  w.tail_ = tail;
  return w;
}

OmegaPlus RegularWarp::eval(OmegaPlus n) const {
  if (n == OmegaPlus::fin(0)) return OmegaPlus::fin(0);
  if (n.is_omega()) return tail_sup(tail_);
  const int64_t i = n.value();
  if (i <= prefix_len()) return prefix_[i - 1];
  return tail_value(tail_, i);
}

bool operator==(const RegularWarp& a, const RegularWarp& b) {
  if (a.tail_.kind != b.tail_.kind) return false;
  if (a.tail_.kind == WarpTail::Kind::Constant) {
    if (a.tail_.c != b.tail_.c) return false;
  } else if (a.tail_.k != b.tail_.k) {
    return false;
  }
  return a.prefix_ == b.prefix_;
}

RegularWarp compose(const RegularWarp& f, const RegularWarp& g) {
  WarpTail tail = WarpTail::linear(0);
  int64_t m = 0;
  if (g.tail().kind == WarpTail::Kind::Constant) {
    tail = WarpTail::constant(f.eval(g.tail().c));
    m = g.prefix_len();
  } else if (f.tail().kind == WarpTail::Kind::Constant) {
    tail = WarpTail::constant(f.tail().c);
    m = std::max(g.prefix_len(), f.prefix_len() - g.tail().k);
  } else {
    tail = WarpTail::linear(f.tail().k + g.tail().k);
    m = std::max(g.prefix_len(), f.prefix_len() - g.tail().k);
  }
  m = std::max<int64_t>(m, 0);
  std::vector<OmegaPlus> prefix;
  prefix.reserve(m);
  for (int64_t i = 1; i <= m; ++i)
    prefix.push_back(f.eval(g.eval(OmegaPlus::fin(i))));
  return RegularWarp::make(std::move(prefix), tail);
}

namespace {

RegularWarp pointwise(const RegularWarp& f, const RegularWarp& g, bool is_meet) {
  const WarpTail& tf = f.tail();
  const WarpTail& tg = g.tail();
  WarpTail tail = WarpTail::linear(0);
  int64_t m = std::max(f.prefix_len(), g.prefix_len());
  const bool fc = tf.kind == WarpTail::Kind::Constant;
  const bool gc = tg.kind == WarpTail::Kind::Constant;
  if (fc && gc) {
    tail = WarpTail::constant(is_meet ? std::min(tf.c, tg.c) : std::max(tf.c, tg.c));
  } else if (!fc && !gc) {
    tail = WarpTail::linear(is_meet ? std::min(tf.k, tg.k) : std::max(tf.k, tg.k));
  } else {
    const WarpTail& ct = fc ? tf : tg;  // the constant one
    const WarpTail& lt = fc ? tg : tf;  // the linear one
    if (ct.c.is_omega()) {
      tail = is_meet ? WarpTail::linear(lt.k) : WarpTail::constant(omega);
    } else {
      // crossing point: n + k >= c from n = c - k on
      m = std::max(m, ct.c.value() - lt.k);
      tail = is_meet ? WarpTail::constant(ct.c) : WarpTail::linear(lt.k);
    }
  }
  m = std::max<int64_t>(m, 0);
  std::vector<OmegaPlus> prefix;
  prefix.reserve(m);
  for (int64_t i = 1; i <= m; ++i) {
    OmegaPlus a = f.eval(OmegaPlus::fin(i));
    OmegaPlus b = g.eval(OmegaPlus::fin(i));
    prefix.push_back(is_meet ? std::min(a, b) : std::max(a, b));
  }
  return RegularWarp::make(std::move(prefix), tail);
}

} // namespace

RegularWarp warp_meet(const RegularWarp& f, const RegularWarp& g) {
  return pointwise(f, g, true);
}

RegularWarp warp_join(const RegularWarp& f, const RegularWarp& g) {
  return pointwise(f, g, false);
}

OmegaPlus warp_last(const RegularWarp& f) {
  const OmegaPlus sup = f.eval(omega);
  if (f.tail().kind == WarpTail::Kind::Linear) return omega; // sup never reached
  for (int64_t m = 0; m <= f.prefix_len() + 1; ++m)
    if (f.eval(OmegaPlus::fin(m)) == sup) return OmegaPlus::fin(m);
  throw std::logic_error("warp_last: constant tail never reaches its sup");
}

namespace {

/* f'(n) for finite n >= 1: the greatest m with f(m) < n, or w when
   f(w) < n. */
OmegaPlus invert_at(const RegularWarp& f, int64_t n) {
  const OmegaPlus target = OmegaPlus::fin(n);
  if (f.eval(omega) < target) return omega;
  int64_t m = 0;
  while (f.eval(OmegaPlus::fin(m + 1)) < target) ++m;
  return OmegaPlus::fin(m);
}

} // namespace

RegularWarp involution(const RegularWarp& f) {
  WarpTail tail = WarpTail::linear(0);
  int64_t m = 0;
  if (f.tail().kind == WarpTail::Kind::Linear) {
    tail = WarpTail::linear(-(f.tail().k + 1));
    m = f.prefix_len() + f.tail().k + 1;
  } else if (f.tail().c.is_fin()) {
    // f(w) = c < n forces f'(n) = w beyond c
    tail = WarpTail::constant(omega);
    m = f.tail().c.value();
  } else {
    // f reaches w at some finite j; beyond f(j-1) the inverse sits at j-1
    int64_t j = 1;
    while (f.eval(OmegaPlus::fin(j)).is_fin()) ++j;
    tail = WarpTail::constant(OmegaPlus::fin(j - 1));
    m = f.eval(OmegaPlus::fin(j - 1)).value();
  }
  m = std::max<int64_t>(m, 0);
  std::vector<OmegaPlus> prefix;
  prefix.reserve(m);
  for (int64_t i = 1; i <= m; ++i) prefix.push_back(invert_at(f, i));
  return RegularWarp::make(std::move(prefix), tail);
}

bool warp_leq(const RegularWarp& f, const RegularWarp& g) {
  const WarpTail& tf = f.tail();
  const WarpTail& tg = g.tail();
  int64_t m = std::max(f.prefix_len(), g.prefix_len());
  const bool fc = tf.kind == WarpTail::Kind::Constant;
  const bool gc = tg.kind == WarpTail::Kind::Constant;
  if (fc && gc) {
    if (tf.c > tg.c) return false;
  } else if (!fc && gc) {
    if (tg.c.is_fin()) return false; // linear eventually exceeds any finite constant
  } else if (!fc && !gc) {
    if (tf.k > tg.k) return false;
  } else {
    // f constant, g linear: need c <= n + k past the prefixes
    if (tf.c.is_omega()) return false;
    m = std::max(m, tf.c.value() - tg.k);
  }
  for (int64_t i = 1; i <= m; ++i)
    if (f.eval(OmegaPlus::fin(i)) > g.eval(OmegaPlus::fin(i))) return false;
  return f.eval(omega) <= g.eval(omega);
}

std::string print_warp(const RegularWarp& f) {
  std::ostringstream os;
  os << "prefix=[";
  bool first = true;
  for (OmegaPlus v : f.prefix()) {
    if (!first) os << ',';
    first = false;
    os << v;
  }
  os << "] tail=";
  if (f.tail().kind == WarpTail::Kind::Constant)
    os << "const(" << f.tail().c << ")";
  else
    os << "linear(" << f.tail().k << ")";
  return os.str();
}

RegularWarp parse_warp(const std::string& s) {
  auto bad = [&]() { return std::invalid_argument("parse_warp: bad input: " + s); };
  const std::string p1 = "prefix=[";
  size_t a = s.find(p1);
  if (a == std::string::npos) throw bad();
  size_t b = s.find(']', a);
  if (b == std::string::npos) throw bad();
  std::vector<OmegaPlus> prefix;
  std::string inner = s.substr(a + p1.size(), b - a - p1.size());
  std::istringstream is(inner);
  std::string item;
  while (std::getline(is, item, ',')) {
    item.erase(std::remove(item.begin(), item.end(), ' '), item.end());
    if (item.empty()) continue;
    prefix.push_back(item == "w" ? omega : OmegaPlus::fin(std::stoll(item)));
  }
  size_t t = s.find("tail=", b);
  if (t == std::string::npos) throw bad();
  std::string rest = s.substr(t + 5);
  size_t open = rest.find('(');
  size_t close = rest.find(')');
  if (open == std::string::npos || close == std::string::npos) throw bad();
  std::string kind = rest.substr(0, open);
  std::string arg = rest.substr(open + 1, close - open - 1);
  if (kind == "const")
    return RegularWarp::make(std::move(prefix),
                             WarpTail::constant(arg == "w" ? omega : OmegaPlus::fin(std::stoll(arg))));
  if (kind == "linear")
    return RegularWarp::make(std::move(prefix), WarpTail::linear(std::stoll(arg)));
  throw bad();
}

RegularWarp term_warp(const TermPtr& t, const WarpAssignment& vars,
                      const WarpAssignment& consts) {
  switch (t->kind) {
    case TermKind::Var: {
      auto it = vars.find(t->name);
      if (it == vars.end())
        throw std::invalid_argument("eval_term: unbound variable " + t->name);
      return it->second;
    }
    case TermKind::Const: {
      auto it = consts.find(t->name);
      if (it == consts.end())
        throw std::invalid_argument("eval_term: unknown constant " + t->name);
      return it->second;
    }
    case TermKind::Unit:
      return RegularWarp::identity();
    case TermKind::Meet:
      return warp_meet(term_warp(t->left, vars, consts), term_warp(t->right, vars, consts));
    case TermKind::Join:
      return warp_join(term_warp(t->left, vars, consts), term_warp(t->right, vars, consts));
    case TermKind::Prod:
      return compose(term_warp(t->left, vars, consts), term_warp(t->right, vars, consts));
    case TermKind::Inv:
      return involution(term_warp(t->left, vars, consts));
    case TermKind::ResL: {
      // l \ r == (r' l)'
      RegularWarp l = term_warp(t->left, vars, consts);
      RegularWarp r = term_warp(t->right, vars, consts);
      return involution(compose(involution(r), l));
    }
    case TermKind::ResR: {
      // l / r == (r l')'
      RegularWarp l = term_warp(t->left, vars, consts);
      RegularWarp r = term_warp(t->right, vars, consts);
      return involution(compose(r, involution(l)));
    }
  }
  throw std::logic_error("term_warp: unreachable");
}

OmegaPlus eval_term(const TermPtr& t, const WarpAssignment& vars,
                    const WarpAssignment& consts, OmegaPlus n) {
  return term_warp(t, vars, consts).eval(n);
}

RegularWarp reconstruct(const SampleTable& table, const std::vector<SampleId>& delta,
                        const std::map<SampleId, OmegaPlus>& diagram, const std::string& var) {
  // Graph points contributed by samples x[a] whose term is exactly the variable.
  std::map<OmegaPlus, OmegaPlus> points; // finite input -> output
  OmegaPlus at_omega = omega;
  bool found = false, found_last = false;
  for (SampleId s : delta) {
    const SampleNode& n = table.node(s);
    if (n.kind != SampleKind::App) continue;
    const TermPtr& t = table.term(n.term);
    if (t->kind != TermKind::Var || t->name != var) continue;
    found = true;
    const SampleNode& arg = table.node(n.child);
    if (arg.kind == SampleKind::Last && arg.term == n.term) {
      at_omega = diagram.at(s); // the (w, d(x[last x])) graph point
      found_last = true;
    }
    OmegaPlus in = diagram.at(n.child);
    OmegaPlus out = diagram.at(s);
    if (in.is_omega()) continue; // subsumed by the point at w
    auto [it, fresh] = points.emplace(in, out);
    if (!fresh && it->second != out)
      throw std::invalid_argument("reconstruct: diagram not order preserving");
  }
  if (!found) return RegularWarp::identity();
  if (!found_last)
    throw std::logic_error("reconstruct: sample set not saturated (missing x[last(x)])");

  auto [zit, zfresh] = points.emplace(OmegaPlus::fin(0), OmegaPlus::fin(0));
  if (!zfresh && zit->second != OmegaPlus::fin(0))
    throw std::invalid_argument("reconstruct: diagram maps 0 away from 0");

  // Order-preservation check across all graph points including (w, at_omega).
  OmegaPlus prev_out = OmegaPlus::fin(0);
  for (const auto& [in, out] : points) {
    if (out < prev_out)
      throw std::invalid_argument("reconstruct: diagram not order preserving");
    prev_out = out;
  }
  if (at_omega < prev_out)
    throw std::invalid_argument("reconstruct: diagram not order preserving");

  const auto& [ar_in, ar_out] = *points.rbegin();
  const int64_t ar = ar_in.value();
  WarpTail tail = WarpTail::linear(0);
  int64_t m = ar;
  if (ar_out.is_omega()) {
    tail = WarpTail::constant(omega);
  } else if (at_omega.is_omega()) {
    tail = WarpTail::linear(ar_out.value() - ar);
  } else {
    tail = WarpTail::constant(at_omega);
    m = ar + (at_omega.value() - ar_out.value());
  }

  std::vector<OmegaPlus> prefix;
  prefix.reserve(m);
  auto interpolate = [&](int64_t i) {
    auto hi = points.upper_bound(OmegaPlus::fin(i)); // first point strictly above i
    OmegaPlus j2 = hi == points.end() ? at_omega : hi->second;
    auto lo = std::prev(hi);
    OmegaPlus j1 = lo->second;
    int64_t i1 = lo->first.value();
    return std::min(j2, add_sat(j1, OmegaPlus::fin(i - i1)));
  };
  for (int64_t i = 1; i <= m; ++i) prefix.push_back(interpolate(i));
  return RegularWarp::make(std::move(prefix), tail);
}

bool verify_counterexample(const std::vector<BasicTerm>& joinands,
                           const WarpAssignment& vars, const WarpAssignment& consts,
                           OmegaPlus k) {
  for (const auto& t : joinands)
    if (eval_term(t.term(), vars, consts, k) >= k) return false;
  return true;
}

} // namespace warpcheck
