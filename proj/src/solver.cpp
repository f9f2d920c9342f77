#include "warpcheck/solver.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

namespace warpcheck {

namespace {

/* Literals: variable v appears as 2v, its negation as 2v+1. Variable 0 is
   a pinned TRUE constant so constant subformulas fold away during CNF
   conversion. */
using Lit = int;

inline Lit mklit(int v, bool neg) { return 2 * v + (neg ? 1 : 0); }
inline Lit lneg(Lit l) { return l ^ 1; }
inline int lvar(Lit l) { return l >> 1; }

constexpr Lit LIT_TRUE = 0;
constexpr Lit LIT_FALSE = 1;

struct TEdge {
  int to;
  int64_t w;
  Lit lit; // the assigned atom literal this edge came from
};

struct Solver {
  const IdlProblem& prob;
  int64_t max_decisions;

  // Atom variables are numbered first (1..#atoms, in order of first
  // encounter), Tseitin variables after, so the decision heuristic
  // (lowest unassigned index) reaches atoms before gate variables and
  // runs are reproducible.
  std::vector<DiffAtom> atoms;
  std::map<std::tuple<int, int, int64_t>, int> atom_ids;
  int nvars = 1;
  std::vector<std::vector<Lit>> clauses;
  std::vector<std::vector<int>> watches; // by literal: clause indices
  std::map<std::pair<char, std::vector<Lit>>, Lit> gate_cache;
  std::vector<std::vector<int>> atoms_at_u, atoms_at_v; // int var -> atom vars

  std::vector<int8_t> val;       // by var: -1 open, 0 false, 1 true
  std::vector<uint8_t> entailed; // by var: justified by shortest paths alone
  std::vector<int> trail_pos;    // by var: index into trail while assigned
  std::vector<Lit> trail;
  std::vector<uint8_t> edge_added; // by trail index: difference edge in graph

  /* Decision order: conflict-driven activity with exact tie-breaking on
     the variable index, so runs are reproducible. Saved phases make the
     search resume where a subtree left off. */
  std::vector<double> activity;
  std::vector<uint8_t> saved_phase; // 1 = last value was false
  double var_inc = 1.0;
  std::vector<int> vheap; // max-heap of open variables
  std::vector<int> vpos;  // by var: heap slot, -1 when absent

  bool vless(int a, int b) const {
    return activity[a] < activity[b] || (activity[a] == activity[b] && a > b);
  }
  void vh_up(size_t i) {
    int v = vheap[i];
    while (i > 0) {
      size_t p = (i - 1) / 2;
      if (!vless(vheap[p], v)) break;
      vheap[i] = vheap[p];
      vpos[vheap[i]] = static_cast<int>(i);
      i = p;
    }
    vheap[i] = v;
    vpos[v] = static_cast<int>(i);
  }
  void vh_down(size_t i) {
    int v = vheap[i];
    size_t n = vheap.size();
    for (;;) {
      size_t c = 2 * i + 1;
      if (c >= n) break;
      if (c + 1 < n && vless(vheap[c], vheap[c + 1])) ++c;
      if (!vless(v, vheap[c])) break;
      vheap[i] = vheap[c];
      vpos[vheap[i]] = static_cast<int>(i);
      i = c;
    }
    vheap[i] = v;
    vpos[v] = static_cast<int>(i);
  }
  void vh_insert(int v) {
    if (vpos[v] >= 0) return;
    vpos[v] = static_cast<int>(vheap.size());
    vheap.push_back(v);
    vh_up(vheap.size() - 1);
  }
  int vh_pop() {
    int v = vheap[0];
    vpos[v] = -1;
    vheap[0] = vheap.back();
    vheap.pop_back();
    if (!vheap.empty()) {
      vpos[vheap[0]] = 0;
      vh_down(0);
    }
    return v;
  }
  void bump(int v) {
    activity[v] += var_inc;
    if (activity[v] > 1e100) {
      for (int i = 0; i < nvars; ++i) activity[i] *= 1e-100;
      var_inc *= 1e-100;
    }
    if (vpos[v] >= 0) vh_up(vpos[v]);
  }
  size_t qhead = 0;
  struct Level {
    size_t trail_start;
    Lit declit;
    bool flipped;
  };
  std::vector<Level> levels;
  int64_t n_decisions = 0;
  int unassigned_atoms = 0;
  bool root_conflict = false;

  /* Difference graph over the integer variables, plus a potential
     function pi kept feasible for every asserted edge: pi[to] <= pi[from]
     + w. Feasibility survives edge removal, so backtracking only pops
     adjacency lists and never touches pi. */
  std::vector<std::vector<TEdge>> adj, radj;
  std::vector<int64_t> pi;

  // Dijkstra scratch, generation-stamped instead of cleared.
  std::vector<int64_t> distf, distb;
  std::vector<int> stampf, stampb, donef, par_node;
  std::vector<Lit> par_lit;
  std::vector<std::pair<int, int64_t>> popped;
  std::vector<int> reachf, reachb;
  int gen = 0;
  std::vector<std::pair<int64_t, int>> heap; // min-heap via std::*_heap on greater<>

  void heap_push(int64_t d, int x) {
    heap.emplace_back(d, x);
    std::push_heap(heap.begin(), heap.end(), std::greater<>());
  }
  std::pair<int64_t, int> heap_pop() {
    std::pop_heap(heap.begin(), heap.end(), std::greater<>());
    auto e = heap.back();
    heap.pop_back();
    return e;
  }

  Solver(const IdlProblem& p, int64_t budget) : prob(p), max_decisions(budget) {
    int n = std::max(p.num_vars, 0);
    adj.resize(n);
    radj.resize(n);
    pi.assign(n, 0);
    distf.assign(n, 0);
    distb.assign(n, 0);
    stampf.assign(n, 0);
    stampb.assign(n, 0);
    donef.assign(n, 0);
    par_node.assign(n, -1);
    par_lit.assign(n, 0);
    atoms_at_u.resize(n);
    atoms_at_v.resize(n);
  }

  int atom_bvar(const DiffAtom& a) {
    if (a.u < 0 || a.v < 0 || a.u >= prob.num_vars || a.v >= prob.num_vars)
      throw std::logic_error("solver: atom variable out of range");
    auto key = std::make_tuple(a.u, a.v, a.c);
    auto it = atom_ids.find(key);
    if (it != atom_ids.end()) return it->second;
    int id = nvars++;
    atom_ids.emplace(key, id);
    atoms.push_back(a);
    atoms_at_u[a.u].push_back(id);
    atoms_at_v[a.v].push_back(id);
    return id;
  }

  bool is_atom_var(int v) const { return v >= 1 && v <= static_cast<int>(atoms.size()); }

  int lit_value(Lit l) const {
    int8_t v = val[lvar(l)];
    if (v < 0) return -1;
    return (l & 1) ? (1 - v) : v;
  }

  void attach(int ci) {
    if (watches.size() < 2 * static_cast<size_t>(nvars)) watches.resize(2 * static_cast<size_t>(nvars));
    watches[clauses[ci][0]].push_back(ci);
    watches[clauses[ci][1]].push_back(ci);
  }

  /* Gate construction with structural sharing: identical subformulas get
     one variable, so the thousands of order atoms the constraint schemas
     repeat across formulas are encoded once. */
  Lit gate(char tag, std::vector<Lit> ks) {
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    bool conj = tag == 'A';
    Lit absorb = conj ? LIT_FALSE : LIT_TRUE;  // dominates the gate
    Lit neutral = conj ? LIT_TRUE : LIT_FALSE; // drops out
    std::vector<Lit> kept;
    for (size_t i = 0; i < ks.size(); ++i) {
      if (ks[i] == absorb) return absorb;
      if (i + 1 < ks.size() && ks[i + 1] == lneg(ks[i])) return absorb;
      if (ks[i] != neutral) kept.push_back(ks[i]);
    }
    if (kept.empty()) return neutral;
    if (kept.size() == 1) return kept[0];
    auto key = std::make_pair(tag, kept);
    auto it = gate_cache.find(key);
    if (it != gate_cache.end()) return it->second;
    Lit g = mklit(nvars++, false);
    std::vector<Lit> big{conj ? g : lneg(g)};
    for (Lit k : kept) {
      clauses.push_back(conj ? std::vector<Lit>{lneg(g), k} : std::vector<Lit>{g, lneg(k)});
      attach(static_cast<int>(clauses.size()) - 1);
      big.push_back(conj ? lneg(k) : k);
    }
    clauses.push_back(std::move(big));
    attach(static_cast<int>(clauses.size()) - 1);
    gate_cache.emplace(std::move(key), g);
    return g;
  }

  void flatten(const IdlPtr& f, IdlNode::Kind k, std::vector<Lit>& out) {
    if (f->kind == k) {
      for (const auto& kid : f->kids) flatten(kid, k, out);
      return;
    }
    out.push_back(lit_of(f));
  }

  Lit lit_of(const IdlPtr& f) {
    switch (f->kind) {
      case IdlNode::Kind::Atom: {
        const DiffAtom& a = f->atom;
        if (a.u == a.v) return a.c >= 0 ? LIT_TRUE : LIT_FALSE;
        return mklit(atom_bvar(a), false);
      }
      case IdlNode::Kind::Not:
        return lneg(lit_of(f->kids[0]));
      case IdlNode::Kind::And:
      case IdlNode::Kind::Or: {
        std::vector<Lit> ks;
        flatten(f, f->kind, ks);
        return gate(f->kind == IdlNode::Kind::And ? 'A' : 'O', std::move(ks));
      }
      case IdlNode::Kind::Implies:
        return gate('O', {lneg(lit_of(f->kids[0])), lit_of(f->kids[1])});
      case IdlNode::Kind::Iff: {
        Lit a = lit_of(f->kids[0]), b = lit_of(f->kids[1]);
        if (a == LIT_TRUE) return b;
        if (a == LIT_FALSE) return lneg(b);
        if (b == LIT_TRUE) return a;
        if (b == LIT_FALSE) return lneg(a);
        if (a == b) return LIT_TRUE;
        if (a == lneg(b)) return LIT_FALSE;
        bool s = ((a ^ b) & 1) != 0;
        Lit x = std::min(a & ~1, b & ~1), y = std::max(a & ~1, b & ~1);
        auto key = std::make_pair('I', std::vector<Lit>{x, y});
        auto it = gate_cache.find(key);
        Lit g;
        if (it != gate_cache.end()) {
          g = it->second;
        } else {
          g = mklit(nvars++, false);
          for (auto& cl : {std::vector<Lit>{lneg(g), lneg(x), y},
                           std::vector<Lit>{lneg(g), x, lneg(y)},
                           std::vector<Lit>{g, x, y},
                           std::vector<Lit>{g, lneg(x), lneg(y)}}) {
            clauses.push_back(cl);
            attach(static_cast<int>(clauses.size()) - 1);
          }
          gate_cache.emplace(std::move(key), g);
        }
        return s ? lneg(g) : g;
      }
    }
    throw std::logic_error("solver: bad formula node");
  }

  bool enqueue(Lit l, bool from_theory) {
    int v = lvar(l);
    int8_t want = (l & 1) ? 0 : 1;
    if (val[v] >= 0) return val[v] == want;
    val[v] = want;
    entailed[v] = from_theory ? 1 : 0;
    trail_pos[v] = static_cast<int>(trail.size());
    trail.push_back(l);
    edge_added.push_back(0);
    if (is_atom_var(v)) --unassigned_atoms;
    return true;
  }

  void build() {
    // Number every atom before any Tseitin variable exists.
    std::vector<DiffAtom> in_order;
    for (const auto& c : prob.conjuncts) idl_collect_atoms(c, in_order);
    for (const auto& a : in_order)
      if (a.u != a.v) atom_bvar(a);
    unassigned_atoms = static_cast<int>(atoms.size());

    std::vector<Lit> roots;
    for (const auto& c : prob.conjuncts) roots.push_back(lit_of(c));

    val.assign(nvars, -1);
    entailed.assign(nvars, 0);
    trail_pos.assign(nvars, -1);
    if (watches.size() < 2 * static_cast<size_t>(nvars)) watches.resize(2 * static_cast<size_t>(nvars));
    activity.assign(nvars, 0.0);
    saved_phase.assign(nvars, 1);
    vpos.assign(nvars, -1);
    for (int i = 1; i < nvars; ++i) vh_insert(i);
    enqueue(LIT_TRUE, false);
    for (Lit r : roots)
      if (!enqueue(r, false)) root_conflict = true;
  }

  struct Conflict {
    bool theory = false;
    std::vector<Lit> lits; // for theory conflicts: the cycle's atom literals
  };

  /* Assert edge from->to with weight w (meaning x_to <= x_from + w).
     Repairs pi with a Dijkstra over reduced costs, early-cut at the slack
     deficit; reaching `from` below the cut is exactly a negative cycle
     through the new edge, reported as the literals along it. */
  std::optional<Conflict> assert_edge(int from, int to, int64_t w, Lit alit) {
    int64_t slack = pi[from] + w - pi[to];
    if (slack < 0) {
      int64_t lim = -slack;
      ++gen;
      popped.clear();
      heap.clear();
      distf[to] = 0;
      stampf[to] = gen;
      heap_push(0, to);
      while (!heap.empty()) {
        auto [d, x] = heap_pop();
        if (stampf[x] != gen || d != distf[x] || donef[x] == gen) continue;
        if (d >= lim) break;
        if (x == from) {
          Conflict cf;
          cf.theory = true;
          cf.lits.push_back(alit);
          for (int cur = x; cur != to; cur = par_node[cur]) cf.lits.push_back(par_lit[cur]);
          return cf;
        }
        donef[x] = gen;
        popped.push_back({x, d});
        for (const TEdge& e : adj[x]) {
          int64_t nd = d + (pi[x] + e.w - pi[e.to]);
          if (nd >= lim) continue;
          if (stampf[e.to] != gen || nd < distf[e.to]) {
            distf[e.to] = nd;
            stampf[e.to] = gen;
            par_node[e.to] = x;
            par_lit[e.to] = e.lit;
            heap_push(nd, e.to);
          }
        }
      }
      for (auto [x, d] : popped) pi[x] += d - lim;
    }
    adj[from].push_back({to, w, alit});
    radj[to].push_back({from, w, alit});
    return std::nullopt;
  }

  void dijkstra(int src, bool rev, std::vector<int64_t>& dist, std::vector<int>& stamp,
                std::vector<int>& reach) {
    const auto& g = rev ? radj : adj;
    reach.clear();
    heap.clear();
    dist[src] = 0;
    stamp[src] = gen;
    heap_push(0, src);
    while (!heap.empty()) {
      auto [d, x] = heap_pop();
      if (stamp[x] != gen || d != dist[x]) continue;
      reach.push_back(x);
      for (const TEdge& e : g[x]) {
        int64_t rc = rev ? pi[e.to] + e.w - pi[x] : pi[x] + e.w - pi[e.to];
        int64_t nd = d + rc;
        if (stamp[e.to] != gen || nd < dist[e.to]) {
          dist[e.to] = nd;
          stamp[e.to] = gen;
          heap_push(nd, e.to);
        }
      }
    }
  }

  /* Entailment propagation: any atom newly forced by the difference graph
     is forced along a shortest path through the edge just added, so two
     single-source runs (forward from its head, backward from its tail)
     cover every candidate. Entailed assignments never shorten any path,
     so their edges are skipped entirely when processed. */
  void propagate_theory(int from, int to, int64_t w) {
    if (unassigned_atoms == 0) return;
    ++gen;
    dijkstra(to, false, distf, stampf, reachf);
    dijkstra(from, true, distb, stampb, reachb);
    int64_t base = pi[from] + w - pi[to];
    // An atom u - v <= c is forced true when u sits in the forward cone
    // and v in the backward one, forced false the mirrored way. Walk the
    // smaller cone.
    if (reachf.size() <= reachb.size()) {
      for (int x : reachf) {
        for (int av : atoms_at_u[x]) {
          if (val[av] >= 0) continue;
          const DiffAtom& a = atoms[av - 1];
          if (stampb[a.v] != gen) continue;
          int64_t len = distb[a.v] - pi[a.v] + pi[a.u] + distf[x] + base;
          if (len <= a.c) enqueue(mklit(av, false), true);
        }
        for (int av : atoms_at_v[x]) {
          if (val[av] >= 0) continue;
          const DiffAtom& a = atoms[av - 1];
          if (stampb[a.u] != gen) continue;
          int64_t len = distb[a.u] - pi[a.u] + pi[a.v] + distf[x] + base;
          if (len <= -a.c - 1) enqueue(mklit(av, true), true);
        }
      }
    } else {
      for (int x : reachb) {
        for (int av : atoms_at_v[x]) {
          if (val[av] >= 0) continue;
          const DiffAtom& a = atoms[av - 1];
          if (stampf[a.u] != gen) continue;
          int64_t len = distb[x] - pi[x] + pi[a.u] + distf[a.u] + base;
          if (len <= a.c) enqueue(mklit(av, false), true);
        }
        for (int av : atoms_at_u[x]) {
          if (val[av] >= 0) continue;
          const DiffAtom& a = atoms[av - 1];
          if (stampf[a.v] != gen) continue;
          int64_t len = distb[x] - pi[x] + pi[a.v] + distf[a.v] + base;
          if (len <= -a.c - 1) enqueue(mklit(av, true), true);
        }
      }
    }
  }

  std::optional<Conflict> propagate() {
    while (qhead < trail.size()) {
      Lit l = trail[qhead++];
      Lit fl = lneg(l);
      auto& wl = watches[fl];
      size_t keep = 0;
      for (size_t i = 0; i < wl.size(); ++i) {
        int ci = wl[i];
        auto& c = clauses[ci];
        if (c[0] == fl) std::swap(c[0], c[1]);
        if (lit_value(c[0]) == 1) {
          wl[keep++] = ci;
          continue;
        }
        int repl = -1;
        for (size_t k = 2; k < c.size(); ++k)
          if (lit_value(c[k]) != 0) {
            repl = static_cast<int>(k);
            break;
          }
        if (repl >= 0) {
          std::swap(c[1], c[repl]);
          watches[c[1]].push_back(ci);
          continue;
        }
        wl[keep++] = ci;
        if (lit_value(c[0]) == 0) {
          for (size_t j = i + 1; j < wl.size(); ++j) wl[keep++] = wl[j];
          wl.resize(keep);
          Conflict cf;
          cf.lits = c; // falsified clause, kept for activity bumping
          return cf;
        }
        enqueue(c[0], false);
      }
      wl.resize(keep);

      int v = lvar(l);
      if (is_atom_var(v) && !entailed[v]) {
        const DiffAtom& a = atoms[v - 1];
        int from = (l & 1) ? a.u : a.v;
        int to = (l & 1) ? a.v : a.u;
        int64_t w = (l & 1) ? -a.c - 1 : a.c;
        int64_t slack0 = pi[from] + w - pi[to];
        auto conf = assert_edge(from, to, w, l);
        if (conf) return conf;
        edge_added[qhead - 1] = 1;
        if (slack0 < 0) propagate_theory(from, to, w);
      }
    }
    return std::nullopt;
  }

  void undo_to(size_t target) {
    while (trail.size() > target) {
      Lit l = trail.back();
      int v = lvar(l);
      if (edge_added.back()) {
        const DiffAtom& a = atoms[v - 1];
        int from = (l & 1) ? a.u : a.v;
        int to = (l & 1) ? a.v : a.u;
        adj[from].pop_back();
        radj[to].pop_back();
      }
      if (is_atom_var(v)) ++unassigned_atoms;
      saved_phase[v] = (l & 1);
      val[v] = -1;
      entailed[v] = 0;
      trail_pos[v] = -1;
      vh_insert(v);
      trail.pop_back();
      edge_added.pop_back();
    }
    qhead = target;
  }

  /* Store a learned clause under the current (post-backtrack) assignment.
     Returns false when it is still falsified, in which case the caller
     keeps backtracking. */
  bool attach_learned(std::vector<Lit>& ls) {
    std::sort(ls.begin(), ls.end());
    ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
    if (ls.size() == 1) return enqueue(ls[0], false);
    int p0 = -1, p1 = -1, deepest = -1;
    for (size_t i = 0; i < ls.size(); ++i) {
      if (lit_value(ls[i]) != 0) {
        if (p0 < 0)
          p0 = static_cast<int>(i);
        else if (p1 < 0)
          p1 = static_cast<int>(i);
      } else if (deepest < 0 || trail_pos[lvar(ls[i])] > trail_pos[lvar(ls[deepest])]) {
        deepest = static_cast<int>(i);
      }
    }
    if (p0 < 0) return false;
    std::swap(ls[0], ls[p0]);
    if (p1 < 0) {
      std::swap(ls[1], ls[deepest == 0 ? p0 : deepest]);
    } else {
      if (p1 == 0) p1 = p0;
      std::swap(ls[1], ls[p1]);
    }
    clauses.push_back(ls);
    attach(static_cast<int>(clauses.size()) - 1);
    if (lit_value(ls[0]) == -1 && lit_value(ls[1]) == 0) enqueue(ls[0], false);
    return true;
  }

  std::vector<int64_t> extract_model() const {
    if (prob.num_vars == 0) return {};
    int64_t shift =
        prob.zero_var ? pi[*prob.zero_var] : *std::min_element(pi.begin(), pi.end());
    std::vector<int64_t> m(prob.num_vars);
    for (int i = 0; i < prob.num_vars; ++i) m[i] = pi[i] - shift;
    return m;
  }

  void verify_model(const std::vector<int64_t>& m) const {
    for (const auto& cl : clauses) {
      bool sat = false;
      for (Lit l : cl)
        if (lit_value(l) == 1) {
          sat = true;
          break;
        }
      if (!sat) throw std::logic_error("solver: assignment misses a clause");
    }
    if (!idl_eval_problem(prob, m))
      throw std::logic_error("solver: model fails the original constraints");
  }

  SolveResult search() {
    SolveResult res;
    if (root_conflict) {
      res.status = SolveStatus::Unsat;
      return res;
    }
    for (;;) {
      auto conf = propagate();
      if (conf) {
        for (Lit l : conf->lits) bump(lvar(l));
        var_inc /= 0.95;
        std::vector<Lit> learned;
        if (conf->theory)
          for (Lit l : conf->lits) learned.push_back(lneg(l));
        bool pending = !learned.empty();
        for (;;) {
          while (!levels.empty() && levels.back().flipped) {
            undo_to(levels.back().trail_start);
            levels.pop_back();
          }
          if (levels.empty()) {
            res.status = SolveStatus::Unsat;
            res.decisions = n_decisions;
            return res;
          }
          Level& top = levels.back();
          undo_to(top.trail_start);
          top.flipped = true;
          top.declit = lneg(top.declit);
          enqueue(top.declit, false);
          if (!pending) break;
          if (attach_learned(learned)) break;
        }
        continue;
      }
      int v = -1;
      while (!vheap.empty()) {
        int c = vh_pop();
        if (val[c] < 0) {
          v = c;
          break;
        }
      }
      if (v < 0) {
        res.status = SolveStatus::Sat;
        res.model = extract_model();
        res.decisions = n_decisions;
        verify_model(res.model);
        return res;
      }
      if (++n_decisions > max_decisions) {
        res.status = SolveStatus::BudgetExceeded;
        res.decisions = n_decisions;
        return res;
      }
      Lit dl = mklit(v, saved_phase[v] != 0);
      levels.push_back({trail.size(), dl, false});
      enqueue(dl, false);
    }
  }
};

} // namespace

SolveResult solve_idl(const IdlProblem& p, int64_t max_decisions) {
  Solver s(p, max_decisions);
  s.build();
  return s.search();
}

std::optional<SolveResult> solve_bruteforce(const IdlProblem& p, int64_t bound,
                                            int64_t cap) {
  std::vector<int> free_ix;
  for (int i = 0; i < p.num_vars; ++i)
    if (!(p.zero_var && *p.zero_var == i)) free_ix.push_back(i);

  long double points = 1;
  for (size_t i = 0; i < free_ix.size(); ++i) {
    points *= static_cast<long double>(bound + 1);
    if (points > static_cast<long double>(cap)) return std::nullopt;
  }

  SolveResult r;
  r.status = SolveStatus::Unsat;
  std::vector<int64_t> model(p.num_vars, 0);
  for (;;) {
    if (idl_eval_problem(p, model)) {
      r.status = SolveStatus::Sat;
      r.model = model;
      return r;
    }
    size_t k = 0;
    for (; k < free_ix.size(); ++k) {
      if (model[free_ix[k]] < bound) {
        ++model[free_ix[k]];
        break;
      }
      model[free_ix[k]] = 0;
    }
    if (k == free_ix.size()) break;
  }
  return r;
}

} // namespace warpcheck
