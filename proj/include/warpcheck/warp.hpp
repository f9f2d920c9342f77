#pragma once

#include "warpcheck/omega.hpp"
#include "warpcheck/sample.hpp"
#include "warpcheck/term.hpp"

#include <map>
#include <string>
#include <vector>

namespace warpcheck {

/* Finitely describable sup-preserving maps on omega-plus: an explicit
   prefix [f(1) .. f(m)] followed by an eventually constant or eventually
   linear tail; f(0) = 0 and f(w) = sup always. The canonical form has a
   minimal prefix, so structural equality is function equality. */

struct WarpTail {
  enum class Kind { Constant, Linear } kind;
  OmegaPlus c;  // Constant: f(n) = c for n > m
  int64_t k = 0; // Linear: f(n) = n + k for n > m

  static WarpTail constant(OmegaPlus c) { return {Kind::Constant, c, 0}; }
  static WarpTail linear(int64_t k) { return {Kind::Linear, OmegaPlus(), k}; }
};

class RegularWarp {
public:
  /* Canonicalises and validates; throws std::invalid_argument if the data
     does not describe a monotone map with f(0) = 0. */
  static RegularWarp make(std::vector<OmegaPlus> prefix, WarpTail tail);

  static RegularWarp identity() { return make({}, WarpTail::linear(0)); }
  static RegularWarp predecessor() { return make({}, WarpTail::linear(-1)); }
  static RegularWarp successor() { return make({}, WarpTail::linear(1)); }
  static RegularWarp bottom() { return make({}, WarpTail::constant(OmegaPlus::fin(0))); }
  static RegularWarp top() { return make({}, WarpTail::constant(omega)); }

  OmegaPlus eval(OmegaPlus n) const;

  const std::vector<OmegaPlus>& prefix() const { return prefix_; }
  const WarpTail& tail() const { return tail_; }
  int64_t prefix_len() const { return static_cast<int64_t>(prefix_.size()); }

  friend bool operator==(const RegularWarp& a, const RegularWarp& b);
  friend bool operator!=(const RegularWarp& a, const RegularWarp& b) { return !(a == b); }

private:
  RegularWarp() : tail_(WarpTail::linear(0)) {}
  std::vector<OmegaPlus> prefix_;
  WarpTail tail_;
};

RegularWarp compose(const RegularWarp& f, const RegularWarp& g); // f after g
RegularWarp warp_meet(const RegularWarp& f, const RegularWarp& g);
RegularWarp warp_join(const RegularWarp& f, const RegularWarp& g);
RegularWarp involution(const RegularWarp& f);

/* Least point from which f stays at f(w); w when the sup is never reached. */
OmegaPlus warp_last(const RegularWarp& f);

/* Exact pointwise comparison. */
bool warp_leq(const RegularWarp& f, const RegularWarp& g);

/* "prefix=[a,b,...] tail=const(c)" or "... tail=linear(k)"; w for omega. */
std::string print_warp(const RegularWarp& f);
RegularWarp parse_warp(const std::string& s);

using WarpAssignment = std::map<std::string, RegularWarp>;

/* Interprets a full term (residuals included, via their defining
   identities) as a regular warp. Unbound variables and unknown constant
   names throw std::invalid_argument. */
RegularWarp term_warp(const TermPtr& t, const WarpAssignment& vars,
                      const WarpAssignment& consts);
OmegaPlus eval_term(const TermPtr& t, const WarpAssignment& vars,
                    const WarpAssignment& consts, OmegaPlus n);

/* Builds the least strong extension of the graph points that a diagram
   gives for variable x: X = {(d(a), d(x[a]))} + {(0,0), (w, d(x[last x]))},
   interpolated by f(i) = min(j2, j1 + (i - i1)) between neighbours.
   Variables without sample points map to the identity. */
RegularWarp reconstruct(const SampleTable& table, const std::vector<SampleId>& delta,
                        const std::map<SampleId, OmegaPlus>& diagram, const std::string& var);

/* True iff the assignment really falsifies the goal at point k:
   k > eval of every joinand at k. */
bool verify_counterexample(const std::vector<BasicTerm>& joinands,
                           const WarpAssignment& vars, const WarpAssignment& consts,
                           OmegaPlus k);

} // namespace warpcheck
