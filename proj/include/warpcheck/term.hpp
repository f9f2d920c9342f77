#pragma once

#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace warpcheck {

/* Terms of the equational language: lattice meet/join, composition,
   the unit warp, involution, the two residuals, variables and named
   constants. Immutable shared trees. */

enum class TermKind {
  Var,
  Unit,
  Const,
  Meet,
  Join,
  Prod,
  ResL, // l \ r
  ResR, // l / r
  Inv,
};

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  TermKind kind;
  std::string name;    // Var, Const
  TermPtr left, right; // binary nodes; Inv uses left only
};

TermPtr mk_var(std::string name);
TermPtr mk_unit();
TermPtr mk_const(std::string name);
TermPtr mk_meet(TermPtr a, TermPtr b);
TermPtr mk_join(TermPtr a, TermPtr b);
TermPtr mk_prod(TermPtr a, TermPtr b);
TermPtr mk_resl(TermPtr a, TermPtr b);
TermPtr mk_resr(TermPtr a, TermPtr b);
TermPtr mk_inv(TermPtr a);

bool term_eq(const TermPtr& a, const TermPtr& b);

/* Residual- and lattice-free terms: variables, constants, 1, products,
   involutions. */
bool is_basic_term(const TermPtr& t);

/* Checked wrapper for terms in the basic fragment. */
class BasicTerm {
public:
  explicit BasicTerm(TermPtr t);
  const TermPtr& term() const { return t_; }
  friend bool operator==(const BasicTerm& a, const BasicTerm& b) {
    return term_eq(a.t_, b.t_);
  }

private:
  TermPtr t_;
};

enum class Relation { Equal, LessOrEqual };

struct Equation {
  Relation rel;
  TermPtr lhs, rhs;
};

/* Minimal-parenthesis rendering; parse(print(t)) == t.
   compact=true drops the spaces around binary operators (used when
   rendering terms inside samples). */
std::string print_term(const TermPtr& t, bool compact = false);
std::string print_equation(const Equation& eq);

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " (at offset " + std::to_string(pos) + ")"),
        position(pos) {}
  size_t position;
};

extern const std::set<std::string> default_constant_names;

/* Grammar, loosest to tightest: \/ , /\ , the residuals \ and / (non
   associative), * (left associative), postfix '. Atoms are 1, named
   constants, identifiers and parenthesised terms. */
TermPtr parse_term(const std::string& input,
                   const std::set<std::string>& constant_names = default_constant_names);

/* An equation is term (= | <=) term; bare terms are rejected. */
Equation parse_equation(const std::string& input,
                        const std::set<std::string>& constant_names = default_constant_names);

/* Free variables, sorted by name. */
std::vector<std::string> term_vars(const TermPtr& t);
std::vector<std::string> equation_vars(const Equation& eq);

} // namespace warpcheck
