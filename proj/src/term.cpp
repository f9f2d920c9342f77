#include "warpcheck/term.hpp"

#include <cctype>
#include <sstream>

namespace warpcheck {

namespace {

TermPtr node(TermKind k, std::string name, TermPtr l, TermPtr r) {
  auto t = std::make_shared<Term>();
  t->kind = k;
  t->name = std::move(name);
  t->left = std::move(l);
  t->right = std::move(r);
  return t;
}

} // namespace

TermPtr mk_var(std::string name) { return node(TermKind::Var, std::move(name), nullptr, nullptr); }
TermPtr mk_unit() { return node(TermKind::Unit, "", nullptr, nullptr); }
TermPtr mk_const(std::string name) { return node(TermKind::Const, std::move(name), nullptr, nullptr); }
TermPtr mk_meet(TermPtr a, TermPtr b) { return node(TermKind::Meet, "", std::move(a), std::move(b)); }
TermPtr mk_join(TermPtr a, TermPtr b) { return node(TermKind::Join, "", std::move(a), std::move(b)); }
TermPtr mk_prod(TermPtr a, TermPtr b) { return node(TermKind::Prod, "", std::move(a), std::move(b)); }
TermPtr mk_resl(TermPtr a, TermPtr b) { return node(TermKind::ResL, "", std::move(a), std::move(b)); }
TermPtr mk_resr(TermPtr a, TermPtr b) { return node(TermKind::ResR, "", std::move(a), std::move(b)); }
TermPtr mk_inv(TermPtr a) { return node(TermKind::Inv, "", std::move(a), nullptr); }

bool term_eq(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind || a->name != b->name) return false;
  return term_eq(a->left, b->left) && term_eq(a->right, b->right);
}

bool is_basic_term(const TermPtr& t) {
  switch (t->kind) {
    case TermKind::Var:
    case TermKind::Unit:
    case TermKind::Const:
      return true;
    case TermKind::Inv:
      return is_basic_term(t->left);
    case TermKind::Prod:
      return is_basic_term(t->left) && is_basic_term(t->right);
    default:
      return false;
  }
}

BasicTerm::BasicTerm(TermPtr t) : t_(std::move(t)) {
  if (!t_ || !is_basic_term(t_))
    throw std::logic_error("BasicTerm: term is not in the basic fragment");
}

namespace {

/* Precedence levels for printing. */
enum Level { kJoin = 0, kMeet = 1, kRes = 2, kProd = 3, kInv = 4, kAtom = 5 };

int level_of(const TermPtr& t) {
  switch (t->kind) {
    case TermKind::Join: return kJoin;
    case TermKind::Meet: return kMeet;
    case TermKind::ResL:
    case TermKind::ResR: return kRes;
    case TermKind::Prod: return kProd;
    case TermKind::Inv: return kInv;
    default: return kAtom;
  }
}

void print_rec(std::ostringstream& os, const TermPtr& t, int min_level, bool compact) {
  const bool paren = level_of(t) < min_level;
  if (paren) os << '(';
  const char* sp = compact ? "" : " ";
  switch (t->kind) {
    case TermKind::Var:
    case TermKind::Const:
      os << t->name;
      break;
    case TermKind::Unit:
      os << '1';
      break;
    case TermKind::Join:
      print_rec(os, t->left, kJoin, compact);
      os << sp << "\\/" << sp;
      print_rec(os, t->right, kMeet, compact);
      break;
    case TermKind::Meet:
      print_rec(os, t->left, kMeet, compact);
      os << sp << "/\\" << sp;
      print_rec(os, t->right, kRes, compact);
      break;
    case TermKind::ResL:
      print_rec(os, t->left, kProd, compact);
      os << sp << '\\' << sp;
      print_rec(os, t->right, kProd, compact);
      break;
    case TermKind::ResR:
      print_rec(os, t->left, kProd, compact);
      os << sp << '/' << sp;
      print_rec(os, t->right, kProd, compact);
      break;
    case TermKind::Prod:
      print_rec(os, t->left, kProd, compact);
      os << sp << '*' << sp;
      print_rec(os, t->right, kInv, compact);
      break;
    case TermKind::Inv:
      print_rec(os, t->left, kInv, compact);
      os << '\'';
      break;
  }
  if (paren) os << ')';
}

} // namespace

std::string print_term(const TermPtr& t, bool compact) {
  std::ostringstream os;
  print_rec(os, t, kJoin, compact);
  return os.str();
}

std::string print_equation(const Equation& eq) {
  return print_term(eq.lhs) + (eq.rel == Relation::Equal ? " = " : " <= ") +
         print_term(eq.rhs);
}

const std::set<std::string> default_constant_names = {"bot", "top"};

namespace {

enum class Tok { Ident, One, LParen, RParen, Star, Prime, Backslash, Slash, MeetOp, JoinOp, Eq, Leq, End };

struct Token {
  Tok kind;
  std::string text;
  size_t pos;
};

struct Lexer {
  const std::string& s;
  size_t i = 0;

  explicit Lexer(const std::string& input) : s(input) {}

  Token next() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    const size_t at = i;
    if (i >= s.size()) return {Tok::End, "", at};
    const char c = s[i];
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
        ++j;
      Token t{Tok::Ident, s.substr(i, j - i), at};
      i = j;
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      const std::string lit = s.substr(i, j - i);
      if (lit != "1") throw ParseError("the only numeric literal is the unit 1", at);
      i = j;
      return {Tok::One, lit, at};
    }
    ++i;
    switch (c) {
      case '(': return {Tok::LParen, "(", at};
      case ')': return {Tok::RParen, ")", at};
      case '*': return {Tok::Star, "*", at};
      case '\'': return {Tok::Prime, "'", at};
      case '\\':
        if (i < s.size() && s[i] == '/') { ++i; return {Tok::JoinOp, "\\/", at}; }
        return {Tok::Backslash, "\\", at};
      case '/':
        if (i < s.size() && s[i] == '\\') { ++i; return {Tok::MeetOp, "/\\", at}; }
        return {Tok::Slash, "/", at};
      case '=': return {Tok::Eq, "=", at};
      case '<':
        if (i < s.size() && s[i] == '=') { ++i; return {Tok::Leq, "<=", at}; }
        throw ParseError("expected <=", at);
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", at);
    }
  }
};

struct Parser {
  Lexer lex;
  Token tok;
  const std::set<std::string>& consts;

  Parser(const std::string& input, const std::set<std::string>& constant_names)
      : lex(input), consts(constant_names) {
    tok = lex.next();
  }

  void advance() { tok = lex.next(); }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, tok.pos); }

  TermPtr atom() {
    switch (tok.kind) {
      case Tok::One:
        advance();
        return mk_unit();
      case Tok::Ident: {
        std::string name = tok.text;
        advance();
        if (consts.count(name)) return mk_const(name);
        if (name == "bot" || name == "top")
          fail("unknown constant name '" + name + "'");
        return mk_var(name);
      }
      case Tok::LParen: {
        advance();
        TermPtr t = join();
        if (tok.kind != Tok::RParen) fail("expected )");
        advance();
        return t;
      }
      default:
        fail("expected a term");
    }
  }

  TermPtr inv() {
    TermPtr t = atom();
    while (tok.kind == Tok::Prime) {
      advance();
      t = mk_inv(t);
    }
    return t;
  }

  TermPtr prod() {
    TermPtr t = inv();
    while (tok.kind == Tok::Star) {
      advance();
      t = mk_prod(t, inv());
    }
    return t;
  }

  TermPtr res() {
    TermPtr t = prod();
    if (tok.kind == Tok::Backslash) {
      advance();
      return mk_resl(t, prod());
    }
    if (tok.kind == Tok::Slash) {
      advance();
      return mk_resr(t, prod());
    }
    return t;
  }

  TermPtr meet() {
    TermPtr t = res();
    while (tok.kind == Tok::MeetOp) {
      advance();
      t = mk_meet(t, res());
    }
    return t;
  }

  TermPtr join() {
    TermPtr t = meet();
    while (tok.kind == Tok::JoinOp) {
      advance();
      t = mk_join(t, meet());
    }
    return t;
  }
};

} // namespace

TermPtr parse_term(const std::string& input, const std::set<std::string>& constant_names) {
  Parser p(input, constant_names);
  TermPtr t = p.join();
  if (p.tok.kind != Tok::End) p.fail("trailing input after term");
  return t;
}

Equation parse_equation(const std::string& input, const std::set<std::string>& constant_names) {
  Parser p(input, constant_names);
  TermPtr lhs = p.join();
  Relation rel;
  if (p.tok.kind == Tok::Eq) rel = Relation::Equal;
  else if (p.tok.kind == Tok::Leq) rel = Relation::LessOrEqual;
  else p.fail("expected = or <= (bare terms are not equations)");
  p.advance();
  TermPtr rhs = p.join();
  if (p.tok.kind != Tok::End) p.fail("trailing input after equation");
  return {rel, lhs, rhs};
}

namespace {

void collect_vars(const TermPtr& t, std::set<std::string>& out) {
  if (!t) return;
  if (t->kind == TermKind::Var) out.insert(t->name);
  collect_vars(t->left, out);
  collect_vars(t->right, out);
}

} // namespace

std::vector<std::string> term_vars(const TermPtr& t) {
  std::set<std::string> s;
  collect_vars(t, s);
  return {s.begin(), s.end()};
}

std::vector<std::string> equation_vars(const Equation& eq) {
  std::set<std::string> s;
  collect_vars(eq.lhs, s);
  collect_vars(eq.rhs, s);
  return {s.begin(), s.end()};
}

} // namespace warpcheck
