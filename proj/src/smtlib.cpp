#include "warpcheck/smtlib.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <unistd.h>

namespace warpcheck {

namespace {

std::string int_lit(int64_t n) {
  if (n < 0) return "(- " + std::to_string(-n) + ")";
  return std::to_string(n);
}

std::string var_name(int v) { return "v" + std::to_string(v); }

void emit_node(const IdlPtr& f, std::ostream& os) {
  switch (f->kind) {
    case IdlNode::Kind::Atom:
      os << "(<= (- " << var_name(f->atom.u) << ' ' << var_name(f->atom.v)
         << ") " << int_lit(f->atom.c) << ')';
      return;
    case IdlNode::Kind::Not:
      os << "(not ";
      emit_node(f->kids[0], os);
      os << ')';
      return;
    case IdlNode::Kind::And:
    case IdlNode::Kind::Or: {
      if (f->kids.empty()) {
        os << (f->kind == IdlNode::Kind::And ? "true" : "false");
        return;
      }
      os << (f->kind == IdlNode::Kind::And ? "(and" : "(or");
      for (const auto& k : f->kids) {
        os << ' ';
        emit_node(k, os);
      }
      os << ')';
      return;
    }
    case IdlNode::Kind::Implies:
      os << "(=> ";
      emit_node(f->kids[0], os);
      os << ' ';
      emit_node(f->kids[1], os);
      os << ')';
      return;
    case IdlNode::Kind::Iff:
      os << "(= ";
      emit_node(f->kids[0], os);
      os << ' ';
      emit_node(f->kids[1], os);
      os << ')';
      return;
  }
  throw std::logic_error("smtlib: bad formula node");
}

} // namespace

std::string to_smtlib(const IdlProblem& p) {
  std::ostringstream os;
  os << "(set-logic QF_IDL)\n";
  for (int v = 0; v < p.num_vars; ++v)
    os << "(declare-fun " << var_name(v) << " () Int)\n";
  if (p.zero_var) {
    os << "(assert (<= " << var_name(*p.zero_var) << " 0))\n";
    os << "(assert (<= 0 " << var_name(*p.zero_var) << "))\n";
  }
  for (const auto& c : p.conjuncts) {
    os << "(assert ";
    emit_node(c, os);
    os << ")\n";
  }
  os << "(check-sat)\n(get-model)\n";
  return os.str();
}

SmtResult parse_smt_output(const std::string& output, const IdlProblem& p) {
  std::string cleaned = output;
  for (char& c : cleaned)
    if (c == '(' || c == ')') c = ' ';
  std::istringstream is(cleaned);
  std::vector<std::string> toks;
  for (std::string t; is >> t;) toks.push_back(t);

  SmtResult r;
  r.detail = output;
  size_t i = 0;
  for (; i < toks.size(); ++i) {
    if (toks[i] == "sat") {
      r.status = SmtResult::Status::Sat;
      break;
    }
    if (toks[i] == "unsat") {
      r.status = SmtResult::Status::Unsat;
      break;
    }
    if (toks[i] == "unknown" || toks[i] == "timeout") {
      r.status = SmtResult::Status::Unknown;
      break;
    }
  }
  if (i == toks.size()) return r; // Error: no verdict in the output
  if (r.status != SmtResult::Status::Sat) return r;

  r.model.assign(p.num_vars, 0);
  for (size_t k = i; k < toks.size(); ++k) {
    if (toks[k] != "define-fun") continue;
    if (k + 3 >= toks.size()) break;
    const std::string& name = toks[k + 1];
    if (name.size() < 2 || name[0] != 'v') continue;
    bool digits = true;
    for (size_t j = 1; j < name.size(); ++j)
      if (!std::isdigit(static_cast<unsigned char>(name[j]))) digits = false;
    if (!digits) continue;
    int v = std::atoi(name.c_str() + 1);
    if (v < 0 || v >= p.num_vars) continue;
    if (toks[k + 2] != "Int") continue;
    const std::string& val = toks[k + 3];
    int64_t x = 0;
    if (val == "-") {
      if (k + 4 >= toks.size()) continue;
      x = -std::strtoll(toks[k + 4].c_str(), nullptr, 10);
    } else {
      x = std::strtoll(val.c_str(), nullptr, 10);
    }
    r.model[v] = x;
  }
  if (p.zero_var) {
    int64_t shift = r.model[*p.zero_var];
    for (auto& x : r.model) x -= shift;
  }
  return r;
}

std::optional<std::string> smt_solver_command(const std::string& explicit_cmd) {
  if (!explicit_cmd.empty()) return explicit_cmd;
  const char* env = std::getenv("WARPCHECK_SMT_SOLVER");
  if (env && *env) return std::string(env);
  return std::nullopt;
}

SmtResult run_smt_solver(const std::string& cmd, const IdlProblem& p,
                         int timeout_secs) {
  namespace fs = std::filesystem;
  fs::path path = fs::temp_directory_path() /
                  ("warpcheck-" + std::to_string(getpid()) + "-" +
                   std::to_string(reinterpret_cast<uintptr_t>(&p) & 0xffff) + ".smt2");
  {
    std::ofstream out(path);
    if (!out) {
      SmtResult r;
      r.detail = "cannot write temp file " + path.string();
      return r;
    }
    out << to_smtlib(p);
  }

  std::string full;
  if (timeout_secs > 0) full = "timeout " + std::to_string(timeout_secs) + " ";
  full += cmd + " " + path.string() + " 2>&1";

  std::string output;
  FILE* pipe = popen(full.c_str(), "r");
  if (!pipe) {
    std::error_code ec;
    fs::remove(path, ec);
    SmtResult r;
    r.detail = "failed to launch: " + full;
    return r;
  }
  char buf[4096];
  while (size_t got = fread(buf, 1, sizeof buf, pipe)) output.append(buf, got);
  int rc = pclose(pipe);
  std::error_code ec;
  fs::remove(path, ec);

  SmtResult r = parse_smt_output(output, p);
  if (r.status == SmtResult::Status::Error && rc == 31744) // timeout(1): 124 << 8
    r.status = SmtResult::Status::Unknown;
  return r;
}

} // namespace warpcheck
