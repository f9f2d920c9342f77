#include "warpcheck/decide.hpp"

#include "warpcheck/diagram.hpp"
#include "warpcheck/encode.hpp"
#include "warpcheck/sample.hpp"
#include "warpcheck/smtlib.hpp"
#include "warpcheck/solver.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

namespace warpcheck {

namespace {

std::string join_text(const JoinGoal& goal) {
  std::string s;
  for (size_t i = 0; i < goal.size(); ++i) {
    if (i) s += " \\/ ";
    s += print_term(goal[i].term());
  }
  return s;
}

std::string first_line(const std::string& s) {
  auto p = s.find('\n');
  return p == std::string::npos ? s : s.substr(0, p);
}

std::string tail_str(const WarpTail& t) {
  if (t.kind == WarpTail::Kind::Constant) return "const(" + t.c.str() + ")";
  return "linear(" + std::to_string(t.k) + ")";
}

} // namespace

DecideResult decide(const Equation& eq, const ConstantRegistry& registry,
                    const DecideOptions& opts) {
  DecideResult result;
  result.goals = normalize_equation(eq, opts.simplify);
  const std::vector<std::string> var_names = equation_vars(eq);
  const WarpAssignment const_vals = registry.values();
  std::ostream* tr = opts.trace;

  const size_t n_goals = result.goals.goals.size();
  for (size_t j = 0; j < n_goals; ++j) {
    const JoinGoal& goal = result.goals.goals[j];
    const std::string goal_text = join_text(goal);

    SampleTable table;
    SampleId kappa = table.time_var("k");
    std::vector<SampleId> seeds;
    for (const BasicTerm& t : goal)
      seeds.push_back(table.app(table.intern_term(t.term()), kappa));
    std::vector<SampleId> delta = saturate(table, seeds);
    ConstraintSet cs = generate(table, delta, goal, kappa, registry);
    EncodedQuery q = encode_query(cs);

    if (tr) {
      *tr << "goal " << (j + 1) << "/" << n_goals << ": 1 <= " << goal_text << "\n";
      *tr << "saturated samples (" << delta.size() << "):\n"
          << print_saturation_tree(table, seeds);
      *tr << print_constraints(cs, table);
      *tr << "encoding: " << q.problem.num_vars << " integer variables, "
          << q.problem.conjuncts.size() << " conjuncts\n";
    }

    if (!opts.emit_smtlib.empty()) {
      std::string path = opts.emit_smtlib;
      if (n_goals > 1) path += "." + std::to_string(j + 1);
      std::ofstream out(path);
      if (!out) throw std::runtime_error("cannot write " + path);
      out << to_smtlib(q.problem);
    }

    bool sat = false;
    std::vector<int64_t> model;
    if (opts.backend == Backend::Internal) {
      SolveResult sr = solve_idl(q.problem, opts.budget);
      if (sr.status == SolveStatus::BudgetExceeded)
        throw ResourceError("decision budget exhausted on goal " +
                            std::to_string(j + 1) + " after " +
                            std::to_string(sr.decisions) + " decisions");
      sat = sr.status == SolveStatus::Sat;
      model = std::move(sr.model);
    } else {
      auto cmd = smt_solver_command(opts.smt_solver);
      if (!cmd)
        throw ResourceError(
            "smtlib backend selected but no solver is configured "
            "(use --smt-solver or WARPCHECK_SMT_SOLVER)");
      SmtResult sr = run_smt_solver(*cmd, q.problem, opts.smt_timeout);
      if (sr.status == SmtResult::Status::Unknown)
        throw ResourceError("external solver gave no verdict on goal " +
                            std::to_string(j + 1));
      if (sr.status == SmtResult::Status::Error)
        throw ResourceError("external solver failed: " + first_line(sr.detail));
      sat = sr.status == SmtResult::Status::Sat;
      model = std::move(sr.model);
    }

    if (!sat) {
      if (tr) *tr << "result: unsatisfiable, the goal holds everywhere\n\n";
      continue;
    }

    std::map<SampleId, OmegaPlus> delta_val;
    for (const auto& [s, v] : q.vars.sample_var) delta_val[s] = decode_value(model.at(v));
    std::map<int, OmegaPlus> aux_val;
    for (const auto& [a, v] : q.vars.aux_var) aux_val[a] = decode_value(model.at(v));
    if (!satisfies(delta_val, aux_val, cs))
      throw std::logic_error("decide: solver model violates the constraints");

    Counterexample ce;
    ce.goal_index = static_cast<int>(j);
    ce.goal_text = goal_text;
    ce.witness = delta_val.at(kappa);
    for (const std::string& v : var_names)
      ce.vars.emplace(v, reconstruct(table, delta, delta_val, v));
    for (SampleId s : delta) ce.diagram.emplace_back(table.print(s), delta_val.at(s));
    if (!verify_counterexample(goal, ce.vars, const_vals, ce.witness))
      throw std::logic_error("decide: reconstructed warps fail to refute the goal");

    if (tr) {
      *tr << "result: satisfiable, failing diagram:\n";
      for (const auto& [s, v] : ce.diagram) *tr << "  " << s << " = " << v.str() << "\n";
      *tr << "witness: k = " << ce.witness.str() << "\n";
      for (const auto& [name, w] : ce.vars)
        *tr << name << " = " << print_warp(w) << "\n";
      *tr << "\n";
    }

    result.counterexamples.push_back(std::move(ce));
    if (!opts.all_goals) break;
  }

  result.valid = result.counterexamples.empty();
  return result;
}

namespace {

nlohmann::json omega_json(OmegaPlus v) {
  if (v.is_omega()) return "w";
  return v.value();
}

nlohmann::json counterexample_json(const Counterexample& ce) {
  nlohmann::json c;
  c["goal"] = "1 <= " + ce.goal_text;
  c["witness_point"] = omega_json(ce.witness);
  nlohmann::json warps = nlohmann::json::object();
  for (const auto& [name, w] : ce.vars) {
    nlohmann::json wj;
    wj["prefix"] = nlohmann::json::array();
    for (OmegaPlus p : w.prefix()) wj["prefix"].push_back(omega_json(p));
    wj["tail"] = tail_str(w.tail());
    warps[name] = std::move(wj);
  }
  c["warps"] = std::move(warps);
  nlohmann::json dia = nlohmann::json::array();
  for (const auto& [s, v] : ce.diagram)
    dia.push_back({{"sample", s}, {"value", omega_json(v)}});
  c["diagram"] = std::move(dia);
  return c;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{
      "Decides equations between time warps: join-preserving maps on the "
      "naturals extended with w. Invalid equations come with a concrete, "
      "re-checked counterexample."};
  std::string equation;
  app.add_option("equation", equation,
                 "Equation such as \"x*(y /\\ z) = x*y /\\ x*z\"; - or absent reads stdin");
  bool explain = false, no_simplify = false, json_out = false, all_goals = false;
  std::string backend = "internal", emit, solver;
  int timeout = 0;
  int64_t budget = 1'000'000;
  app.add_flag("--explain", explain, "Narrate samples, constraints and the verdict");
  app.add_flag("--no-simplify", no_simplify, "Keep goals as distributed, without rewriting");
  app.add_flag("--json", json_out, "Machine-readable verdict on stdout");
  app.add_flag("--all-goals", all_goals, "Report every failing goal instead of the first");
  app.add_option("--backend", backend, "Decision backend")
      ->check(CLI::IsMember({"internal", "smtlib"}));
  app.add_option("--emit-smtlib", emit, "Also write the QF_IDL script(s) to this path");
  app.add_option("--smt-solver", solver, "External solver command for --backend smtlib");
  app.add_option("--smt-timeout", timeout, "Seconds before an external solver run is cut off");
  app.add_option("--budget", budget, "Internal solver decision budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 2;
  }

  if (equation.empty() || equation == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    equation = ss.str();
  }

  ConstantRegistry registry = builtin_constants();
  Equation eq;
  try {
    eq = parse_equation(equation, registry.names());
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  }

  DecideOptions opts;
  opts.simplify = !no_simplify;
  opts.backend = backend == "smtlib" ? Backend::Smtlib : Backend::Internal;
  opts.smt_solver = solver;
  opts.smt_timeout = timeout;
  opts.budget = budget;
  opts.all_goals = all_goals;
  opts.emit_smtlib = emit;
  if (explain) opts.trace = &out;

  try {
    DecideResult res = decide(eq, registry, opts);
    if (json_out) {
      nlohmann::json j;
      j["verdict"] = res.valid ? "VALID" : "INVALID";
      if (!res.valid) {
        j.update(counterexample_json(res.counterexamples.front()));
        if (all_goals) {
          nlohmann::json arr = nlohmann::json::array();
          for (const auto& ce : res.counterexamples) {
            nlohmann::json c = counterexample_json(ce);
            c["goal_index"] = ce.goal_index + 1;
            arr.push_back(std::move(c));
          }
          j["counterexamples"] = std::move(arr);
        }
      }
      out << j.dump(2) << "\n";
    } else {
      out << (res.valid ? "VALID" : "INVALID") << "\n";
      for (const auto& ce : res.counterexamples) {
        out << "goal " << (ce.goal_index + 1) << ": 1 <= " << ce.goal_text << "\n";
        out << "witness: k = " << ce.witness.str() << "\n";
        for (const auto& [name, w] : ce.vars)
          out << name << " = " << print_warp(w) << "\n";
      }
    }
    return res.valid ? 0 : 1;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 4;
  }
}

} // namespace warpcheck
