#pragma once

#include "warpcheck/term.hpp"

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace warpcheck {

/* Samples describe observations of a term at an instant: a time variable,
   an application t[a], a successor suc(a), or the stabilisation point
   last(t). Nodes are hash-consed per table, so ids are identities. */

using SampleId = int;
using TermId = int;

enum class SampleKind { TimeVar, App, Suc, Last };

struct SampleNode {
  SampleKind kind;
  std::string name;   // TimeVar
  TermId term = -1;   // App, Last
  SampleId child = -1; // App, Suc
};

/* Rules producing the immediate successors of a sample. */
enum class SatRule { AppChild, AppLast, ProdSplit, InvWrap, InvSuc, SucChild };

class SampleTable {
public:
  SampleId time_var(const std::string& name);
  SampleId app(TermId term, SampleId arg);
  SampleId suc(SampleId arg);
  SampleId last(TermId term);

  TermId intern_term(const TermPtr& t);

  const SampleNode& node(SampleId id) const { return nodes_.at(id); }
  const TermPtr& term(TermId id) const { return terms_.at(id).t; }
  TermId term_sub1(TermId id) const { return terms_.at(id).sub1; } // Prod left, Inv operand
  TermId term_sub2(TermId id) const { return terms_.at(id).sub2; } // Prod right

  std::optional<SampleId> find_app(TermId term, SampleId arg) const;
  std::optional<SampleId> find_suc(SampleId arg) const;
  std::optional<SampleId> find_last(TermId term) const;

  size_t size() const { return nodes_.size(); }

  std::string print(SampleId id) const;

private:
  struct TermEntry {
    TermPtr t;
    TermId sub1 = -1, sub2 = -1;
  };
  using Key = std::tuple<SampleKind, std::string, TermId, SampleId>;

  SampleId intern(SampleKind kind, std::string name, TermId term, SampleId child);

  std::vector<SampleNode> nodes_;
  std::map<Key, SampleId> index_;
  std::vector<TermEntry> terms_;
  std::map<std::string, TermId> term_index_;
};

/* Immediate successors under the derivation rules, deduplicated, in rule
   order. New samples are interned on demand. */
std::vector<SampleId> successors(SampleTable& table, SampleId id);
std::vector<std::pair<SatRule, SampleId>> successors_with_rules(SampleTable& table, SampleId id);

/* Least superset of the seeds closed under successors. FIFO worklist;
   result sorted by id, which is creation order. */
std::vector<SampleId> saturate(SampleTable& table, const std::vector<SampleId>& seeds);

/* Occurrences of variables, constants, 1, prime, star and suc outside any
   last(...) scope; the saturation termination measure. */
int sample_measure(const SampleTable& table, SampleId id);
int term_symbol_count(const TermPtr& t);

} // namespace warpcheck
