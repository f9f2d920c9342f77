#include "warpcheck/sample.hpp"

#include <deque>
#include <set>

namespace warpcheck {

SampleId SampleTable::intern(SampleKind kind, std::string name, TermId term, SampleId child) {
  Key key{kind, name, term, child};
  auto it = index_.find(key);
  if (it != index_.end()) return it->second;
  SampleId id = static_cast<SampleId>(nodes_.size());
  nodes_.push_back({kind, std::move(name), term, child});
  index_.emplace(std::move(key), id);
  return id;
}

SampleId SampleTable::time_var(const std::string& name) {
  return intern(SampleKind::TimeVar, name, -1, -1);
}

SampleId SampleTable::app(TermId term, SampleId arg) {
  return intern(SampleKind::App, "", term, arg);
}

SampleId SampleTable::suc(SampleId arg) {
  return intern(SampleKind::Suc, "", -1, arg);
}

SampleId SampleTable::last(TermId term) {
  return intern(SampleKind::Last, "", term, -1);
}

TermId SampleTable::intern_term(const TermPtr& t) {
  if (!is_basic_term(t))
    throw std::logic_error("SampleTable: samples take basic terms only");
  std::string key = print_term(t);
  auto it = term_index_.find(key);
  if (it != term_index_.end()) return it->second;
  TermEntry entry;
  entry.t = t;
  if (t->kind == TermKind::Prod) {
    entry.sub1 = intern_term(t->left);
    entry.sub2 = intern_term(t->right);
  } else if (t->kind == TermKind::Inv) {
    entry.sub1 = intern_term(t->left);
  }
  TermId id = static_cast<TermId>(terms_.size());
  terms_.push_back(std::move(entry));
  term_index_.emplace(std::move(key), id);
  return id;
}

std::optional<SampleId> SampleTable::find_app(TermId term, SampleId arg) const {
  auto it = index_.find(Key{SampleKind::App, "", term, arg});
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<SampleId> SampleTable::find_suc(SampleId arg) const {
  auto it = index_.find(Key{SampleKind::Suc, "", -1, arg});
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<SampleId> SampleTable::find_last(TermId term) const {
  auto it = index_.find(Key{SampleKind::Last, "", term, -1});
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string SampleTable::print(SampleId id) const {
  const SampleNode& n = node(id);
  switch (n.kind) {
    case SampleKind::TimeVar:
      return n.name;
    case SampleKind::App: {
      const TermPtr& t = term(n.term);
      std::string ts = print_term(t, /*compact=*/true);
      if (t->kind == TermKind::Prod) ts = "(" + ts + ")";
      return ts + "[" + print(n.child) + "]";
    }
    case SampleKind::Suc:
      return "suc(" + print(n.child) + ")";
    case SampleKind::Last:
      return "last(" + print_term(term(n.term), /*compact=*/true) + ")";
  }
  return "?";
}

std::vector<std::pair<SatRule, SampleId>> successors_with_rules(SampleTable& table, SampleId id) {
  std::vector<std::pair<SatRule, SampleId>> out;
  const SampleNode n = table.node(id); // copy: interning may reallocate
  switch (n.kind) {
    case SampleKind::TimeVar:
    case SampleKind::Last:
      break;
    case SampleKind::Suc:
      out.emplace_back(SatRule::SucChild, n.child);
      break;
    case SampleKind::App: {
      out.emplace_back(SatRule::AppChild, n.child);
      out.emplace_back(SatRule::AppLast, table.app(n.term, table.last(n.term)));
      const TermPtr& t = table.term(n.term);
      if (t->kind == TermKind::Prod) {
        TermId lt = table.term_sub1(n.term);
        TermId rt = table.term_sub2(n.term);
        out.emplace_back(SatRule::ProdSplit, table.app(lt, table.app(rt, n.child)));
      } else if (t->kind == TermKind::Inv) {
        TermId sub = table.term_sub1(n.term);
        out.emplace_back(SatRule::InvWrap, table.app(sub, id));
        out.emplace_back(SatRule::InvSuc, table.app(sub, table.suc(id)));
      }
      break;
    }
  }
  return out;
}

std::vector<SampleId> successors(SampleTable& table, SampleId id) {
  std::vector<SampleId> out;
  std::set<SampleId> seen;
  for (const auto& [rule, s] : successors_with_rules(table, id))
    if (seen.insert(s).second) out.push_back(s);
  return out;
}

std::vector<SampleId> saturate(SampleTable& table, const std::vector<SampleId>& seeds) {
  std::set<SampleId> visited;
  std::deque<SampleId> queue;
  for (SampleId s : seeds)
    if (visited.insert(s).second) queue.push_back(s);
  while (!queue.empty()) {
    SampleId cur = queue.front();
    queue.pop_front();
    for (SampleId next : successors(table, cur))
      if (visited.insert(next).second) queue.push_back(next);
  }
  return {visited.begin(), visited.end()};
}

int term_symbol_count(const TermPtr& t) {
  switch (t->kind) {
    case TermKind::Var:
    case TermKind::Unit:
    case TermKind::Const:
      return 1;
    case TermKind::Inv:
      return 1 + term_symbol_count(t->left);
    case TermKind::Prod:
      return 1 + term_symbol_count(t->left) + term_symbol_count(t->right);
    default:
      throw std::logic_error("term_symbol_count: non-basic term");
  }
}

int sample_measure(const SampleTable& table, SampleId id) {
  const SampleNode& n = table.node(id);
  switch (n.kind) {
    case SampleKind::TimeVar:
    case SampleKind::Last:
      return 0;
    case SampleKind::Suc:
      return 1 + sample_measure(table, n.child);
    case SampleKind::App:
      return term_symbol_count(table.term(n.term)) + sample_measure(table, n.child);
  }
  return 0;
}

} // namespace warpcheck
