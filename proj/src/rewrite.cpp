// Copyright 2026 The LawSeeker Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lawseeker/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace lawseeker {

namespace {

bool vars_covered(const Term& to, const Term& from, const std::optional<Guard>& guard) {
  for (const Variable& v : to.vars()) {
    if (from.contains_var(v)) continue;
    if (guard && std::find(guard->params.begin(), guard->params.end(), v) != guard->params.end()) {
      continue;
    }
    return false;
  }
  return true;
}

}  // namespace

std::optional<Rule> orient(const Term& a, const Term& b) {
  if (a == b) return std::nullopt;
  const bool a_big = compare_terms(a, b) > 0;
  const Term& big = a_big ? a : b;
  const Term& small = a_big ? b : a;
  if (big.is_var() || big.size() <= small.size()) return std::nullopt;
  for (const Variable& v : small.vars()) {
    if (big.occurrences(v) < small.occurrences(v)) return std::nullopt;
  }
  return Rule{big, small};
}

EquationStore::AddResult EquationStore::add(const Term& a, const Term& b,
                                            std::optional<Guard> guard) {
  std::optional<GuardContext> ctx;
  if (guard) ctx = GuardContext{guard->predicate, guard->params};
  Term na = normal_form(a, ctx ? &*ctx : nullptr);
  Term nb = normal_form(b, ctx ? &*ctx : nullptr);
  if (na == nb) return AddResult::Redundant;
  if (na.is_var() && nb.is_var()) return AddResult::Degenerate;

  const auto id = static_cast<std::uint32_t>(entries_.size());
  if (auto rule = orient(na, nb)) {
    entries_.push_back(Entry{rule->lhs, rule->rhs, true, std::move(guard)});
    index(id, false);
    return AddResult::Oriented;
  }
  const bool a_big = compare_terms(na, nb) > 0;
  entries_.push_back(Entry{a_big ? na : nb, a_big ? nb : na, false, std::move(guard)});
  const Entry& e = entries_.back();
  if (!e.lhs.is_var() && vars_covered(e.rhs, e.lhs, e.guard)) index(id, false);
  if (!e.rhs.is_var() && vars_covered(e.lhs, e.rhs, e.guard)) index(id, true);
  return AddResult::Unoriented;
}

void EquationStore::index(std::uint32_t entry, bool reversed) {
  const Entry& e = entries_[entry];
  const Term& from = reversed ? e.rhs : e.lhs;
  const std::uint32_t root = from.symbol().index;
  if (by_root_.size() <= root) by_root_.resize(root + 1);
  by_root_[root].push_back(Direction{entry, reversed});
}

std::optional<Term> EquationStore::step_at_root(const Term& t, const GuardContext* context) const {
  if (t.is_var() || t.symbol().index >= by_root_.size()) return std::nullopt;
  for (const Direction& d : by_root_[t.symbol().index]) {
    const Entry& e = entries_[d.entry];
    Substitution seed;
    if (!guard_seed(e, context, seed)) continue;
    const Term& from = d.reversed ? e.rhs : e.lhs;
    const Term& to = d.reversed ? e.lhs : e.rhs;
    if (from.size() > t.size()) continue;
    auto sigma = match_pattern(from, t, std::move(seed));
    if (!sigma) continue;
    Term result = apply_substitution(*sigma, to);
    if (!e.oriented) {
      if (compare_terms(t, result) <= 0) continue;
      // Keeps every step decreasing in any surrounding context as well.
      bool fresh_var = std::any_of(result.vars().begin(), result.vars().end(),
                                   [&](const Variable& v) { return !t.contains_var(v); });
      if (fresh_var) continue;
    }
    return result;
  }
  return std::nullopt;
}

bool EquationStore::guard_seed(const Entry& e, const GuardContext* context, Substitution& seed) const {
  if (!e.guard) return true;
  if (!context || context->predicate != e.guard->predicate ||
      context->args.size() != e.guard->params.size()) {
    return false;
  }
  for (std::size_t i = 0; i < e.guard->params.size(); ++i) {
    if (!seed.bind(e.guard->params[i], Term::variable(context->args[i]))) return false;
  }
  return true;
}

void EquationStore::neighbours(const Term& t, const GuardContext* context, std::size_t max_size,
                               std::vector<Term>& out) const {
  if (t.is_var()) return;
  if (t.symbol().index < by_root_.size()) {
    for (const Direction& d : by_root_[t.symbol().index]) {
      const Entry& e = entries_[d.entry];
      Substitution seed;
      if (!guard_seed(e, context, seed)) continue;
      const Term& from = d.reversed ? e.rhs : e.lhs;
      if (from.size() > t.size()) continue;
      auto sigma = match_pattern(from, t, std::move(seed));
      if (!sigma) continue;
      Term result = apply_substitution(*sigma, d.reversed ? e.lhs : e.rhs);
      if (result.size() <= max_size) out.push_back(std::move(result));
    }
  }
  const auto& args = t.args();
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::size_t rest = t.size() - args[i].size();
    if (rest >= max_size) continue;
    std::vector<Term> inner;
    neighbours(args[i], context, max_size - rest, inner);
    for (Term& n : inner) {
      std::vector<Term> copy(args.begin(), args.end());
      copy[i] = std::move(n);
      out.push_back(t.with_args(std::move(copy)));
    }
  }
}

bool EquationStore::is_instance(const Term& a, const Term& b, const GuardContext* context) const {
  for (const Entry& e : entries_) {
    for (int flip = 0; flip < 2; ++flip) {
      Substitution seed;
      if (!guard_seed(e, context, seed)) break;
      auto sigma = match_pattern(flip ? e.rhs : e.lhs, a, std::move(seed));
      if (sigma && match_pattern(flip ? e.lhs : e.rhs, b, *sigma)) return true;
    }
  }
  // Peel off a context the two sides share.
  if (a.is_var() || b.is_var() || a.symbol() != b.symbol()) return false;
  std::optional<std::size_t> differ;
  for (std::size_t i = 0; i < a.args().size(); ++i) {
    if (a.args()[i] == b.args()[i]) continue;
    if (differ) return false;
    differ = i;
  }
  return differ && is_instance(a.args()[*differ], b.args()[*differ], context);
}

bool EquationStore::is_derivable(const Term& a, const Term& b, std::size_t max_size, std::size_t budget,
                                 const GuardContext* context) const {
  if (is_instance(a, b, context)) return true;
  const Term target = normal_form(b, context);
  std::unordered_set<Term, TermHash> seen{a};
  std::deque<Term> queue{a};
  std::vector<Term> next;
  while (!queue.empty()) {
    Term t = std::move(queue.front());
    queue.pop_front();
    if (normal_form(t, context) == target) return true;
    next.clear();
    neighbours(t, context, max_size, next);
    for (Term& n : next) {
      if (seen.size() >= budget) break;
      if (seen.insert(n).second) queue.push_back(std::move(n));
    }
  }
  return false;
}

Term EquationStore::normal_form(const Term& t, const GuardContext* context) const {
  if (entries_.empty() || t.is_var()) return t;
  Term current = t;
  if (!t.args().empty()) {
    std::vector<Term> args;
    args.reserve(t.args().size());
    bool changed = false;
    for (const Term& a : t.args()) {
      args.push_back(normal_form(a, context));
      changed = changed || !(args.back() == a);
    }
    if (changed) current = t.with_args(std::move(args));
  }
  if (auto next = step_at_root(current, context)) return normal_form(*next, context);
  return current;
}

bool EquationStore::is_reducible(const Term& t, const GuardContext* context) const {
  if (entries_.empty() || t.is_var()) return false;
  for (const Term& a : t.args()) {
    if (is_reducible(a, context)) return true;
  }
  return step_at_root(t, context).has_value();
}

std::vector<Rule> EquationStore::oriented() const {
  std::vector<Rule> out;
  for (const Entry& e : entries_) {
    if (e.oriented && !e.guard) out.push_back(Rule{e.lhs, e.rhs});
  }
  return out;
}

std::vector<std::pair<Term, Term>> EquationStore::unoriented() const {
  std::vector<std::pair<Term, Term>> out;
  for (const Entry& e : entries_) {
    if (!e.oriented && !e.guard) out.emplace_back(e.lhs, e.rhs);
  }
  return out;
}

Term normal_form(const Term& t, const EquationStore& store) { return store.normal_form(t); }

bool is_redundant(const Term& lhs, const Term& rhs, const EquationStore& store) {
  return store.is_redundant(lhs, rhs);
}

}  // namespace lawseeker
