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

#include "lawseeker/term.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace lawseeker {

Term Term::variable(Variable v) {
  auto node = std::make_shared<Node>();
  node->is_var = true;
  node->var = v;
  node->sort = v.sort;
  node->size = 1;
  node->vars.push_back(v);
  node->hash = hash_mix(hash_mix(0x5eedULL, v.sort.index), v.index);
  return Term(std::move(node));
}

Term Term::make_app(SymbolId symbol, SortId sort, std::vector<Term> args) {
  auto node = std::make_shared<Node>();
  node->symbol = symbol;
  node->sort = sort;
  std::uint64_t h = hash_mix(0xa99ULL, symbol.index);
  std::size_t size = 1;
  for (const Term& a : args) {
    size += a.size();
    h = hash_mix(h, a.hash());
  }
  if (args.size() == 1) {
    node->vars = args[0].node_->vars;
  } else {
    for (const Term& a : args) {
      if (a.node_->vars.empty()) continue;
      std::vector<Variable> merged;
      merged.reserve(node->vars.size() + a.node_->vars.size());
      std::set_union(node->vars.begin(), node->vars.end(), a.node_->vars.begin(),
                     a.node_->vars.end(), std::back_inserter(merged));
      node->vars = std::move(merged);
    }
  }
  node->args = std::move(args);
  node->size = size;
  node->hash = h;
  return Term(std::move(node));
}

Term Term::apply(const Signature& sig, SymbolId symbol, std::vector<Term> args) {
  const Symbol& sym = sig.symbol(symbol);
  if (args.size() != sym.arity()) {
    throw std::invalid_argument("symbol '" + sym.name + "' expects " + std::to_string(sym.arity()) +
                                " arguments, got " + std::to_string(args.size()));
  }
  return make_app(symbol, sym.result, std::move(args));
}

Term Term::with_args(std::vector<Term> args) const {
  if (args.size() != node_->args.size()) {
    throw std::invalid_argument("with_args: argument count changed");
  }
  return make_app(node_->symbol, node_->sort, std::move(args));
}

std::size_t Term::occurrences(Variable v) const {
  if (node_->is_var) return node_->var == v ? 1 : 0;
  if (!contains_var(v)) return 0;
  std::size_t n = 0;
  for (const Term& a : node_->args) n += a.occurrences(v);
  return n;
}

bool Term::contains_var(Variable v) const {
  return std::binary_search(node_->vars.begin(), node_->vars.end(), v);
}

bool Term::contains_symbol(SymbolId s) const {
  if (node_->is_var) return false;
  if (node_->symbol == s) return true;
  return std::any_of(node_->args.begin(), node_->args.end(),
                     [&](const Term& a) { return a.contains_symbol(s); });
}

void Term::for_each_subterm(const std::function<void(const Term&)>& f) const {
  f(*this);
  for (const Term& a : node_->args) a.for_each_subterm(f);
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  const Term::Node& x = *a.node_;
  const Term::Node& y = *b.node_;
  if (x.hash != y.hash || x.size != y.size || x.is_var != y.is_var) return false;
  if (x.is_var) return x.var == y.var;
  return x.symbol == y.symbol && x.args == y.args;
}

const Term* Substitution::find(Variable v) const {
  for (const auto& [var, term] : bindings_) {
    if (var == v) return &term;
  }
  return nullptr;
}

bool Substitution::bind(Variable v, const Term& t) {
  if (const Term* existing = find(v)) return *existing == t;
  bindings_.emplace_back(v, t);
  return true;
}

std::size_t term_size(const Term& t) { return t.size(); }

namespace {

void check_sorts(const Term& t, const Signature& sig, std::vector<std::size_t>& path) {
  if (t.is_var()) return;
  const Symbol& sym = sig.symbol(t.symbol());
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    const Term& a = t.args()[i];
    path.push_back(i + 1);
    if (a.sort() != sym.arg_sorts[i]) {
      std::ostringstream msg;
      msg << "argument " << (i + 1) << " of '" << sym.name << "' has sort "
          << sig.sort(a.sort()).name << ", expected " << sig.sort(sym.arg_sorts[i]).name;
      throw SortError(path, sym.arg_sorts[i], a.sort(), msg.str());
    }
    check_sorts(a, sig, path);
    path.pop_back();
  }
}

bool match_into(const Term& pattern, const Term& subject, Substitution& s) {
  if (pattern.is_var()) {
    if (pattern.sort() != subject.sort()) return false;
    return s.bind(pattern.var(), subject);
  }
  if (subject.is_var() || pattern.symbol() != subject.symbol()) return false;
  if (pattern.size() > subject.size()) return false;
  auto pa = pattern.args();
  auto sa = subject.args();
  for (std::size_t i = 0; i < pa.size(); ++i) {
    if (!match_into(pa[i], sa[i], s)) return false;
  }
  return true;
}

void collect_first_occurrences(const Term& t, std::vector<Variable>& order) {
  if (t.is_var()) {
    if (std::find(order.begin(), order.end(), t.var()) == order.end()) order.push_back(t.var());
    return;
  }
  for (const Term& a : t.args()) collect_first_occurrences(a, order);
}

bool needs_parens(const Term& t, const Signature& sig) {
  if (t.is_var() || t.args().empty()) return false;
  const Symbol& sym = sig.symbol(t.symbol());
  if (sym.invisible && t.args().size() == 1) return needs_parens(t.args()[0], sig);
  return true;
}

void show_into(const Term& t, const Signature& sig, std::string& out);

void show_arg(const Term& t, const Signature& sig, std::string& out) {
  std::string inner;
  show_into(t, sig, inner);
  bool negative_literal = !inner.empty() && inner[0] == '-' && t.args().empty() && !t.is_var();
  if (needs_parens(t, sig) || negative_literal) {
    out += '(';
    out += inner;
    out += ')';
  } else {
    out += inner;
  }
}

void show_into(const Term& t, const Signature& sig, std::string& out) {
  if (t.is_var()) {
    out += variable_name(t.var(), sig);
    return;
  }
  const Symbol& sym = sig.symbol(t.symbol());
  auto args = t.args();
  if (sym.invisible) {
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (i > 0) out += ' ';
      if (args.size() == 1) {
        show_into(args[i], sig, out);
      } else {
        show_arg(args[i], sig, out);
      }
    }
    return;
  }
  if (args.size() == 2 && is_operator_name(sym.name)) {
    show_arg(args[0], sig, out);
    out += sym.name;
    show_arg(args[1], sig, out);
    return;
  }
  out += sym.name;
  for (const Term& a : args) {
    out += ' ';
    show_arg(a, sig, out);
  }
}

std::string machine_head(SymbolId id, const Signature& sig) {
  const Symbol& sym = sig.symbol(id);
  bool plain = !sym.name.empty() && sig.find_symbol(sym.name).has_value() && sym.name[0] != '@';
  for (char c : sym.name) {
    if (c == '(' || c == ')' || c == '"' || c == ';' || std::isspace(static_cast<unsigned char>(c))) {
      plain = false;
    }
  }
  // A symbol spelled like a variable would read back as the variable.
  for (const SortInfo& s : sig.sorts()) {
    if (std::find(s.var_names.begin(), s.var_names.end(), sym.name) != s.var_names.end()) {
      plain = false;
    }
  }
  return plain ? sym.name : "@" + std::to_string(id.index);
}

void sexpr_into(const Term& t, const Signature& sig, std::string& out) {
  if (t.is_var()) {
    out += variable_name(t.var(), sig);
    return;
  }
  if (t.args().empty()) {
    out += machine_head(t.symbol(), sig);
    return;
  }
  out += '(';
  out += machine_head(t.symbol(), sig);
  for (const Term& a : t.args()) {
    out += ' ';
    sexpr_into(a, sig, out);
  }
  out += ')';
}

}  // namespace

SortId infer_sort(const Term& t, const Signature& sig) {
  std::vector<std::size_t> path;
  check_sorts(t, sig, path);
  return t.sort();
}

std::optional<Substitution> match_pattern(const Term& pattern, const Term& subject,
                                          Substitution seed) {
  if (!match_into(pattern, subject, seed)) return std::nullopt;
  return seed;
}

Term apply_substitution(const Substitution& s, const Term& t) {
  if (s.empty()) return t;
  if (t.is_var()) {
    const Term* bound = s.find(t.var());
    return bound ? *bound : t;
  }
  if (t.args().empty()) return t;
  bool touched = false;
  for (const auto& binding : s.bindings()) {
    if (t.contains_var(binding.first)) {
      touched = true;
      break;
    }
  }
  if (!touched) return t;
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const Term& a : t.args()) args.push_back(apply_substitution(s, a));
  return t.with_args(std::move(args));
}

std::strong_ordering compare_terms(const Term& t, const Term& u) {
  if (t == u) return std::strong_ordering::equal;
  if (auto c = t.size() <=> u.size(); c != 0) return c;
  if (auto c = t.distinct_vars() <=> u.distinct_vars(); c != 0) return c;
  if (t.is_var() != u.is_var()) {
    return t.is_var() ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (t.is_var()) return t.var() <=> u.var();
  if (auto c = t.symbol() <=> u.symbol(); c != 0) return c;
  auto ta = t.args();
  auto ua = u.args();
  for (std::size_t i = 0; i < ta.size(); ++i) {
    if (auto c = compare_terms(ta[i], ua[i]); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Substitution canonical_renaming(std::span<const Term> terms) {
  std::vector<Variable> order;
  for (const Term& t : terms) collect_first_occurrences(t, order);
  Substitution s;
  std::vector<std::pair<SortId, std::uint32_t>> next;
  for (const Variable& v : order) {
    auto it = std::find_if(next.begin(), next.end(), [&](const auto& p) { return p.first == v.sort; });
    if (it == next.end()) {
      next.emplace_back(v.sort, 0);
      it = std::prev(next.end());
    }
    s.bind(v, Term::variable(v.sort, it->second++));
  }
  return s;
}

std::string variable_name(const Variable& v, const Signature& sig) {
  const SortInfo& info = sig.sort(v.sort);
  if (v.index < info.var_names.size()) return info.var_names[v.index];
  std::string base = info.var_names.empty() ? std::string(1, 'v') : info.var_names.front();
  return base + std::to_string(v.index + 1);
}

std::string show_term(const Term& t, const Signature& sig) {
  std::string out;
  show_into(t, sig, out);
  return out;
}

std::string to_sexpr(const Term& t, const Signature& sig) {
  std::string out;
  sexpr_into(t, sig, out);
  return out;
}

bool is_operator_name(const std::string& name) {
  if (name.empty()) return false;
  static const std::string kOperatorChars = "!#$%&*+./<=>?\\^|-~:";
  return std::all_of(name.begin(), name.end(),
                     [](char c) { return kOperatorChars.find(c) != std::string::npos; });
}

}  // namespace lawseeker
