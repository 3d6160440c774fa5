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

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lawseeker/signature.hpp"

namespace lawseeker {

struct Variable {
  SortId sort;
  std::uint32_t index = 0;
  friend auto operator<=>(const Variable&, const Variable&) = default;
};

/// Immutable first-order term over a signature. Copies share structure.
class Term {
 public:
  static Term variable(Variable v);
  static Term variable(SortId sort, std::uint32_t index) { return variable(Variable{sort, index}); }

  /// Application of `symbol`; throws std::invalid_argument on an arity mismatch.
  /// Argument sorts are not checked here (see infer_sort).
  static Term apply(const Signature& sig, SymbolId symbol, std::vector<Term> args);

  /// Same root symbol and sort with replaced arguments (same count).
  Term with_args(std::vector<Term> args) const;

  bool is_var() const { return node_->is_var; }
  Variable var() const { return node_->var; }
  SymbolId symbol() const { return node_->symbol; }
  std::span<const Term> args() const { return node_->args; }
  const Term& arg(std::size_t i) const { return node_->args.at(i); }
  SortId sort() const { return node_->sort; }

  /// Number of symbol and variable occurrences.
  std::size_t size() const { return node_->size; }
  /// Distinct variables, sorted.
  std::span<const Variable> vars() const { return node_->vars; }
  std::size_t distinct_vars() const { return node_->vars.size(); }
  std::uint64_t hash() const { return node_->hash; }

  /// Occurrence count of `v`.
  std::size_t occurrences(Variable v) const;
  bool contains_var(Variable v) const;
  bool contains_symbol(SymbolId s) const;

  /// Calls `f` on every subterm in pre-order (the term itself first).
  void for_each_subterm(const std::function<void(const Term&)>& f) const;

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node {
    bool is_var = false;
    Variable var;
    SymbolId symbol;
    SortId sort;
    std::vector<Term> args;
    std::size_t size = 1;
    std::vector<Variable> vars;
    std::uint64_t hash = 0;
  };

  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Term make_app(SymbolId symbol, SortId sort, std::vector<Term> args);

  std::shared_ptr<const Node> node_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const { return static_cast<std::size_t>(t.hash()); }
};

/// Sort-preserving partial map from variables to terms.
class Substitution {
 public:
  Substitution() = default;

  const Term* find(Variable v) const;
  /// Binds `v`, or checks consistency with an existing binding.
  bool bind(Variable v, const Term& t);
  std::size_t size() const { return bindings_.size(); }
  bool empty() const { return bindings_.empty(); }
  const std::vector<std::pair<Variable, Term>>& bindings() const { return bindings_; }

 private:
  std::vector<std::pair<Variable, Term>> bindings_;
};

class SortError : public std::runtime_error {
 public:
  SortError(std::vector<std::size_t> path, SortId expected, SortId found, const std::string& message)
      : std::runtime_error(message), path(std::move(path)), expected(expected), found(found) {}

  /// 1-based argument positions from the root to the offending subterm.
  std::vector<std::size_t> path;
  SortId expected;
  SortId found;
};

std::size_t term_size(const Term& t);

/// Sort of `t`; throws SortError at the first ill-sorted argument (pre-order).
SortId infer_sort(const Term& t, const Signature& sig);

/// Substitution s with s(pattern) == subject, binding exactly the pattern's
/// variables. Bindings already in `seed` are respected.
std::optional<Substitution> match_pattern(const Term& pattern, const Term& subject,
                                          Substitution seed = {});

/// Simultaneous replacement; unbound variables pass through.
Term apply_substitution(const Substitution& s, const Term& t);

/// The reduction order: size, then fewer distinct variables, then root
/// precedence (variables lowest, then declaration index), then arguments
/// left to right. Equal only for identical terms.
std::strong_ordering compare_terms(const Term& t, const Term& u);

/// Renaming that numbers variables per sort by first occurrence, scanning
/// `terms` left to right.
Substitution canonical_renaming(std::span<const Term> terms);

/// Name used for variable `v` when printing.
std::string variable_name(const Variable& v, const Signature& sig);

/// Human-readable rendering: binary operator names infix, everything else in
/// curried prefix form, invisible symbols elided.
std::string show_term(const Term& t, const Signature& sig);

/// Machine rendering: variables and constants bare, applications as
/// parenthesized prefix lists. Ambiguous or empty names use `@<index>`.
std::string to_sexpr(const Term& t, const Signature& sig);

/// True if `name` is made only of operator characters (printed infix when binary).
bool is_operator_name(const std::string& name);

}  // namespace lawseeker
