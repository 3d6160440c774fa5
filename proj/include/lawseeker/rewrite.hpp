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

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "lawseeker/term.hpp"

namespace lawseeker {

/// Oriented law: every instance strictly shrinks the term.
struct Rule {
  Term lhs;
  Term rhs;
};

/// Precondition attached to a stored law. The law only applies inside a
/// context whose predicate matches; `params` are bound to the context's
/// arguments before matching.
struct Guard {
  std::uint32_t predicate = 0;
  std::vector<Variable> params;
};

/// The precondition under which a term is being normalized.
struct GuardContext {
  std::uint32_t predicate = 0;
  std::vector<Variable> args;
};

/// Orients an equation into a rule when some side dominates on every
/// instance: strictly larger, and no variable occurs more often on the
/// smaller side. Argument order is irrelevant. Returns nullopt when the
/// equation is unorientable (and must be used by ordered rewriting).
std::optional<Rule> orient(const Term& a, const Term& b);

/// Discovered laws used for pruning, indexed by the root symbol of each
/// usable rewrite direction.
class EquationStore {
 public:
  enum class AddResult { Oriented, Unoriented, Redundant, Degenerate };

  /// Normalizes both sides by the current store, then stores the equation
  /// oriented if possible and unoriented otherwise. Equations that are
  /// already joinable are not stored; neither are variable-variable laws.
  AddResult add(const Term& a, const Term& b, std::optional<Guard> guard = std::nullopt);

  /// Innermost-leftmost normal form. Oriented rules apply unconditionally;
  /// unoriented equations apply only on instances that decrease the term
  /// order. Guarded laws apply only under a matching `context`.
  Term normal_form(const Term& t, const GuardContext* context = nullptr) const;

  bool is_reducible(const Term& t, const GuardContext* context = nullptr) const;

  /// True if some law rewrites `t` itself (ignoring its subterms).
  bool is_reducible_at_root(const Term& t, const GuardContext* context = nullptr) const {
    return step_at_root(t, context).has_value();
  }

  bool is_redundant(const Term& a, const Term& b, const GuardContext* context = nullptr) const {
    return normal_form(a, context) == normal_form(b, context);
  }

  /// Bounded search for an equational proof of `a = b`: stored laws are
  /// applied in either direction at any position, never past `max_size`,
  /// visiting at most `budget` terms. True if some visited term has the same
  /// normal form as `b`, or if `a = b` is an instance of a stored law in some
  /// shared context. Implies nothing when false.
  bool is_derivable(const Term& a, const Term& b, std::size_t max_size, std::size_t budget,
                    const GuardContext* context = nullptr) const;

  std::vector<Rule> oriented() const;
  /// Unorientable pairs, canonically smaller side second.
  std::vector<std::pair<Term, Term>> unoriented() const;
  std::size_t size() const { return entries_.size(); }

 private:
  struct Entry {
    Term lhs;
    Term rhs;
    bool oriented = false;
    std::optional<Guard> guard;
  };
  struct Direction {
    std::uint32_t entry = 0;
    bool reversed = false;
  };

  std::optional<Term> step_at_root(const Term& t, const GuardContext* context) const;
  bool is_instance(const Term& a, const Term& b, const GuardContext* context) const;
  bool guard_seed(const Entry& e, const GuardContext* context, Substitution& seed) const;
  void neighbours(const Term& t, const GuardContext* context, std::size_t max_size,
                  std::vector<Term>& out) const;
  void index(std::uint32_t entry, bool reversed);

  std::vector<Entry> entries_;
  std::vector<std::vector<Direction>> by_root_;
};

Term normal_form(const Term& t, const EquationStore& store);
bool is_redundant(const Term& lhs, const Term& rhs, const EquationStore& store);

}  // namespace lawseeker
