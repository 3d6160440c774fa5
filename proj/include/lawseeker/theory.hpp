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
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lawseeker/config.hpp"
#include "lawseeker/sexpr.hpp"
#include "lawseeker/signature.hpp"
#include "lawseeker/value.hpp"

namespace lawseeker {

enum class BuiltinOp {
  Add, Sub, Mul, Div, Mod, Max, Min,
  Eq, Distinct, Lt, Le, Gt, Ge,
  Not, And, Or,
};

/// Surface name of a builtin ("+", "div", "distinct", ...).
std::string_view builtin_name(BuiltinOp op);
std::optional<BuiltinOp> find_builtin(std::string_view name);

struct Pattern {
  enum class Kind { Wildcard, Bind, Constructor, Int, Bool };

  Kind kind = Kind::Wildcard;
  /// Bound variable name (Bind) or constructor name (Constructor).
  std::string name;
  std::uint32_t slot = 0;
  CtorIndex ctor = 0;
  Integer int_value = 0;
  bool bool_value = false;
  std::vector<Pattern> args;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct MatchArm {
  Pattern pattern;
  ExprPtr body;
};

struct LetBinding {
  std::string name;
  std::uint32_t slot = 0;
  ExprPtr value;
};

/// Checked function body. Locals live in numbered frame slots.
struct Expr {
  enum class Kind { Local, IntLit, BoolLit, Call, Construct, Builtin, Ite, Match, Let };

  Kind kind = Kind::IntLit;
  SortId sort;
  SourceSpan span;
  /// Local, callee or constructor name, kept for printing.
  std::string name;
  std::uint32_t slot = 0;
  /// Function index (Call) or constructor index (Construct).
  std::uint32_t target = 0;
  BuiltinOp op = BuiltinOp::Add;
  Integer int_value = 0;
  bool bool_value = false;
  /// Call/Construct/Builtin operands; Ite: cond, then, else; Match: the
  /// scrutinee; Let: the body.
  std::vector<ExprPtr> args;
  std::vector<MatchArm> arms;
  std::vector<LetBinding> bindings;
};

struct Param {
  std::string name;
  SortId sort;
};

struct Function {
  std::string name;
  std::vector<Param> params;
  SortId result;
  ExprPtr body;
  std::uint32_t frame_size = 0;
  /// Declared with define-fun-rec rather than define-fun.
  bool recursive = false;
  SourceSpan span;
};

struct Field {
  std::string name;
  SortId sort;
};

struct Constructor {
  std::string name;
  SortId sort;
  std::vector<Field> fields;
};

struct Predicate {
  std::string name;
  std::uint32_t function = 0;
  std::vector<SortId> arg_sorts;
};

struct ObservationSpec {
  SortId observed;
  SortId context;
  SortId result;
  std::uint32_t function = 0;
};

struct UniverseOverride {
  SortId sort;
  std::optional<std::pair<Integer, Integer>> range;
  std::optional<int> depth;
};

/// Settings for the brute-force oracle.
struct OracleSettings {
  int depth = 4;
  std::uint64_t cap = 10'000'000;
  std::vector<UniverseOverride> overrides;
};

/// A checked theory: sorts, datatypes, definitions and the staged signature.
/// Sort 0 is always the built-in Bool.
struct Theory {
  std::string name;
  Signature signature;
  std::vector<Constructor> constructors;
  std::vector<Function> functions;
  std::vector<Predicate> predicates;
  std::vector<ObservationSpec> observations;
  Config config;
  OracleSettings oracle;

  /// An empty theory holding only the Bool sort.
  static Theory empty(std::string name);

  SortId bool_sort() const { return SortId{0}; }
  const ObservationSpec* observation_for(SortId sort) const;
  std::optional<std::uint32_t> find_function(std::string_view name) const;
  std::optional<CtorIndex> find_constructor(std::string_view name) const;
  /// Highest stage number among signature symbols (0 when empty).
  int last_stage() const;

  /// Fewest constructor nodes in a value of `sort` (scalars: 0), or
  /// nullopt when the sort has no finite value.
  std::optional<int> min_value_size(SortId sort) const;

  /// Fills the cache consulted by min_value_size; call after the last
  /// constructor is added.
  void finalize();

 private:
  std::vector<std::optional<int>> min_sizes_;
  std::vector<std::optional<int>> compute_min_sizes() const;
};

/// Renders a value using constructor names, e.g. `(MCons 1 2 MEmpty)`.
std::string show_value(const Value& v, const Theory& theory);

}  // namespace lawseeker
