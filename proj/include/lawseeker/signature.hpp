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
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lawseeker/value.hpp"

namespace lawseeker {

struct SortId {
  std::uint32_t index = 0;
  friend auto operator<=>(const SortId&, const SortId&) = default;
};

struct SymbolId {
  std::uint32_t index = 0;
  friend auto operator<=>(const SymbolId&, const SymbolId&) = default;
};

enum class SortKind { Integer, Boolean, Datatype };

struct SortInfo {
  std::string name;
  SortKind kind = SortKind::Integer;
  /// Generation range for integer-backed sorts (inclusive).
  Integer low = 0;
  Integer high = 30;
  /// Printing names for the sort's variables; its length is the variable count.
  std::vector<std::string> var_names;
  /// Constructor indices, datatype sorts only.
  std::vector<CtorIndex> constructors;
  /// Function applied to every generated value (canonicalizes representations).
  std::optional<std::uint32_t> normalizer;
};

/// What a signature symbol denotes when evaluated.
struct SymbolRef {
  enum class Kind { Function, Constructor, Literal };
  Kind kind = Kind::Function;
  std::uint32_t index = 0;
  Value literal;
};

struct Symbol {
  std::string name;
  std::vector<SortId> arg_sorts;
  SortId result;
  bool background = false;
  int stage = 1;
  bool invisible = false;
  SymbolRef ref;

  std::size_t arity() const { return arg_sorts.size(); }
};

/// Sorts and the symbols the explorer may combine into terms. Symbol
/// precedence in the term order is the declaration index.
class Signature {
 public:
  SortId add_sort(SortInfo info);
  SymbolId add_symbol(Symbol symbol);

  const SortInfo& sort(SortId id) const { return sorts_.at(id.index); }
  SortInfo& sort(SortId id) { return sorts_.at(id.index); }
  const Symbol& symbol(SymbolId id) const { return symbols_.at(id.index); }

  std::size_t sort_count() const { return sorts_.size(); }
  std::size_t symbol_count() const { return symbols_.size(); }
  const std::vector<SortInfo>& sorts() const { return sorts_; }
  const std::vector<Symbol>& symbols() const { return symbols_; }

  std::optional<SortId> find_sort(std::string_view name) const;

  /// Unique symbol with the given printing name, if exactly one exists.
  std::optional<SymbolId> find_symbol(std::string_view name) const;

  /// Number of distinct stages among the symbols (0 for an empty signature).
  int stage_count() const;

 private:
  std::vector<SortInfo> sorts_;
  std::vector<Symbol> symbols_;
};

}  // namespace lawseeker
