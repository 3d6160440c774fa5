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

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lawseeker {

struct SourceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::uint32_t line = 1;
  std::uint32_t column = 1;
};

struct SExpr {
  enum class Kind { List, Symbol, Integer, String };

  Kind kind = Kind::List;
  /// Symbol name, integer digits (with optional sign) or unescaped string.
  std::string text;
  std::vector<SExpr> items;
  SourceSpan span;

  bool is_list() const { return kind == Kind::List; }
  bool is_symbol() const { return kind == Kind::Symbol; }
  bool is_symbol(std::string_view name) const { return kind == Kind::Symbol && text == name; }
  bool is_integer() const { return kind == Kind::Integer; }
  bool is_string() const { return kind == Kind::String; }
  /// Head symbol of a non-empty list, or "".
  std::string_view head() const;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(SourceSpan span, std::string expected, const std::string& message)
      : std::runtime_error(message), span(span), expected(std::move(expected)) {}

  SourceSpan span;
  /// What the parser was looking for.
  std::string expected;
};

/// Reads every top-level s-expression in `text`. `;` starts a line comment.
std::vector<SExpr> parse_sexprs(std::string_view text);

/// Renders an s-expression on one line.
std::string print_sexpr(const SExpr& e);

}  // namespace lawseeker
