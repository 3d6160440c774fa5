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
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lawseeker/sexpr.hpp"
#include "lawseeker/theory.hpp"

namespace lawseeker {

/// Parsed but unchecked theory file.
struct TheorySyntax {
  std::string name;
  SExpr root;
  /// Positions of clauses in root.items, by kind, in file order.
  std::vector<std::size_t> options, sorts, datatypes, functions, predicates, observations,
      backgrounds, stages, oracles;
};

enum class CheckCategory {
  UnknownName,
  SortMismatch,
  NoBaseConstructor,
  BadObservation,
  EmptyStage,
  DuplicateName,
  InvalidOption,
  Malformed,
};

std::string_view category_name(CheckCategory c);

class CheckError : public std::runtime_error {
 public:
  CheckError(SourceSpan span, CheckCategory category, const std::string& message)
      : std::runtime_error(message), span(span), category(category) {}

  SourceSpan span;
  CheckCategory category;
};

/// Reads the s-expression structure of a theory file. Names are not
/// resolved here; see check_theory.
TheorySyntax parse_theory(std::string_view text);

/// Resolves names, checks sorts and builds the theory.
Theory check_theory(const TheorySyntax& syntax);

/// parse_theory followed by check_theory.
Theory load_theory(std::string_view text);

/// Canonical source text for a checked theory; loading it yields an
/// identical theory.
std::string print_theory(const Theory& theory);

/// `file:line:col: error: message` followed by the offending source line
/// and a caret.
std::string format_diagnostic(std::string_view file, std::string_view text, SourceSpan span,
                              std::string_view message);

}  // namespace lawseeker
