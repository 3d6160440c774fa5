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

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "lawseeker/config.hpp"
#include "lawseeker/explore.hpp"
#include "lawseeker/theory.hpp"

namespace lawseeker {

/// `pred a b` for named predicates, `a op b` for binary operator names.
std::string show_condition(const Condition& c, const Theory& theory);

/// `pre => lhs = rhs`, or `lhs = rhs` without a precondition.
std::string show_law(const Conjecture& law, const Theory& theory);

/// Numbered laws grouped under one header per stage, then the conditional
/// laws, then warnings and statistics.
std::string format_text(const ExplorationReport& report, const Theory& theory);

/// Hex SHA-256 of the theory's canonical printed form.
std::string theory_digest(const Theory& theory);

nlohmann::ordered_json to_json(const ExplorationReport& report, const Theory& theory, const Config& config);

/// Reads a machine-format term (see to_sexpr) over the theory's signature.
/// Throws ParseError on syntax errors and unknown names, SortError on
/// ill-sorted applications.
Term parse_term(std::string_view text, const Signature& sig);

/// The laws of a machine-format report, read back against `theory`.
/// Throws std::invalid_argument on a malformed document.
std::vector<Conjecture> laws_from_json(const nlohmann::json& doc, const Theory& theory);

}  // namespace lawseeker
