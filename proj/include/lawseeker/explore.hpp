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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lawseeker/config.hpp"
#include "lawseeker/eval.hpp"
#include "lawseeker/rewrite.hpp"
#include "lawseeker/term.hpp"
#include "lawseeker/theory.hpp"

namespace lawseeker {

/// A law that survived testing. Variables are canonically renamed.
struct Conjecture {
  Term lhs;
  Term rhs;
  std::optional<Condition> precondition;
  int stage = 1;
  int effective_size = 0;
  int tests_passed = 0;
};

struct RunStats {
  std::size_t terms_considered = 0;
  /// Compositions rejected because some law already reduces them.
  std::size_t terms_pruned = 0;
  std::size_t classes = 0;
  std::size_t unreliable = 0;
  std::size_t suite_size = 0;
  std::size_t confirmations = 0;
  std::size_t refutations = 0;
  std::size_t tests_run = 0;
  std::size_t background_laws = 0;
  /// True laws left out of the output because the store already proves them.
  std::size_t derived_laws = 0;
  std::size_t conditional_laws = 0;
};

/// One entry of the replayable run log (recorded when Config::record_log).
struct LogEvent {
  enum class Kind {
    /// A size pass starts; `stage` and `size` are set.
    PassStart,
    /// `terms[0]` was enumerated as an irreducible candidate.
    Considered,
    /// `terms[0] = terms[1]` was added to the rewrite store.
    StoreInsert,
    /// `terms[0] = terms[1]` (before renaming) was emitted.
    Emit,
  };
  Kind kind = Kind::PassStart;
  int stage = 0;
  int size = 0;
  std::vector<Term> terms;
};

struct ExplorationReport {
  std::vector<Conjecture> laws;
  RunStats stats;
  std::vector<std::string> warnings;
  /// The rewrite store after the run (unconditional laws only).
  EquationStore store;
  std::vector<LogEvent> log;
};

/// All well-sorted terms of exactly `size` built from `active` symbols and
/// `variables`, minus those the store can reduce. Order: variables and
/// constants first, then by root symbol in declaration order, then by
/// argument sizes and arguments left to right.
std::vector<Term> enumerate_terms(const Signature& sig, std::span<const SymbolId> active,
                                  std::span<const Variable> variables, int size,
                                  const EquationStore& store);

/// Sorts whose variables take part at stage `stage`: the argument sorts of
/// the symbols active there.
std::vector<SortId> sorts_in_play(const Signature& sig, int stage);

/// Runs every stage, then conditional discovery.
ExplorationReport explore(const Theory& theory, const Config& config);

/// True if the law mentions some symbol that is not background.
bool mentions_foreground(const Term& lhs, const Term& rhs, const Signature& sig);

}  // namespace lawseeker
