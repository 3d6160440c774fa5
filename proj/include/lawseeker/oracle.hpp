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
#include <stdexcept>
#include <vector>

#include "lawseeker/eval.hpp"
#include "lawseeker/explore.hpp"
#include "lawseeker/theory.hpp"

namespace lawseeker {

/// Every value the oracle tries, per sort (indexed by SortId::index).
struct Universe {
  std::vector<std::vector<Value>> values;

  const std::vector<Value>& of(SortId sort) const { return values.at(sort.index); }
};

class UniverseTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Integer sorts take their declared range unless overridden; datatypes take
/// every value of nesting depth up to the bound, normalized and without
/// duplicates.
Universe build_universe(const Theory& theory, const OracleSettings& settings);
inline Universe build_universe(const Theory& theory) { return build_universe(theory, theory.oracle); }

struct Verdict {
  enum class Kind { Holds, Counterexample, Inconclusive };
  Kind kind = Kind::Holds;
  /// Set for Counterexample: a full test case (contexts included) on which
  /// the two sides are observed to differ.
  std::optional<TestCase> counterexample;
  /// Fraction of checked valuations where some side was Undefined.
  double undefined_fraction = 0;
  std::uint64_t valuations = 0;
  /// Valuations where the precondition did not hold.
  std::uint64_t skipped = 0;
};

struct OracleOptions {
  std::int64_t fuel = 100000;
  bool observe = true;
  std::uint64_t cap = 10'000'000;
};

/// Tries the law on every valuation of its variables over `universe`,
/// observing through every context in the universe. Valuations where
/// either side is Undefined are left out; if they exceed 10% of the
/// checked valuations the verdict is Inconclusive. The first
/// counterexample in valuation order (variables by sort then index, the
/// last one varying fastest) is reported.
Verdict exhaustive_check(const Conjecture& c, const Theory& theory, const Universe& universe,
                         const OracleOptions& options);

}  // namespace lawseeker
