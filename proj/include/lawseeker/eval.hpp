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
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lawseeker/rng.hpp"
#include "lawseeker/term.hpp"
#include "lawseeker/theory.hpp"
#include "lawseeker/value.hpp"

namespace lawseeker {

enum class UndefinedReason { FuelExhausted, PartialMatch, DivByZero };

std::string_view reason_name(UndefinedReason r);

/// Result of evaluating something: a value or the reason there is none.
class Outcome {
 public:
  static Outcome defined(Value v) { return Outcome(std::move(v), std::nullopt); }
  static Outcome undefined(UndefinedReason r) { return Outcome(Value(), r); }

  bool is_defined() const { return !reason_; }
  const Value& value() const { return value_; }
  UndefinedReason reason() const { return *reason_; }

  friend bool operator==(const Outcome& a, const Outcome& b) {
    return a.reason_ == b.reason_ && (a.reason_ || a.value_ == b.value_);
  }

 private:
  Outcome(Value v, std::optional<UndefinedReason> r) : value_(std::move(v)), reason_(r) {}

  Value value_;
  std::optional<UndefinedReason> reason_;
};

/// Values for every variable of every sort, plus observation contexts.
struct TestCase {
  /// valuation[sort][index]
  std::vector<std::vector<Value>> valuation;
  /// contexts[sort]; empty for sorts that are not observed.
  std::vector<std::vector<Value>> contexts;

  const Value& value_of(Variable v) const { return valuation.at(v.sort.index).at(v.index); }
  friend bool operator==(const TestCase&, const TestCase&) = default;
};

/// A predicate applied to variables, e.g. `k /= k2`.
struct Condition {
  std::uint32_t predicate = 0;
  std::vector<Variable> args;
  friend bool operator==(const Condition&, const Condition&) = default;
};

class GeneratorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConditionExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Fuel shared by one evaluation. Every function call and builtin operation
/// costs one unit.
class Fuel {
 public:
  explicit Fuel(std::int64_t amount) : left_(amount) {}
  bool spend() { return --left_ >= 0; }
  std::int64_t left() const { return left_; }

 private:
  std::int64_t left_;
};

/// Calls function `fn` on `args`.
Outcome call_function(const Theory& theory, std::uint32_t fn, std::span<const Value> args, Fuel& fuel);

/// Applies a signature symbol to already evaluated arguments.
Outcome apply_symbol(const Theory& theory, SymbolId symbol, std::span<const Value> args, Fuel& fuel);

/// Call-by-value evaluation of `t` under the test case's valuation.
Outcome eval_term(const Term& t, const TestCase& tc, const Theory& theory, std::int64_t fuel);

/// What an observer sees of `v`: the observation function applied in each
/// context, or just `v` for sorts without an observation (or when
/// `observe` is false).
std::vector<Outcome> observe_value(const Value& v, SortId sort, std::span<const Value> contexts,
                                   const Theory& theory, std::int64_t fuel, bool observe = true);

/// Observed outcomes of one evaluation result; an Undefined result is
/// reported once per observation context.
std::vector<Outcome> observe_outcome(const Outcome& o, SortId sort, const TestCase& tc,
                                     const Theory& theory, std::int64_t fuel, bool observe);

struct Fingerprint {
  /// Observed outcomes, case after case.
  std::vector<Outcome> outcomes;
  std::uint64_t digest = 0;
  std::size_t undefined = 0;
  std::size_t cases = 0;
  std::size_t undefined_cases = 0;

  /// More than half of the cases had an Undefined outcome.
  bool unreliable() const { return 2 * undefined_cases > cases; }
  bool fully_defined() const { return undefined == 0; }
};

std::uint64_t outcome_hash(const Outcome& o);

/// Observed outcomes of `t` on every case of `suite`.
Fingerprint fingerprint(const Term& t, std::span<const TestCase> suite, const Theory& theory,
                        const Config& config);

/// Appends one case's observed outcomes to `fp`.
void extend_fingerprint(Fingerprint& fp, std::span<const Outcome> case_outcomes);

/// Random value of `sort`. Integer sorts draw uniformly from their range;
/// datatypes pick uniformly among constructors that fit `budget`.
Value generate_value(const Theory& theory, SortId sort, int budget, RandomStream& rng);

/// Fills every variable and observation context. With a condition, draws
/// until the predicate holds, giving up after 1000 attempts.
TestCase generate_testcase(const Theory& theory, const Config& config, RandomStream& rng,
                           const std::optional<Condition>& condition = std::nullopt);

/// Evaluates the condition's predicate on the case; Undefined counts as false.
bool condition_holds(const Theory& theory, const TestCase& tc, const Condition& condition,
                     std::int64_t fuel);

inline constexpr int kConditionAttempts = 1000;
inline constexpr int kMaxCallDepth = 1000;

}  // namespace lawseeker
