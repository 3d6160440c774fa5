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
#include <stdexcept>
#include <string>

namespace lawseeker {

/// Exploration settings. Theory files may override any field in their
/// `options` block; the CLI overrides a subset again.
struct Config {
  int max_term_size = 7;
  int max_tests = 1000;
  std::uint64_t seed = 0;
  int vars_per_sort = 3;
  std::int64_t fuel = 100000;
  int initial_suite = 20;
  int max_preconditions = 1;
  /// Observation contexts generated per observed sort and test case.
  int contexts_per_sort = 2;
  /// Size budget handed to the datatype value generator.
  int value_budget = 10;
  /// Compare observed sorts through their observation function.
  bool observe = true;
  /// Record enumerated terms and store updates for replay.
  bool record_log = false;

  /// Throws std::invalid_argument naming the first non-positive field.
  void validate() const;
};

inline void Config::validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string(what) + " must be positive");
  };
  require(max_term_size >= 1, "max-size");
  require(max_tests >= 1, "max-tests");
  require(vars_per_sort >= 1, "vars-per-sort");
  require(fuel >= 1, "fuel");
  require(initial_suite >= 1, "initial-suite");
  require(max_preconditions >= 1, "max-preconditions");
  require(contexts_per_sort >= 1, "contexts");
  require(value_budget >= 0, "gen-size");
}

}  // namespace lawseeker
