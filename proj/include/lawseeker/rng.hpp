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
#include <random>

#include "lawseeker/value.hpp"

namespace lawseeker {

/// Portable random stream: a 64-bit Mersenne Twister (std::mt19937_64, whose
/// output sequence is fixed by the C++ standard) seeded through
/// std::seed_seq from (seed, stream id). Bounded draws use rejection
/// sampling rather than std::uniform_int_distribution, whose algorithm is
/// implementation-defined.
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform in [low, high]; requires high - low < 2^63.
  Integer in_range(const Integer& low, const Integer& high);

  bool coin() { return (next() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

/// Well-known stream ids so independent consumers never share draws.
namespace streams {
inline constexpr std::uint64_t kSuite = 1;
inline constexpr std::uint64_t kConfirmation = 2;
inline constexpr std::uint64_t kConditionalBase = 1000;
}  // namespace streams

}  // namespace lawseeker
