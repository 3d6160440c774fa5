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
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lawseeker {

using Integer = boost::multiprecision::cpp_int;

/// Index of a constructor in the owning theory's constructor table.
using CtorIndex = std::uint32_t;

/// Runtime data value produced by the evaluator.
///
/// Values are immutable; constructed values share their fields, so copying a
/// Value is cheap regardless of its depth.
class Value {
 public:
  enum class Kind { Int, Bool, Constructed, Tuple };

  Value() : rep_(false) {}

  static Value integer(Integer v) { return Value(Rep(std::move(v))); }
  static Value boolean(bool b) { return Value(Rep(b)); }
  static Value constructed(CtorIndex ctor, std::vector<Value> fields);
  static Value tuple(std::vector<Value> items);

  Kind kind() const;
  bool is_int() const { return kind() == Kind::Int; }
  bool is_bool() const { return kind() == Kind::Bool; }

  const Integer& as_int() const { return std::get<Integer>(rep_); }
  bool as_bool() const { return std::get<bool>(rep_); }
  CtorIndex ctor() const;
  std::span<const Value> fields() const;

  /// Structural hash, stable across runs and platforms.
  std::uint64_t hash() const;

  /// Nesting depth of constructed values; scalars have depth 0.
  std::size_t depth() const;

  friend bool operator==(const Value& a, const Value& b);

 private:
  struct Compound {
    bool is_tuple = false;
    CtorIndex ctor = 0;
    std::vector<Value> fields;
    std::uint64_t hash = 0;
    std::size_t depth = 0;
  };
  using Rep = std::variant<Integer, bool, std::shared_ptr<const Compound>>;

  explicit Value(Rep rep) : rep_(std::move(rep)) {}

  Rep rep_;
};

struct ValueHash {
  std::size_t operator()(const Value& v) const { return static_cast<std::size_t>(v.hash()); }
};

/// Mixes `value` into `seed`; used for every structural hash in the project.
inline std::uint64_t hash_mix(std::uint64_t seed, std::uint64_t value) {
  std::uint64_t x = seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
  x ^= x >> 31;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 29;
  return x;
}

}  // namespace lawseeker
