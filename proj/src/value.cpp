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

#include "lawseeker/value.hpp"

#include <algorithm>

namespace lawseeker {

namespace {

std::uint64_t hash_integer(const Integer& i) {
  // Hash the magnitude limbs and sign; independent of host word order.
  std::uint64_t h = i.sign() < 0 ? 0x51ULL : 0x17ULL;
  Integer mag = abs(i);
  if (mag == 0) return hash_mix(h, 0);
  while (mag != 0) {
    std::uint64_t limb = static_cast<std::uint64_t>(mag & Integer(0xffffffffffffffffULL));
    h = hash_mix(h, limb);
    mag >>= 64;
  }
  return h;
}

}  // namespace

Value Value::constructed(CtorIndex ctor, std::vector<Value> fields) {
  auto c = std::make_shared<Compound>();
  c->ctor = ctor;
  c->fields = std::move(fields);
  std::uint64_t h = hash_mix(0xc0ffeeULL, ctor);
  std::size_t depth = 0;
  for (const Value& f : c->fields) {
    h = hash_mix(h, f.hash());
    depth = std::max(depth, f.depth());
  }
  c->hash = h;
  c->depth = depth + 1;
  return Value(Rep(std::shared_ptr<const Compound>(std::move(c))));
}

Value Value::tuple(std::vector<Value> items) {
  auto c = std::make_shared<Compound>();
  c->is_tuple = true;
  c->fields = std::move(items);
  std::uint64_t h = 0x7e9u;
  std::size_t depth = 0;
  for (const Value& f : c->fields) {
    h = hash_mix(h, f.hash());
    depth = std::max(depth, f.depth());
  }
  c->hash = h;
  c->depth = depth;
  return Value(Rep(std::shared_ptr<const Compound>(std::move(c))));
}

Value::Kind Value::kind() const {
  switch (rep_.index()) {
    case 0:
      return Kind::Int;
    case 1:
      return Kind::Bool;
    default:
      return std::get<2>(rep_)->is_tuple ? Kind::Tuple : Kind::Constructed;
  }
}

CtorIndex Value::ctor() const { return std::get<2>(rep_)->ctor; }

std::span<const Value> Value::fields() const {
  if (rep_.index() != 2) return {};
  return std::get<2>(rep_)->fields;
}

std::uint64_t Value::hash() const {
  switch (rep_.index()) {
    case 0:
      return hash_integer(std::get<0>(rep_));
    case 1:
      return std::get<1>(rep_) ? 0xb001ULL : 0xb000ULL;
    default:
      return std::get<2>(rep_)->hash;
  }
}

std::size_t Value::depth() const {
  if (rep_.index() != 2) return 0;
  return std::get<2>(rep_)->depth;
}

bool operator==(const Value& a, const Value& b) {
  if (a.rep_.index() != b.rep_.index()) return false;
  switch (a.rep_.index()) {
    case 0:
      return std::get<0>(a.rep_) == std::get<0>(b.rep_);
    case 1:
      return std::get<1>(a.rep_) == std::get<1>(b.rep_);
    default: {
      const auto& x = std::get<2>(a.rep_);
      const auto& y = std::get<2>(b.rep_);
      if (x == y) return true;
      if (x->hash != y->hash || x->is_tuple != y->is_tuple || x->ctor != y->ctor) return false;
      return std::equal(x->fields.begin(), x->fields.end(), y->fields.begin(), y->fields.end());
    }
  }
}

}  // namespace lawseeker
