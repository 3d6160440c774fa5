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

#include "lawseeker/theory.hpp"

#include <array>
#include <utility>

namespace lawseeker {

namespace {

constexpr std::array<std::pair<BuiltinOp, std::string_view>, 16> kBuiltins = {{
    {BuiltinOp::Add, "+"},
    {BuiltinOp::Sub, "-"},
    {BuiltinOp::Mul, "*"},
    {BuiltinOp::Div, "div"},
    {BuiltinOp::Mod, "mod"},
    {BuiltinOp::Max, "max"},
    {BuiltinOp::Min, "min"},
    {BuiltinOp::Eq, "="},
    {BuiltinOp::Distinct, "distinct"},
    {BuiltinOp::Lt, "<"},
    {BuiltinOp::Le, "<="},
    {BuiltinOp::Gt, ">"},
    {BuiltinOp::Ge, ">="},
    {BuiltinOp::Not, "not"},
    {BuiltinOp::And, "and"},
    {BuiltinOp::Or, "or"},
}};

void show_into(const Value& v, const Theory& theory, std::string& out, bool nested) {
  switch (v.kind()) {
    case Value::Kind::Int:
      out += v.as_int().str();
      return;
    case Value::Kind::Bool:
      out += v.as_bool() ? "true" : "false";
      return;
    case Value::Kind::Tuple: {
      out += '<';
      bool first = true;
      for (const Value& f : v.fields()) {
        if (!first) out += ", ";
        first = false;
        show_into(f, theory, out, false);
      }
      out += '>';
      return;
    }
    case Value::Kind::Constructed: {
      const std::string& name = theory.constructors.at(v.ctor()).name;
      if (v.fields().empty()) {
        out += name;
        return;
      }
      if (nested) out += '(';
      out += name;
      for (const Value& f : v.fields()) {
        out += ' ';
        show_into(f, theory, out, true);
      }
      if (nested) out += ')';
      return;
    }
  }
}

}  // namespace

std::string_view builtin_name(BuiltinOp op) {
  for (const auto& [b, name] : kBuiltins) {
    if (b == op) return name;
  }
  return "?";
}

std::optional<BuiltinOp> find_builtin(std::string_view name) {
  for (const auto& [b, n] : kBuiltins) {
    if (n == name) return b;
  }
  return std::nullopt;
}

Theory Theory::empty(std::string name) {
  Theory t;
  t.name = std::move(name);
  SortInfo b;
  b.name = "Bool";
  b.kind = SortKind::Boolean;
  b.low = 0;
  b.high = 1;
  b.var_names = {"p", "q", "r"};
  t.signature.add_sort(std::move(b));
  return t;
}

const ObservationSpec* Theory::observation_for(SortId sort) const {
  for (const ObservationSpec& o : observations) {
    if (o.observed == sort) return &o;
  }
  return nullptr;
}

std::optional<std::uint32_t> Theory::find_function(std::string_view fname) const {
  for (std::uint32_t i = 0; i < functions.size(); ++i) {
    if (functions[i].name == fname) return i;
  }
  return std::nullopt;
}

std::optional<CtorIndex> Theory::find_constructor(std::string_view cname) const {
  for (CtorIndex i = 0; i < constructors.size(); ++i) {
    if (constructors[i].name == cname) return i;
  }
  return std::nullopt;
}

int Theory::last_stage() const {
  int last = 0;
  for (const Symbol& s : signature.symbols()) last = std::max(last, s.stage);
  return last;
}

std::optional<int> Theory::min_value_size(SortId sort) const {
  if (min_sizes_.size() == signature.sort_count()) return min_sizes_.at(sort.index);
  return compute_min_sizes().at(sort.index);
}

void Theory::finalize() { min_sizes_ = compute_min_sizes(); }

std::vector<std::optional<int>> Theory::compute_min_sizes() const {
  // Least fixpoint over all datatypes; scalar fields are free.
  const std::size_t n = signature.sort_count();
  std::vector<std::optional<int>> best(n);
  for (std::size_t s = 0; s < n; ++s) {
    if (signature.sort(SortId{static_cast<std::uint32_t>(s)}).kind != SortKind::Datatype) best[s] = 0;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Constructor& c : constructors) {
      int total = 1;
      bool known = true;
      for (const Field& f : c.fields) {
        const auto& m = best[f.sort.index];
        if (!m) {
          known = false;
          break;
        }
        total += *m;
      }
      auto& slot = best[c.sort.index];
      if (known && (!slot || total < *slot)) {
        slot = total;
        changed = true;
      }
    }
  }
  return best;
}

std::string show_value(const Value& v, const Theory& theory) {
  std::string out;
  show_into(v, theory, out, false);
  return out;
}

}  // namespace lawseeker
