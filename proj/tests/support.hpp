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

#include <compare>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lawseeker/frontend.hpp"
#include "lawseeker/report.hpp"
#include "lawseeker/term.hpp"

namespace lawseeker::testing {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string theory_path(const std::string& name) {
  return std::string(LAWSEEKER_THEORY_DIR) + "/" + name + ".thy";
}

inline std::string data_path(const std::string& file) { return std::string(LAWSEEKER_TEST_DATA) + "/" + file; }

inline Theory bundled(const std::string& name) { return load_theory(read_file(theory_path(name))); }

inline Theory fixture(const std::string& name) { return load_theory(read_file(data_path(name + ".thy"))); }

inline int sign(std::strong_ordering o) { return o < 0 ? -1 : (o > 0 ? 1 : 0); }

/// Term in machine syntax, e.g. "(+ x 0)".
inline Term term(const Theory& theory, const std::string& text) { return parse_term(text, theory.signature); }

/// Every well-sorted term of exactly `size` over the given symbols and
/// variables, by plain recursion. Independent of the engine's enumerator.
inline std::vector<Term> all_terms(const Signature& sig, const std::vector<SymbolId>& symbols,
                                   const std::vector<Variable>& vars, int size, std::optional<SortId> sort = {}) {
  std::vector<Term> out;
  if (size == 1) {
    for (const Variable& v : vars) {
      if (!sort || v.sort == *sort) out.push_back(Term::variable(v));
    }
  }
  for (SymbolId f : symbols) {
    const Symbol& s = sig.symbol(f);
    if (sort && s.result != *sort) continue;
    if (s.arity() == 0) {
      if (size == 1) out.push_back(Term::apply(sig, f, {}));
      continue;
    }
    // Split size - 1 among the arguments.
    std::vector<std::vector<Term>> partial{{}};
    std::vector<int> used{0};
    for (std::size_t i = 0; i < s.arity(); ++i) {
      std::vector<std::vector<Term>> next_partial;
      std::vector<int> next_used;
      const int left_after = static_cast<int>(s.arity() - i - 1);
      for (std::size_t p = 0; p < partial.size(); ++p) {
        for (int k = 1; used[p] + k + left_after <= size - 1; ++k) {
          if (i + 1 == s.arity() && used[p] + k != size - 1) continue;
          for (const Term& a : all_terms(sig, symbols, vars, k, s.arg_sorts[i])) {
            auto grown = partial[p];
            grown.push_back(a);
            next_partial.push_back(std::move(grown));
            next_used.push_back(used[p] + k);
          }
        }
      }
      partial = std::move(next_partial);
      used = std::move(next_used);
    }
    for (auto& args : partial) out.push_back(Term::apply(sig, f, std::move(args)));
  }
  return out;
}

inline std::vector<SymbolId> all_symbols(const Signature& sig) {
  std::vector<SymbolId> out;
  for (std::uint32_t i = 0; i < sig.symbol_count(); ++i) out.push_back(SymbolId{i});
  return out;
}

inline std::vector<Variable> sort_vars(const Signature& sig, SortId sort) {
  std::vector<Variable> out;
  for (std::uint32_t i = 0; i < sig.sort(sort).var_names.size(); ++i) out.push_back(Variable{sort, i});
  return out;
}

}  // namespace lawseeker::testing
