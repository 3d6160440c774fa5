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

#include "lawseeker/signature.hpp"

#include <algorithm>

namespace lawseeker {

SortId Signature::add_sort(SortInfo info) {
  sorts_.push_back(std::move(info));
  return SortId{static_cast<std::uint32_t>(sorts_.size() - 1)};
}

SymbolId Signature::add_symbol(Symbol symbol) {
  symbols_.push_back(std::move(symbol));
  return SymbolId{static_cast<std::uint32_t>(symbols_.size() - 1)};
}

std::optional<SortId> Signature::find_sort(std::string_view name) const {
  for (std::size_t i = 0; i < sorts_.size(); ++i) {
    if (sorts_[i].name == name) return SortId{static_cast<std::uint32_t>(i)};
  }
  return std::nullopt;
}

std::optional<SymbolId> Signature::find_symbol(std::string_view name) const {
  std::optional<SymbolId> found;
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i].name != name) continue;
    if (found) return std::nullopt;
    found = SymbolId{static_cast<std::uint32_t>(i)};
  }
  return found;
}

int Signature::stage_count() const {
  int n = 0;
  for (const Symbol& s : symbols_) n = std::max(n, s.stage);
  return n;
}

}  // namespace lawseeker
