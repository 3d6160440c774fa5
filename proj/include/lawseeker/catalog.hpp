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

#include <string>
#include <vector>

namespace lawseeker {

/// A theory shipped with the tool. Its oracle universe and pinned
/// configuration live in the theory file itself.
struct BundledTheory {
  std::string name;
  std::string path;
  /// Expected `explore` output in text format.
  std::string golden;
};

std::vector<BundledTheory> bundled_catalog();

}  // namespace lawseeker
