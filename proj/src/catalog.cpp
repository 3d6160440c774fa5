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

#include "lawseeker/catalog.hpp"

#ifndef LAWSEEKER_THEORY_DIR
#define LAWSEEKER_THEORY_DIR "theories"
#endif

namespace lawseeker {

std::vector<BundledTheory> bundled_catalog() {
  const std::string dir = LAWSEEKER_THEORY_DIR;
  std::vector<BundledTheory> out;
  for (const char* name : {"gcd", "maps", "lists", "queue_obs"}) {
    out.push_back(BundledTheory{name, dir + "/" + name + ".thy", dir + "/" + name + ".golden"});
  }
  return out;
}

}  // namespace lawseeker
