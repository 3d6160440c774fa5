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

#include <gtest/gtest.h>

#include <cstdlib>

#include "lawseeker/catalog.hpp"
#include "lawseeker/cli.hpp"
#include "support.hpp"

using namespace lawseeker;
using namespace lawseeker::testing;

// Default text output of every bundled theory is pinned.
TEST(Golden, BundledTheoriesMatch) {
  unsetenv("LAWSEEKER_SEED");
  auto catalog = bundled_catalog();
  ASSERT_GE(catalog.size(), 4u);
  for (const BundledTheory& b : catalog) {
    std::ostringstream out, err;
    int code = run_cli({"lawseeker", "explore", b.path}, out, err);
    EXPECT_EQ(code, exit_code::kOk) << b.name << ": " << err.str();
    EXPECT_EQ(out.str(), read_file(b.golden)) << b.name;
  }
}
