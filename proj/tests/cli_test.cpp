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
#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>

#include "lawseeker/cli.hpp"
#include "support.hpp"

using namespace lawseeker;
using namespace lawseeker::testing;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  args.insert(args.begin(), "lawseeker");
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return Result{code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    unsetenv("LAWSEEKER_SEED");
    dir = fs::temp_directory_path() / ("lawseeker_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  void TearDown() override {
    unsetenv("LAWSEEKER_SEED");
    fs::remove_all(dir);
  }
  std::string path(const std::string& name) const { return (dir / name).string(); }
  void write(const std::string& name, const std::string& text) const { std::ofstream(path(name)) << text; }

  fs::path dir;
};

}  // namespace

// Sort counts leave out the built-in Bool.
TEST_F(Cli, CheckReportsTheTheory) {
  Result r = cli({"check", theory_path("gcd")});
  EXPECT_EQ(r.code, exit_code::kOk);
  EXPECT_EQ(r.out, "ok: theory gcd, 1 sorts, 5 symbols, 2 stages\n");
}

TEST_F(Cli, CheckPointsAtTheError) {
  Result r = cli({"check", data_path("broken.thy")});
  EXPECT_EQ(r.code, exit_code::kInputError);
  EXPECT_NE(r.err.find("broken.thy:5:48: error: sort mismatch"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find('^'), std::string::npos);
  EXPECT_TRUE(r.out.empty());
}

TEST_F(Cli, MissingFilesAreInputErrors) {
  EXPECT_EQ(cli({"check", path("absent.thy")}).code, exit_code::kInputError);
  EXPECT_EQ(cli({"explore", path("absent.thy")}).code, exit_code::kInputError);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(cli({}).code, exit_code::kUsage);
  EXPECT_EQ(cli({"frobnicate"}).code, exit_code::kUsage);
  EXPECT_EQ(cli({"explore", theory_path("gcd"), "--max-size", "many"}).code, exit_code::kUsage);
  EXPECT_EQ(cli({"explore", theory_path("gcd"), "--max-size", "0"}).code, exit_code::kUsage);
  EXPECT_EQ(cli({"explore", theory_path("gcd"), "--format", "xml"}).code, exit_code::kUsage);
  EXPECT_EQ(cli({"verify", path("r.json")}).code, exit_code::kUsage);
  setenv("LAWSEEKER_SEED", "seven", 1);
  Result r = cli({"explore", theory_path("gcd"), "--max-size", "3"});
  EXPECT_EQ(r.code, exit_code::kUsage);
  EXPECT_NE(r.err.find("LAWSEEKER_SEED"), std::string::npos);
}

TEST_F(Cli, HelpSucceeds) {
  Result r = cli({"--help"});
  EXPECT_EQ(r.code, exit_code::kOk);
  EXPECT_NE(r.out.find("explore"), std::string::npos);
}

TEST_F(Cli, ExploreThenVerify) {
  Result ex = cli({"explore", theory_path("gcd"), "--max-size", "5", "--format", "json", "--out", path("r.json")});
  ASSERT_EQ(ex.code, exit_code::kOk) << ex.err;
  EXPECT_TRUE(ex.out.empty());
  auto doc = nlohmann::json::parse(read_file(path("r.json")));
  ASSERT_FALSE(doc["laws"].empty());

  Result v = cli({"verify", path("r.json"), "--theory", theory_path("gcd")});
  EXPECT_EQ(v.code, exit_code::kOk) << v.out << v.err;
  EXPECT_NE(v.out.find("-- " + std::to_string(doc["laws"].size()) + " hold, 0 refuted, 0 inconclusive"),
            std::string::npos)
      << v.out;

  // A false law in the report is refuted.
  doc["laws"][0]["rhs"] = "(+ x x)";
  write("bad.json", doc.dump());
  Result bad = cli({"verify", path("bad.json"), "--theory", theory_path("gcd")});
  EXPECT_EQ(bad.code, exit_code::kCounterexample);
  EXPECT_NE(bad.out.find("COUNTEREXAMPLE"), std::string::npos);

  // The report names its theory by digest.
  Result other = cli({"verify", path("r.json"), "--theory", theory_path("maps")});
  EXPECT_EQ(other.code, exit_code::kInputError);

  write("garbage.json", "{not json");
  EXPECT_EQ(cli({"verify", path("garbage.json"), "--theory", theory_path("gcd")}).code, exit_code::kInputError);
}

TEST_F(Cli, OutputIsDeterministic) {
  Result a = cli({"explore", theory_path("gcd"), "--max-size", "5", "--format", "json"});
  Result b = cli({"explore", theory_path("gcd"), "--max-size", "5", "--format", "json"});
  ASSERT_EQ(a.code, exit_code::kOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(nlohmann::json::parse(a.out)["header"]["seed"], 0);
}

TEST_F(Cli, SeedPrecedence) {
  auto seed_of = [&](std::vector<std::string> extra) {
    std::vector<std::string> args{"explore", theory_path("gcd"), "--max-size", "3", "--format", "json"};
    args.insert(args.end(), extra.begin(), extra.end());
    Result r = cli(args);
    EXPECT_EQ(r.code, exit_code::kOk) << r.err;
    return nlohmann::json::parse(r.out)["header"]["seed"].get<std::uint64_t>();
  };
  EXPECT_EQ(seed_of({}), 0u);
  setenv("LAWSEEKER_SEED", "11", 1);
  EXPECT_EQ(seed_of({}), 11u);
  EXPECT_EQ(seed_of({"--seed", "5"}), 5u);
}

TEST_F(Cli, TextOutputHasStagesAndStats) {
  Result r = cli({"explore", theory_path("gcd"), "--max-size", "5"});
  ASSERT_EQ(r.code, exit_code::kOk);
  EXPECT_EQ(r.out.rfind("== stage 1: 0 1 + * ==\n", 0), 0u) << r.out;
  EXPECT_NE(r.out.find("== stage 2: gcd =="), std::string::npos);
  EXPECT_NE(r.out.find("\n1. "), std::string::npos);
  EXPECT_NE(r.out.find("-- suite "), std::string::npos);
}
