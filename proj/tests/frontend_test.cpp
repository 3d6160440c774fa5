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

#include <random>

#include "lawseeker/frontend.hpp"
#include "support.hpp"

using namespace lawseeker;
using namespace lawseeker::testing;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

CheckCategory category_of(const std::string& text) {
  try {
    load_theory(text);
  } catch (const CheckError& e) {
    return e.category;
  }
  ADD_FAILURE() << "accepted:\n" << text;
  return CheckCategory::Malformed;
}

const char* kNames[] = {"gcd", "maps", "lists", "queue_obs"};

}  // namespace

TEST(Frontend, GcdTheoryShape) {
  std::string text = read_file(theory_path("gcd"));
  Theory th = load_theory(text);
  EXPECT_EQ(th.name, "gcd");
  // Bool is always there.
  EXPECT_EQ(th.signature.sort_count(), 1 + count(text, "(sort "));
  EXPECT_EQ(th.signature.symbol_count(), count(text, "(con "));
  // Stage 0 is the background; explicit stages count from 1.
  EXPECT_EQ(static_cast<std::size_t>(th.last_stage()), count(text, "(stage "));
  EXPECT_EQ(th.signature.symbol(*th.signature.find_symbol("gcd")).stage, 2);
}

TEST(Frontend, EmptyInputIsAParseError) {
  try {
    parse_theory("");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("expected (theory"), std::string::npos) << e.what();
  }
}

TEST(Frontend, NamesResolveOnlyWhenChecked) {
  const std::string text = R"((theory t
  (sort N (int-range 0 3) (vars "x"))
  (stage (con "+" plus))))";
  TheorySyntax syntax = parse_theory(text);
  EXPECT_EQ(syntax.stages.size(), 1u);
  try {
    check_theory(syntax);
    FAIL();
  } catch (const CheckError& e) {
    EXPECT_EQ(e.category, CheckCategory::UnknownName);
    EXPECT_EQ(text.substr(e.span.begin, e.span.end - e.span.begin), "plus");
  }
}

TEST(Frontend, CheckCategories) {
  EXPECT_EQ(category_of(R"((theory t
  (sort N (int-range 0 3) (vars "x"))
  (declare-datatype U ((U0)))
  (declare-datatype L ((LNil) (LCons (h N) (t L))))
  (define-fun view ((l L) (u U)) L l)
  (observe L (context U) (result L) (via view))
  (stage (con "nil" (lit 0 N)))))"),
            CheckCategory::BadObservation);

  EXPECT_EQ(category_of(R"((theory t
  (declare-datatype S ((More (rest S))))
  (stage)))"),
            CheckCategory::NoBaseConstructor);

  EXPECT_EQ(category_of(R"((theory t
  (sort N (int-range 0 3) (vars "x"))
  (stage (con "0" (lit 0 N)))
  (stage)))"),
            CheckCategory::EmptyStage);

  EXPECT_EQ(category_of(R"((theory t
  (sort N (int-range 0 3) (vars "x"))
  (define-fun f ((a N)) N a)
  (define-fun f ((a N)) N a)
  (stage (con "f" f))))"),
            CheckCategory::DuplicateName);

  EXPECT_EQ(category_of(read_file(data_path("broken.thy"))), CheckCategory::SortMismatch);
}

TEST(Frontend, DiagnosticsPointAtTheSource) {
  std::string text = read_file(data_path("broken.thy"));
  try {
    load_theory(text);
    FAIL();
  } catch (const CheckError& e) {
    std::string d = format_diagnostic("broken.thy", text, e.span, e.what());
    std::string head = "broken.thy:" + std::to_string(e.span.line) + ":" + std::to_string(e.span.column) + ": error: ";
    EXPECT_EQ(d.rfind(head, 0), 0u) << d;
    EXPECT_NE(d.find('^'), std::string::npos);
  }
}

TEST(Frontend, PrintedTheoriesReloadIdentically) {
  for (const char* name : kNames) {
    Theory th = bundled(name);
    std::string printed = print_theory(th);
    Theory again = load_theory(printed);
    EXPECT_EQ(print_theory(again), printed) << name;
    EXPECT_EQ(again.signature.symbol_count(), th.signature.symbol_count());
    EXPECT_EQ(again.signature.sort_count(), th.signature.sort_count());
    EXPECT_EQ(again.functions.size(), th.functions.size());
  }
}

// Damaged files either load or fail with a located error.
TEST(Frontend, MutatedInputsFailCleanly) {
  std::mt19937_64 rng(5);
  const std::string alphabet = "() \"x0-;Nmatch";
  int rejected = 0;
  for (const char* name : kNames) {
    const std::string original = read_file(theory_path(name));
    for (int i = 0; i < 150; ++i) {
      std::string text = original;
      int edits = 1 + static_cast<int>(rng() % 3);
      for (int k = 0; k < edits && !text.empty(); ++k) {
        std::size_t at = rng() % text.size();
        if (rng() % 2) {
          text.erase(at, 1 + rng() % 4);
        } else {
          text.insert(at, 1, alphabet[rng() % alphabet.size()]);
        }
      }
      SourceSpan span{};
      try {
        load_theory(text);
        continue;
      } catch (const ParseError& e) {
        span = e.span;
      } catch (const CheckError& e) {
        span = e.span;
      }
      ++rejected;
      EXPECT_LE(span.begin, span.end);
      EXPECT_LE(span.end, text.size());
      EXPECT_GE(span.line, 1u);
      EXPECT_FALSE(format_diagnostic("m.thy", text, span, "bad").empty());
    }
  }
  EXPECT_GT(rejected, 100);
}
