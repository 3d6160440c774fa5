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

#include "lawseeker/sexpr.hpp"

using namespace lawseeker;

TEST(Sexpr, ReadsNestedLists) {
  auto items = parse_sexprs("(a (b -3) \"s t\") ; trailing comment\n42");
  ASSERT_EQ(items.size(), 2u);
  const SExpr& e = items[0];
  ASSERT_TRUE(e.is_list());
  EXPECT_EQ(e.head(), "a");
  ASSERT_EQ(e.items.size(), 3u);
  EXPECT_TRUE(e.items[1].items[1].is_integer());
  EXPECT_EQ(e.items[1].items[1].text, "-3");
  EXPECT_TRUE(e.items[2].is_string());
  EXPECT_EQ(e.items[2].text, "s t");
  EXPECT_TRUE(items[1].is_integer());
}

TEST(Sexpr, SpansPointIntoTheText) {
  std::string text = "(x\n  (y z))";
  auto items = parse_sexprs(text);
  const SExpr& y = items[0].items[1].items[0];
  EXPECT_EQ(y.span.line, 2u);
  EXPECT_EQ(y.span.column, 4u);
  EXPECT_EQ(text.substr(y.span.begin, y.span.end - y.span.begin), "y");
}

TEST(Sexpr, MinusAloneIsASymbol) {
  auto items = parse_sexprs("(- a b)");
  EXPECT_TRUE(items[0].items[0].is_symbol("-"));
}

TEST(Sexpr, UnbalancedInputIsAnError) {
  EXPECT_THROW(parse_sexprs("(a (b)"), ParseError);
  EXPECT_THROW(parse_sexprs("a)"), ParseError);
  EXPECT_THROW(parse_sexprs("\"open"), ParseError);
}

TEST(Sexpr, ErrorSpansStayInsideTheText) {
  const std::string cases[] = {"(", "((a)", ")", "(a \"b", "\"", "(a))"};
  for (const std::string& text : cases) {
    try {
      parse_sexprs(text);
      ADD_FAILURE() << text;
    } catch (const ParseError& e) {
      EXPECT_LE(e.span.begin, e.span.end) << text;
      EXPECT_LE(e.span.end, text.size()) << text;
    }
  }
}

TEST(Sexpr, PrintThenParseIsStable) {
  auto items = parse_sexprs("(theory t (sort N (int-range 0 -4) (vars \"x\" \"y\")))");
  std::string once = print_sexpr(items[0]);
  std::string twice = print_sexpr(parse_sexprs(once)[0]);
  EXPECT_EQ(once, twice);
}
