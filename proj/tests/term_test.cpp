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

#include "lawseeker/term.hpp"
#include "support.hpp"

using namespace lawseeker;
using namespace lawseeker::testing;

namespace {

class GcdTerms : public ::testing::Test {
 protected:
  Theory th = bundled("gcd");
  const Signature& sig = th.signature;
  SortId nat = *sig.find_sort("Nat");
  Term t(const std::string& s) { return term(th, s); }
};

}  // namespace

TEST_F(GcdTerms, SizeCountsEveryOccurrence) {
  EXPECT_EQ(term_size(t("x")), 1u);
  EXPECT_EQ(term_size(t("0")), 1u);
  EXPECT_EQ(term_size(t("(gcd (* x y) (* x z))")), 7u);
}

TEST_F(GcdTerms, InferSort) {
  EXPECT_EQ(infer_sort(t("(+ x y)"), sig), nat);
}

TEST(Term, InferSortFindsTheBadArgument) {
  Theory maps = bundled("maps");
  const Signature& sig = maps.signature;
  Term ins = term(maps, "(insert k v m)");
  EXPECT_EQ(infer_sort(ins, sig), *sig.find_sort("Map"));

  Theory lists = bundled("lists");
  SymbolId plus = *lists.signature.find_symbol("+");
  Term bad = Term::apply(lists.signature, plus,
                         {term(lists, "n"), Term::variable(*lists.signature.find_sort("Elem"), 0)});
  try {
    infer_sort(bad, lists.signature);
    FAIL();
  } catch (const SortError& e) {
    EXPECT_EQ(e.path, std::vector<std::size_t>{2});
    EXPECT_EQ(e.expected, *lists.signature.find_sort("Nat"));
  }
}

TEST_F(GcdTerms, ApplyChecksArity) {
  EXPECT_THROW(Term::apply(sig, *sig.find_symbol("+"), {t("x")}), std::invalid_argument);
}

TEST_F(GcdTerms, MatchPattern) {
  auto s = match_pattern(t("(+ x 0)"), t("(+ (* y z) 0)"));
  ASSERT_TRUE(s);
  EXPECT_EQ(s->size(), 1u);
  EXPECT_EQ(*s->find(t("x").var()), t("(* y z)"));

  EXPECT_FALSE(match_pattern(t("(+ x x)"), t("(+ y z)")));

  auto lin = match_pattern(t("(+ x y)"), t("(+ z 1)"));
  ASSERT_TRUE(lin);
  EXPECT_EQ(apply_substitution(*lin, t("(+ x y)")), t("(+ z 1)"));
}

TEST_F(GcdTerms, ApplySubstitution) {
  Substitution s;
  s.bind(t("x").var(), t("0"));
  EXPECT_EQ(apply_substitution(s, t("(+ x x)")), t("(+ 0 0)"));
  EXPECT_EQ(apply_substitution(Substitution{}, t("(gcd x y)")), t("(gcd x y)"));
  Substitution r;
  r.bind(t("x").var(), t("y"));
  EXPECT_EQ(apply_substitution(r, t("(+ x y)")), t("(+ y y)"));
}

TEST_F(GcdTerms, CompareExamples) {
  EXPECT_GT(sign(compare_terms(t("(+ x 0)"), t("x"))), 0);
  EXPECT_EQ(sign(compare_terms(t("(* x y)"), t("(* x y)"))), 0);
  EXPECT_NE(sign(compare_terms(t("(* x y)"), t("(* y x)"))), 0);
  // Fewer distinct variables is smaller at equal size.
  EXPECT_LT(sign(compare_terms(t("(+ x x)"), t("(+ x y)"))), 0);
}

// Brute force over every term pair up to size 5.
TEST_F(GcdTerms, CompareIsATotalOrder) {
  std::vector<Term> terms;
  for (int n = 1; n <= 5; n += 2) {
    auto more = all_terms(sig, all_symbols(sig), sort_vars(sig, nat), n);
    terms.insert(terms.end(), more.begin(), more.end());
  }
  ASSERT_GT(terms.size(), 500u);
  for (const Term& a : terms) {
    for (const Term& b : terms) {
      auto ab = compare_terms(a, b);
      auto ba = compare_terms(b, a);
      EXPECT_EQ(ab == 0, a == b);
      EXPECT_EQ(ab < 0, ba > 0);
      if (a.size() > b.size()) {
        EXPECT_GT(sign(ab), 0);
      }
    }
  }
  // Transitivity on a random sample of triples.
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, terms.size() - 1);
  for (int i = 0; i < 20000; ++i) {
    const Term& a = terms[pick(rng)];
    const Term& b = terms[pick(rng)];
    const Term& c = terms[pick(rng)];
    if (compare_terms(a, b) < 0 && compare_terms(b, c) < 0) {
      EXPECT_LT(sign(compare_terms(a, c)), 0);
    }
  }
}

TEST_F(GcdTerms, MatchThenApplyGivesTheSubject) {
  auto patterns = all_terms(sig, all_symbols(sig), sort_vars(sig, nat), 3);
  std::vector<Term> subjects;
  for (int n = 1; n <= 5; n += 2) {
    auto more = all_terms(sig, all_symbols(sig), sort_vars(sig, nat), n);
    subjects.insert(subjects.end(), more.begin(), more.end());
  }
  std::size_t matched = 0;
  for (const Term& p : patterns) {
    for (const Term& s : subjects) {
      auto sigma = match_pattern(p, s);
      if (!sigma) continue;
      ++matched;
      EXPECT_EQ(apply_substitution(*sigma, p), s);
      EXPECT_EQ(sigma->size(), p.distinct_vars());
    }
  }
  EXPECT_GT(matched, 100u);
}

TEST_F(GcdTerms, CanonicalRenamingNumbersByFirstOccurrence) {
  std::vector<Term> ts{t("(+ z x)"), t("(* x y)")};
  Substitution r = canonical_renaming(ts);
  EXPECT_EQ(apply_substitution(r, ts[0]), t("(+ x y)"));
  EXPECT_EQ(apply_substitution(r, ts[1]), t("(* y z)"));
}

TEST_F(GcdTerms, Printing) {
  EXPECT_EQ(show_term(t("(gcd (* x x) (+ 1 1))"), sig), "gcd (x*x) (1+1)");
  EXPECT_EQ(to_sexpr(t("(gcd (* x x) (+ 1 1))"), sig), "(gcd (* x x) (+ 1 1))");
}
