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

#include "lawseeker/rewrite.hpp"
#include "support.hpp"

using namespace lawseeker;
using namespace lawseeker::testing;

namespace {

class Rewrite : public ::testing::Test {
 protected:
  Theory th = bundled("gcd");
  const Signature& sig = th.signature;
  SortId nat = *sig.find_sort("Nat");
  Term t(const std::string& s) { return term(th, s); }

  // Laws of the arithmetic stage, in a plausible discovery order.
  EquationStore arithmetic() {
    EquationStore s;
    s.add(t("(+ x y)"), t("(+ y x)"));
    s.add(t("(* x y)"), t("(* y x)"));
    s.add(t("(+ 0 x)"), t("x"));
    s.add(t("(* 0 x)"), t("0"));
    s.add(t("(* 1 x)"), t("x"));
    s.add(t("(+ x (+ y z))"), t("(+ y (+ x z))"));
    s.add(t("(* x (* y z))"), t("(* y (* x z))"));
    s.add(t("(+ (* x y) (* x z))"), t("(* x (+ y z))"));
    return s;
  }

  Term random_term(std::mt19937_64& rng, int depth) {
    std::uniform_int_distribution<int> coin(0, 5);
    int c = coin(rng);
    if (depth == 0 || c < 2) {
      static const char* leaves[] = {"x", "y", "z", "0", "1"};
      return t(leaves[std::uniform_int_distribution<int>(0, 4)(rng)]);
    }
    static const char* ops[] = {"+", "*", "gcd"};
    SymbolId f = *sig.find_symbol(ops[c % 3]);
    return Term::apply(sig, f, {random_term(rng, depth - 1), random_term(rng, depth - 1)});
  }
};

// One rewrite step anywhere, written directly against the definitions.
bool reducible_by(const Term& u, const std::vector<Rule>& rules, const std::vector<std::pair<Term, Term>>& eqs) {
  for (const Rule& r : rules) {
    if (match_pattern(r.lhs, u)) return true;
  }
  for (const auto& [a, b] : eqs) {
    for (int flip = 0; flip < 2; ++flip) {
      const Term& from = flip ? b : a;
      const Term& to = flip ? a : b;
      auto s = match_pattern(from, u);
      if (!s) continue;
      Term out = apply_substitution(*s, to);
      bool fresh = false;
      for (const Variable& v : out.vars()) fresh = fresh || !u.contains_var(v);
      if (!fresh && compare_terms(u, out) > 0) return true;
    }
  }
  for (const Term& a : u.args()) {
    if (reducible_by(a, rules, eqs)) return true;
  }
  return false;
}

}  // namespace

TEST_F(Rewrite, OrientExamples) {
  auto r = orient(t("(* x 0)"), t("0"));
  ASSERT_TRUE(r);
  EXPECT_EQ(r->lhs, t("(* x 0)"));
  EXPECT_EQ(r->rhs, t("0"));

  EXPECT_FALSE(orient(t("(+ x y)"), t("(+ y x)")));

  auto flipped = orient(t("x"), t("(+ x 0)"));
  ASSERT_TRUE(flipped);
  EXPECT_EQ(flipped->lhs, t("(+ x 0)"));
  EXPECT_EQ(flipped->rhs, t("x"));

  // The smaller side may not use a variable more often.
  EXPECT_FALSE(orient(t("(gcd x (+ y 1))"), t("(* x x)")));
}

TEST_F(Rewrite, NormalFormExamples) {
  EquationStore s;
  s.add(t("(+ x 0)"), t("x"));
  s.add(t("(* x 0)"), t("0"));
  EXPECT_EQ(s.normal_form(t("(* (+ y 0) (* z 0))")), t("0"));
  EXPECT_EQ(EquationStore{}.normal_form(t("(gcd x y)")), t("(gcd x y)"));
}

TEST_F(Rewrite, OrderedRewritingSortsCommutativeArguments) {
  EquationStore s;
  s.add(t("(+ x y)"), t("(+ y x)"));
  Term ba = t("(+ y x)");
  Term ab = t("(+ x y)");
  Term smaller = compare_terms(ab, ba) < 0 ? ab : ba;
  EXPECT_EQ(s.normal_form(ab), smaller);
  EXPECT_EQ(s.normal_form(ba), smaller);
  EXPECT_EQ(s.unoriented().size(), 1u);
  EXPECT_TRUE(s.oriented().empty());
}

TEST_F(Rewrite, Redundancy) {
  EquationStore s;
  s.add(t("(+ x 0)"), t("x"));
  s.add(t("(+ 0 x)"), t("x"));
  EXPECT_TRUE(s.is_redundant(t("(+ 0 y)"), t("(+ y 0)")));
  EXPECT_FALSE(EquationStore{}.is_redundant(t("(+ x y)"), t("(+ y x)")));

  EquationStore only;
  only.add(t("(+ x 0)"), t("x"));
  EXPECT_NE(only.normal_form(t("(+ (+ x y) z)")), only.normal_form(t("(+ x (+ y z))")));
  EXPECT_FALSE(only.is_redundant(t("(+ (+ x y) z)"), t("(+ x (+ y z))")));
}

TEST_F(Rewrite, AddSkipsJoinableAndDegenerateLaws) {
  EquationStore s;
  EXPECT_EQ(s.add(t("(+ x 0)"), t("x")), EquationStore::AddResult::Oriented);
  EXPECT_EQ(s.add(t("(+ (+ x 0) 0)"), t("x")), EquationStore::AddResult::Redundant);
  EXPECT_EQ(s.add(t("(+ y 0)"), t("z")), EquationStore::AddResult::Degenerate);
  EXPECT_EQ(s.size(), 1u);
}

TEST_F(Rewrite, NormalFormProperties) {
  EquationStore s = arithmetic();
  for (const Rule& r : s.oriented()) EXPECT_GT(sign(compare_terms(r.lhs, r.rhs)), 0);
  for (const auto& [a, b] : s.unoriented()) EXPECT_GT(sign(compare_terms(a, b)), 0);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    Term u = random_term(rng, 4);
    Term n = s.normal_form(u);
    EXPECT_EQ(s.normal_form(n), n);
    EXPECT_LE(sign(compare_terms(n, u)), 0);
    EXPECT_FALSE(reducible_by(n, s.oriented(), s.unoriented())) << show_term(n, sig);
    EXPECT_EQ(s.is_reducible(u), !(n == u));
  }
}

TEST_F(Rewrite, GuardedLawsNeedTheirContext) {
  EquationStore s;
  Variable x = t("x").var(), y = t("y").var();
  s.add(t("(gcd x y)"), t("1"), Guard{0, {x, y}});
  GuardContext ctx{0, {x, y}};
  GuardContext other{0, {y, x}};
  EXPECT_EQ(s.normal_form(t("(gcd x y)")), t("(gcd x y)"));
  EXPECT_EQ(s.normal_form(t("(gcd x y)"), &ctx), t("1"));
  EXPECT_EQ(s.normal_form(t("(gcd x y)"), &other), t("(gcd x y)"));
  EXPECT_EQ(s.normal_form(t("(gcd y x)"), &other), t("1"));
}

TEST_F(Rewrite, DerivableButNotJoinable) {
  EquationStore s;
  s.add(t("(+ x y)"), t("(+ y x)"));
  s.add(t("(+ x (+ y z))"), t("(+ y (+ x z))"));
  Term a = t("(+ (+ x y) (gcd y z))");
  Term b = t("(+ x (+ y (gcd y z)))");
  EXPECT_FALSE(s.is_redundant(a, b));
  EXPECT_TRUE(s.is_derivable(a, b, a.size(), 2000));
  // A false law is never derivable.
  EXPECT_FALSE(s.is_derivable(t("(+ x (gcd y z))"), t("(* x (gcd y z))"), 5, 2000));
}

TEST_F(Rewrite, InstancesOfUnusableLawsAreDerivable) {
  EquationStore s;
  // Neither side can be rewritten into the other: each has its own variable.
  s.add(t("(* x (* y 0))"), t("(* x (* z 0))"));
  EXPECT_TRUE(s.is_derivable(t("(* y (* z 0))"), t("(* y (* x 0))"), 5, 10));
  EXPECT_TRUE(s.is_derivable(t("(gcd 1 (* y (* z 0)))"), t("(gcd 1 (* y (* x 0)))"), 7, 10));
  EXPECT_FALSE(s.is_derivable(t("(* y (* z 1))"), t("(* y (* x 1))"), 5, 10));
}
