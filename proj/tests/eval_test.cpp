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

#include <map>
#include <numeric>
#include <set>

#include "lawseeker/eval.hpp"
#include "support.hpp"

using namespace lawseeker;
using namespace lawseeker::testing;

namespace {

const char* kArith = R"(
(theory arith
  (sort Int (int-range -6 6) (vars "a" "b" "c"))
  (sort Small (int-range 0 30) (vars "n"))
  (define-fun q ((x Int) (y Int)) Int (div x y))
  (define-fun r ((x Int) (y Int)) Int (mod x y))
  (define-fun only_one ((x Int)) Int (match x (1 0)))
  (define-fun never ((x Int) (y Int)) Bool false)
  (define-fun-rec spin ((x Int)) Int (spin x))
  (predicate "never" never)
  (stage (con "q" q) (con "r" r) (con "only_one" only_one) (con "spin" spin)))
)";

// A case where every variable is `fill` unless named in `values`.
TestCase make_case(const Theory& th, const std::map<std::string, Value>& values) {
  TestCase tc;
  const Signature& sig = th.signature;
  tc.valuation.resize(sig.sort_count());
  tc.contexts.resize(sig.sort_count());
  for (std::uint32_t s = 0; s < sig.sort_count(); ++s) {
    const SortInfo& info = sig.sort(SortId{s});
    for (const std::string& name : info.var_names) {
      auto it = values.find(name);
      tc.valuation[s].push_back(it != values.end() ? it->second : Value::integer(0));
    }
  }
  return tc;
}

Value num(long v) { return Value::integer(Integer(v)); }

// Euclidean division: remainder always in [0, |b|).
std::pair<long, long> euclid(long a, long b) {
  long q = a / b, r = a % b;
  if (r < 0) {
    r += b < 0 ? -b : b;
    q = (a - r) / b;
  }
  return {q, r};
}

}  // namespace

TEST(Eval, PeanoAddition) {
  Theory th = bundled("lists");
  Outcome o = eval_term(term(th, "(+ (S (S Z)) (S Z))"), make_case(th, {}), th, 1000);
  ASSERT_TRUE(o.is_defined());
  EXPECT_EQ(show_value(o.value(), th), "S (S (S Z))");
}

TEST(Eval, GcdAgreesWithTheStandardLibrary) {
  Theory th = bundled("gcd");
  Term g = term(th, "(gcd x y)");
  EXPECT_EQ(eval_term(g, make_case(th, {{"x", num(12)}, {"y", num(8)}}), th, 1000).value(), num(4));
  for (long a = 0; a <= 30; ++a) {
    for (long b = 0; b <= 30; ++b) {
      Outcome o = eval_term(g, make_case(th, {{"x", num(a)}, {"y", num(b)}}), th, 100000);
      ASSERT_TRUE(o.is_defined());
      EXPECT_EQ(o.value(), num(std::gcd(a, b))) << a << " " << b;
    }
  }
}

TEST(Eval, DivisionIsEuclidean) {
  Theory th = load_theory(kArith);
  Term q = term(th, "(q a b)"), r = term(th, "(r a b)");
  for (long a = -6; a <= 6; ++a) {
    for (long b = -6; b <= 6; ++b) {
      TestCase tc = make_case(th, {{"a", num(a)}, {"b", num(b)}});
      Outcome oq = eval_term(q, tc, th, 100), orr = eval_term(r, tc, th, 100);
      if (b == 0) {
        ASSERT_FALSE(oq.is_defined());
        EXPECT_EQ(oq.reason(), UndefinedReason::DivByZero);
        EXPECT_EQ(orr.reason(), UndefinedReason::DivByZero);
        continue;
      }
      auto [eq, er] = euclid(a, b);
      EXPECT_EQ(oq.value(), num(eq)) << a << " div " << b;
      EXPECT_EQ(orr.value(), num(er)) << a << " mod " << b;
    }
  }
}

TEST(Eval, PartialMatchAndFuel) {
  Theory th = load_theory(kArith);
  TestCase tc = make_case(th, {{"a", num(2)}});
  Outcome partial = eval_term(term(th, "(only_one a)"), tc, th, 100);
  ASSERT_FALSE(partial.is_defined());
  EXPECT_EQ(partial.reason(), UndefinedReason::PartialMatch);

  Outcome spin = eval_term(term(th, "(spin a)"), tc, th, 5000);
  ASSERT_FALSE(spin.is_defined());
  EXPECT_EQ(spin.reason(), UndefinedReason::FuelExhausted);

  Theory gcd = bundled("gcd");
  Outcome starved = eval_term(term(gcd, "(gcd (+ x 1) y)"), make_case(gcd, {{"x", num(3)}}), gcd, 1);
  ASSERT_FALSE(starved.is_defined());
  EXPECT_EQ(starved.reason(), UndefinedReason::FuelExhausted);
}

TEST(Eval, MoreFuelNeverChangesADefinedResult) {
  Theory th = bundled("gcd");
  const char* terms[] = {"(gcd x y)", "(gcd (* x y) (+ x z))", "(* (gcd x (+ y 1)) z)"};
  RandomStream rng(3, 0);
  for (const char* text : terms) {
    Term t = term(th, text);
    for (int i = 0; i < 50; ++i) {
      TestCase tc = make_case(th, {{"x", Value::integer(rng.in_range(0, 20))},
                                   {"y", Value::integer(rng.in_range(0, 20))},
                                   {"z", Value::integer(rng.in_range(0, 20))}});
      std::optional<Outcome> first;
      for (std::int64_t f = 1; f <= 64; ++f) {
        Outcome o = eval_term(t, tc, th, f);
        if (first) {
          EXPECT_EQ(o, *first);
        } else if (o.is_defined()) {
          first = o;
        }
      }
      EXPECT_TRUE(first.has_value());
    }
  }
}

TEST(Generate, IntegerRangeIsCovered) {
  Theory th = load_theory(kArith);
  SortId small = *th.signature.find_sort("Small");
  RandomStream rng(0, 5);
  std::set<long> seen;
  for (int i = 0; i < 10000; ++i) {
    Value v = generate_value(th, small, 10, rng);
    long n = v.as_int().convert_to<long>();
    ASSERT_GE(n, 0);
    ASSERT_LE(n, 30);
    seen.insert(n);
  }
  for (long n = 0; n <= 5; ++n) EXPECT_TRUE(seen.count(n)) << n;
}

TEST(Generate, ZeroBudgetGivesTheBaseConstructor) {
  Theory th = bundled("lists");
  RandomStream rng(0, 5);
  for (int i = 0; i < 20; ++i) {
    EXPECT_EQ(show_value(generate_value(th, *th.signature.find_sort("List"), 0, rng), th), "Nil");
  }
}

TEST(Generate, DepthStaysWithinTheBudget) {
  Theory th = bundled("lists");
  SortId list = *th.signature.find_sort("List");
  RandomStream rng(9, 1);
  for (int budget = 0; budget < 12; ++budget) {
    for (int i = 0; i < 100; ++i) {
      Value v = generate_value(th, list, budget, rng);
      EXPECT_LE(v.depth(), static_cast<std::size_t>(budget) + 1);
    }
  }
}

TEST(Generate, NoFiniteValueIsAnError) {
  Theory th = Theory::empty("loop");
  SortInfo info;
  info.name = "Stream";
  info.kind = SortKind::Datatype;
  info.var_names = {"s"};
  SortId s = th.signature.add_sort(info);
  th.constructors.push_back(Constructor{"More", s, {Field{"rest", s}}});
  th.signature.sort(s).constructors = {0};
  th.finalize();
  RandomStream rng(0, 0);
  EXPECT_THROW(generate_value(th, s, 5, rng), GeneratorError);
}

TEST(Generate, TestCasesAreDeterministic) {
  Theory th = bundled("maps");
  RandomStream a(42, streams::kSuite), b(42, streams::kSuite);
  for (int i = 0; i < 20; ++i) {
    EXPECT_EQ(generate_testcase(th, th.config, a), generate_testcase(th, th.config, b));
  }
  RandomStream c(43, streams::kSuite), d(42, streams::kSuite);
  int same = 0;
  for (int i = 0; i < 20; ++i) same += generate_testcase(th, th.config, c) == generate_testcase(th, th.config, d);
  EXPECT_LT(same, 20);
}

TEST(Generate, ConditionsAreRejectionSampled) {
  const char* text = R"(
(theory keys
  (sort Key (int-range 0 20) (vars "k" "k2"))
  (define-fun different ((a Key) (b Key)) Bool (distinct a b))
  (predicate "/=" different)
  (stage (con "different" different))))";
  Theory th = load_theory(text);
  SortId key = *th.signature.find_sort("Key");
  Condition cond{0, {Variable{key, 0}, Variable{key, 1}}};
  RandomStream rng(1, 1);
  for (int i = 0; i < 200; ++i) {
    TestCase tc = generate_testcase(th, th.config, rng, cond);
    EXPECT_NE(tc.valuation[key.index][0], tc.valuation[key.index][1]);
    EXPECT_TRUE(condition_holds(th, tc, cond, 100));
  }

  Theory never = load_theory(kArith);
  SortId i = *never.signature.find_sort("Int");
  RandomStream r2(1, 1);
  EXPECT_THROW(generate_testcase(never, never.config, r2, Condition{0, {Variable{i, 0}, Variable{i, 1}}}),
               ConditionExhausted);
}

TEST(Observe, UnobservedSortsAreSeenDirectly) {
  Theory th = bundled("gcd");
  auto seen = observe_value(num(5), *th.signature.find_sort("Nat"), {}, th, 100);
  ASSERT_EQ(seen.size(), 1u);
  EXPECT_EQ(seen[0], Outcome::defined(num(5)));
}

TEST(Observe, QueuesAreSeenThroughToList) {
  Theory th = bundled("queue_obs");
  SortId queue = *th.signature.find_sort("Queue");
  const Value unit = Value::constructed(*th.find_constructor("U"), {});
  const CtorIndex nil = *th.find_constructor("Nil"), cons = *th.find_constructor("Cons"), q = *th.find_constructor("Q");
  auto list1 = Value::constructed(cons, {num(1), Value::constructed(nil, {})});
  auto empty = Value::constructed(nil, {});

  Outcome pushed = eval_term(term(th, "(push x empty)"), make_case(th, {{"x", num(1)}}), th, 100);
  ASSERT_TRUE(pushed.is_defined());
  std::vector<Value> contexts{unit};
  auto seen = observe_value(pushed.value(), queue, contexts, th, 100);
  ASSERT_EQ(seen.size(), 1u);
  EXPECT_EQ(seen[0], Outcome::defined(list1));

  // The same queue with its element in front, or at the back.
  Value front = Value::constructed(q, {list1, empty});
  Value back = Value::constructed(q, {empty, list1});
  EXPECT_NE(front, back);
  EXPECT_EQ(observe_value(front, queue, contexts, th, 100), observe_value(back, queue, contexts, th, 100));
  EXPECT_NE(observe_value(front, queue, contexts, th, 100, false),
            observe_value(back, queue, contexts, th, 100, false));
}

TEST(Fingerprint, OutcomesFollowTheSuite) {
  Theory th = bundled("gcd");
  std::vector<TestCase> suite{make_case(th, {{"x", num(2)}, {"y", num(3)}}),
                              make_case(th, {{"x", num(0)}, {"y", num(1)}})};
  Fingerprint fp = fingerprint(term(th, "(+ x y)"), suite, th, th.config);
  ASSERT_EQ(fp.outcomes.size(), 2u);
  EXPECT_EQ(fp.outcomes[0], Outcome::defined(num(5)));
  EXPECT_EQ(fp.outcomes[1], Outcome::defined(num(1)));
  EXPECT_TRUE(fp.fully_defined());

  std::vector<TestCase> one{make_case(th, {{"x", num(1)}, {"y", num(2)}})};
  EXPECT_NE(fingerprint(term(th, "(+ x y)"), one, th, th.config).digest,
            fingerprint(term(th, "(* x y)"), one, th, th.config).digest);
}

TEST(Fingerprint, CommutedSumsAgreeOnRandomSuites) {
  Theory th = bundled("gcd");
  RandomStream rng(0, streams::kSuite);
  std::vector<TestCase> suite;
  for (int i = 0; i < 50; ++i) suite.push_back(generate_testcase(th, th.config, rng));
  Fingerprint a = fingerprint(term(th, "(+ x y)"), suite, th, th.config);
  Fingerprint b = fingerprint(term(th, "(+ y x)"), suite, th, th.config);
  EXPECT_EQ(a.outcomes, b.outcomes);
  EXPECT_EQ(a.digest, b.digest);
}

TEST(Fingerprint, MostlyUndefinedTermsAreUnreliable) {
  Theory th = load_theory(kArith);
  std::vector<TestCase> suite;
  for (long v = -6; v <= 6; ++v) suite.push_back(make_case(th, {{"a", num(v)}}));
  Fingerprint fp = fingerprint(term(th, "(only_one a)"), suite, th, th.config);
  EXPECT_EQ(fp.undefined_cases, 12u);
  EXPECT_TRUE(fp.unreliable());
  EXPECT_FALSE(fingerprint(term(th, "(q a a)"), suite, th, th.config).unreliable());
}
