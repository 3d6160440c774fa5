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

#include "lawseeker/eval.hpp"

#include <algorithm>

namespace lawseeker {

namespace {

/// Tree-walking interpreter for checked function bodies. Failures are
/// reported through `reason_` rather than exceptions since partial
/// functions fail routinely while fingerprinting.
class Interpreter {
 public:
  Interpreter(const Theory& theory, Fuel& fuel) : theory_(theory), fuel_(fuel) {}

  Outcome call(std::uint32_t fn, std::span<const Value> args) {
    Value out;
    if (!call_into(fn, args, out)) return Outcome::undefined(reason_);
    return Outcome::defined(std::move(out));
  }

 private:
  bool fail(UndefinedReason r) {
    reason_ = r;
    return false;
  }

  bool call_into(std::uint32_t fn, std::span<const Value> args, Value& out) {
    if (!fuel_.spend() || depth_ >= kMaxCallDepth) return fail(UndefinedReason::FuelExhausted);
    const Function& f = theory_.functions.at(fn);
    std::vector<Value> frame(std::max<std::size_t>(f.frame_size, args.size()));
    std::copy(args.begin(), args.end(), frame.begin());
    ++depth_;
    bool ok = eval(*f.body, frame, out);
    --depth_;
    return ok;
  }

  bool eval(const Expr& e, std::vector<Value>& frame, Value& out) {
    switch (e.kind) {
      case Expr::Kind::Local:
        out = frame[e.slot];
        return true;
      case Expr::Kind::IntLit:
        out = Value::integer(e.int_value);
        return true;
      case Expr::Kind::BoolLit:
        out = Value::boolean(e.bool_value);
        return true;
      case Expr::Kind::Call:
      case Expr::Kind::Construct: {
        std::vector<Value> args(e.args.size());
        for (std::size_t i = 0; i < e.args.size(); ++i) {
          if (!eval(*e.args[i], frame, args[i])) return false;
        }
        if (e.kind == Expr::Kind::Construct) {
          out = Value::constructed(e.target, std::move(args));
          return true;
        }
        return call_into(e.target, args, out);
      }
      case Expr::Kind::Builtin:
        return builtin(e, frame, out);
      case Expr::Kind::Ite: {
        Value c;
        if (!eval(*e.args[0], frame, c)) return false;
        return eval(c.as_bool() ? *e.args[1] : *e.args[2], frame, out);
      }
      case Expr::Kind::Match: {
        Value scrutinee;
        if (!eval(*e.args[0], frame, scrutinee)) return false;
        for (const MatchArm& arm : e.arms) {
          if (bind(arm.pattern, scrutinee, frame)) return eval(*arm.body, frame, out);
        }
        return fail(UndefinedReason::PartialMatch);
      }
      case Expr::Kind::Let:
        for (const LetBinding& b : e.bindings) {
          if (!eval(*b.value, frame, frame[b.slot])) return false;
        }
        return eval(*e.args[0], frame, out);
    }
    return fail(UndefinedReason::PartialMatch);
  }

  static bool bind(const Pattern& p, const Value& v, std::vector<Value>& frame) {
    switch (p.kind) {
      case Pattern::Kind::Wildcard:
        return true;
      case Pattern::Kind::Bind:
        frame[p.slot] = v;
        return true;
      case Pattern::Kind::Int:
        return v.as_int() == p.int_value;
      case Pattern::Kind::Bool:
        return v.as_bool() == p.bool_value;
      case Pattern::Kind::Constructor: {
        if (v.ctor() != p.ctor) return false;
        auto fields = v.fields();
        for (std::size_t i = 0; i < p.args.size(); ++i) {
          if (!bind(p.args[i], fields[i], frame)) return false;
        }
        return true;
      }
    }
    return false;
  }

  bool builtin(const Expr& e, std::vector<Value>& frame, Value& out) {
    // and/or short-circuit; everything else is strict.
    if (e.op == BuiltinOp::And || e.op == BuiltinOp::Or) {
      const bool stop_on = e.op == BuiltinOp::Or;
      for (const ExprPtr& a : e.args) {
        Value v;
        if (!eval(*a, frame, v)) return false;
        if (v.as_bool() == stop_on) {
          out = Value::boolean(stop_on);
          return fuel_.spend() || fail(UndefinedReason::FuelExhausted);
        }
      }
      out = Value::boolean(!stop_on);
      return fuel_.spend() || fail(UndefinedReason::FuelExhausted);
    }
    std::vector<Value> args(e.args.size());
    for (std::size_t i = 0; i < e.args.size(); ++i) {
      if (!eval(*e.args[i], frame, args[i])) return false;
    }
    if (!fuel_.spend()) return fail(UndefinedReason::FuelExhausted);
    return apply_builtin(e.op, args, out);
  }

  bool apply_builtin(BuiltinOp op, const std::vector<Value>& a, Value& out) {
    auto ints = [&](auto f) {
      Integer acc = a[0].as_int();
      for (std::size_t i = 1; i < a.size(); ++i) acc = f(acc, a[i].as_int());
      out = Value::integer(std::move(acc));
      return true;
    };
    auto chain = [&](auto rel) {
      bool ok = true;
      for (std::size_t i = 0; i + 1 < a.size() && ok; ++i) ok = rel(a[i].as_int(), a[i + 1].as_int());
      out = Value::boolean(ok);
      return true;
    };
    switch (op) {
      case BuiltinOp::Add:
        return ints([](const Integer& x, const Integer& y) { return Integer(x + y); });
      case BuiltinOp::Sub:
        if (a.size() == 1) {
          out = Value::integer(-a[0].as_int());
          return true;
        }
        return ints([](const Integer& x, const Integer& y) { return Integer(x - y); });
      case BuiltinOp::Mul:
        return ints([](const Integer& x, const Integer& y) { return Integer(x * y); });
      case BuiltinOp::Max:
        return ints([](const Integer& x, const Integer& y) { return x < y ? y : x; });
      case BuiltinOp::Min:
        return ints([](const Integer& x, const Integer& y) { return y < x ? y : x; });
      case BuiltinOp::Div:
      case BuiltinOp::Mod: {
        const Integer& x = a[0].as_int();
        const Integer& y = a[1].as_int();
        if (y == 0) return fail(UndefinedReason::DivByZero);
        // Euclidean: 0 <= r < |y|.
        Integer r = x % y;
        if (r < 0) r += abs(y);
        out = Value::integer(op == BuiltinOp::Mod ? r : Integer((x - r) / y));
        return true;
      }
      case BuiltinOp::Eq: {
        bool all = std::all_of(a.begin(), a.end(), [&](const Value& v) { return v == a[0]; });
        out = Value::boolean(all);
        return true;
      }
      case BuiltinOp::Distinct: {
        bool distinct = true;
        for (std::size_t i = 0; i < a.size() && distinct; ++i) {
          for (std::size_t j = i + 1; j < a.size() && distinct; ++j) distinct = !(a[i] == a[j]);
        }
        out = Value::boolean(distinct);
        return true;
      }
      case BuiltinOp::Lt:
        return chain([](const Integer& x, const Integer& y) { return x < y; });
      case BuiltinOp::Le:
        return chain([](const Integer& x, const Integer& y) { return x <= y; });
      case BuiltinOp::Gt:
        return chain([](const Integer& x, const Integer& y) { return x > y; });
      case BuiltinOp::Ge:
        return chain([](const Integer& x, const Integer& y) { return x >= y; });
      case BuiltinOp::Not:
        out = Value::boolean(!a[0].as_bool());
        return true;
      case BuiltinOp::And:
      case BuiltinOp::Or:
        break;
    }
    return fail(UndefinedReason::PartialMatch);
  }

  const Theory& theory_;
  Fuel& fuel_;
  int depth_ = 0;
  UndefinedReason reason_ = UndefinedReason::PartialMatch;
};

Outcome eval_with(const Term& t, const TestCase& tc, const Theory& theory, Fuel& fuel) {
  if (t.is_var()) return Outcome::defined(tc.value_of(t.var()));
  std::vector<Value> args;
  args.reserve(t.args().size());
  for (const Term& a : t.args()) {
    Outcome o = eval_with(a, tc, theory, fuel);
    if (!o.is_defined()) return o;
    args.push_back(o.value());
  }
  return apply_symbol(theory, t.symbol(), args, fuel);
}

}  // namespace

std::string_view reason_name(UndefinedReason r) {
  switch (r) {
    case UndefinedReason::FuelExhausted:
      return "fuel exhausted";
    case UndefinedReason::PartialMatch:
      return "partial match";
    case UndefinedReason::DivByZero:
      return "division by zero";
  }
  return "?";
}

Outcome call_function(const Theory& theory, std::uint32_t fn, std::span<const Value> args, Fuel& fuel) {
  return Interpreter(theory, fuel).call(fn, args);
}

Outcome apply_symbol(const Theory& theory, SymbolId symbol, std::span<const Value> args, Fuel& fuel) {
  const SymbolRef& ref = theory.signature.symbol(symbol).ref;
  switch (ref.kind) {
    case SymbolRef::Kind::Function:
      return call_function(theory, ref.index, args, fuel);
    case SymbolRef::Kind::Constructor:
      return Outcome::defined(Value::constructed(ref.index, {args.begin(), args.end()}));
    case SymbolRef::Kind::Literal:
      return Outcome::defined(ref.literal);
  }
  return Outcome::undefined(UndefinedReason::PartialMatch);
}

Outcome eval_term(const Term& t, const TestCase& tc, const Theory& theory, std::int64_t fuel) {
  Fuel f(fuel);
  return eval_with(t, tc, theory, f);
}

std::vector<Outcome> observe_value(const Value& v, SortId sort, std::span<const Value> contexts,
                                   const Theory& theory, std::int64_t fuel, bool observe) {
  const ObservationSpec* spec = observe ? theory.observation_for(sort) : nullptr;
  if (!spec) return {Outcome::defined(v)};
  std::vector<Outcome> out;
  out.reserve(contexts.size());
  for (const Value& c : contexts) {
    Fuel f(fuel);
    const Value args[] = {c, v};
    out.push_back(call_function(theory, spec->function, args, f));
  }
  return out;
}

std::vector<Outcome> observe_outcome(const Outcome& o, SortId sort, const TestCase& tc,
                                     const Theory& theory, std::int64_t fuel, bool observe) {
  const ObservationSpec* spec = observe ? theory.observation_for(sort) : nullptr;
  if (o.is_defined()) {
    std::span<const Value> contexts;
    if (spec) contexts = tc.contexts.at(sort.index);
    return observe_value(o.value(), sort, contexts, theory, fuel, observe);
  }
  std::size_t n = spec ? tc.contexts.at(sort.index).size() : 1;
  return std::vector<Outcome>(n, o);
}

std::uint64_t outcome_hash(const Outcome& o) {
  if (!o.is_defined()) return hash_mix(0xdeadULL, static_cast<std::uint64_t>(o.reason()));
  return o.value().hash();
}

void extend_fingerprint(Fingerprint& fp, std::span<const Outcome> case_outcomes) {
  bool any_undefined = false;
  for (const Outcome& o : case_outcomes) {
    fp.digest = hash_mix(fp.digest, outcome_hash(o));
    if (!o.is_defined()) {
      ++fp.undefined;
      any_undefined = true;
    }
    fp.outcomes.push_back(o);
  }
  fp.digest = hash_mix(fp.digest, 0x5eedULL);
  ++fp.cases;
  if (any_undefined) ++fp.undefined_cases;
}

Fingerprint fingerprint(const Term& t, std::span<const TestCase> suite, const Theory& theory,
                        const Config& config) {
  Fingerprint fp;
  for (const TestCase& tc : suite) {
    Outcome o = eval_term(t, tc, theory, config.fuel);
    extend_fingerprint(fp, observe_outcome(o, t.sort(), tc, theory, config.fuel, config.observe));
  }
  return fp;
}

Value generate_value(const Theory& theory, SortId sort, int budget, RandomStream& rng) {
  const SortInfo& info = theory.signature.sort(sort);
  switch (info.kind) {
    case SortKind::Integer:
      return Value::integer(rng.in_range(info.low, info.high));
    case SortKind::Boolean:
      return Value::boolean(rng.coin());
    case SortKind::Datatype:
      break;
  }

  struct Choice {
    CtorIndex ctor;
    int extra;
  };
  std::vector<Choice> fits;
  for (CtorIndex c : info.constructors) {
    int extra = 0;
    bool finite = true;
    for (const Field& f : theory.constructors[c].fields) {
      auto m = theory.min_value_size(f.sort);
      if (!m) {
        finite = false;
        break;
      }
      extra += *m;
    }
    if (finite && extra <= std::max(budget, 0)) fits.push_back({c, extra});
  }
  if (fits.empty()) {
    // Budget too small for anything: fall back to the cheapest constructor.
    std::optional<Choice> cheapest;
    for (CtorIndex c : info.constructors) {
      int extra = 0;
      bool finite = true;
      for (const Field& f : theory.constructors[c].fields) {
        auto m = theory.min_value_size(f.sort);
        finite = finite && m.has_value();
        extra += m.value_or(0);
      }
      if (finite && (!cheapest || extra < cheapest->extra)) cheapest = Choice{c, extra};
    }
    if (!cheapest) throw GeneratorError("sort " + info.name + " has no finite value");
    fits.push_back(*cheapest);
  }

  const Choice pick = fits[rng.below(fits.size())];
  const Constructor& ctor = theory.constructors[pick.ctor];
  int recursive = 0;
  for (const Field& f : ctor.fields) {
    if (theory.signature.sort(f.sort).kind == SortKind::Datatype) ++recursive;
  }
  const int spare = std::max(budget - pick.extra, 0);
  std::vector<Value> fields;
  fields.reserve(ctor.fields.size());
  for (const Field& f : ctor.fields) {
    int child = 0;
    if (theory.signature.sort(f.sort).kind == SortKind::Datatype) {
      child = *theory.min_value_size(f.sort) - 1 + spare / recursive;
    }
    fields.push_back(generate_value(theory, f.sort, child, rng));
  }
  Value v = Value::constructed(pick.ctor, std::move(fields));
  if (info.normalizer) {
    Fuel fuel(theory.config.fuel);
    const Value args[] = {v};
    Outcome o = call_function(theory, *info.normalizer, args, fuel);
    if (!o.is_defined()) {
      throw GeneratorError("normalizer for sort " + info.name + " failed: " +
                           std::string(reason_name(o.reason())));
    }
    v = o.value();
  }
  return v;
}

TestCase generate_testcase(const Theory& theory, const Config& config, RandomStream& rng,
                           const std::optional<Condition>& condition) {
  const std::size_t sorts = theory.signature.sort_count();
  for (int attempt = 0; attempt < kConditionAttempts; ++attempt) {
    TestCase tc;
    tc.valuation.resize(sorts);
    tc.contexts.resize(sorts);
    for (std::uint32_t s = 0; s < sorts; ++s) {
      const SortInfo& info = theory.signature.sort(SortId{s});
      for (std::size_t i = 0; i < info.var_names.size(); ++i) {
        tc.valuation[s].push_back(generate_value(theory, SortId{s}, config.value_budget, rng));
      }
    }
    for (const ObservationSpec& o : theory.observations) {
      auto& ctxs = tc.contexts[o.observed.index];
      for (int i = 0; i < config.contexts_per_sort; ++i) {
        ctxs.push_back(generate_value(theory, o.context, config.value_budget, rng));
      }
    }
    if (!condition || condition_holds(theory, tc, *condition, config.fuel)) return tc;
  }
  throw ConditionExhausted("predicate " + theory.predicates.at(condition->predicate).name +
                           " rejected " + std::to_string(kConditionAttempts) + " test cases");
}

bool condition_holds(const Theory& theory, const TestCase& tc, const Condition& condition,
                     std::int64_t fuel) {
  const Predicate& p = theory.predicates.at(condition.predicate);
  std::vector<Value> args;
  args.reserve(condition.args.size());
  for (Variable v : condition.args) args.push_back(tc.value_of(v));
  Fuel f(fuel);
  Outcome o = call_function(theory, p.function, args, f);
  return o.is_defined() && o.value().as_bool();
}

}  // namespace lawseeker
