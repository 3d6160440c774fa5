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

#include "lawseeker/oracle.hpp"

#include <algorithm>
#include <unordered_set>

namespace lawseeker {

namespace {

struct ValueHash {
  std::size_t operator()(const Value& v) const { return static_cast<std::size_t>(v.hash()); }
};

void dedupe(std::vector<Value>& values) {
  std::unordered_set<Value, ValueHash> seen;
  std::vector<Value> out;
  for (Value& v : values) {
    if (seen.insert(v).second) out.push_back(std::move(v));
  }
  values = std::move(out);
}

std::vector<Value> int_range(Integer lo, Integer hi) {
  std::vector<Value> out;
  for (Integer i = lo; i <= hi; ++i) out.push_back(Value::integer(i));
  return out;
}

// Appends every application of constructor `index` with fields drawn from `pools`.
void expand(CtorIndex index, const std::vector<const std::vector<Value>*>& pools,
            std::vector<Value>& out) {
  for (const auto* p : pools) {
    if (p->empty()) return;
  }
  std::vector<std::size_t> at(pools.size(), 0);
  for (;;) {
    std::vector<Value> fields;
    fields.reserve(pools.size());
    for (std::size_t i = 0; i < pools.size(); ++i) fields.push_back((*pools[i])[at[i]]);
    out.push_back(Value::constructed(index, std::move(fields)));
    if (pools.empty()) return;
    std::size_t i = pools.size();
    while (i > 0) {
      --i;
      if (++at[i] < pools[i]->size()) break;
      at[i] = 0;
      if (i == 0) return;
    }
  }
}

}  // namespace

Universe build_universe(const Theory& theory, const OracleSettings& settings) {
  const Signature& sig = theory.signature;
  const std::size_t n = sig.sort_count();
  Universe u;
  u.values.resize(n);
  std::vector<int> depth(n, settings.depth);
  for (std::uint32_t s = 0; s < n; ++s) {
    const SortInfo& info = sig.sort(SortId{s});
    if (info.kind == SortKind::Boolean) u.values[s] = {Value::boolean(false), Value::boolean(true)};
    if (info.kind == SortKind::Integer) u.values[s] = int_range(info.low, info.high);
  }
  for (const UniverseOverride& o : settings.overrides) {
    if (o.range) u.values[o.sort.index] = int_range(o.range->first, o.range->second);
    if (o.depth) depth[o.sort.index] = *o.depth;
  }

  int deepest = 0;
  for (std::uint32_t s = 0; s < n; ++s) {
    if (sig.sort(SortId{s}).kind == SortKind::Datatype) deepest = std::max(deepest, depth[s]);
  }
  // level[s] holds the values of depth at most d after round d.
  std::vector<std::vector<Value>> level(n);
  for (int d = 1; d <= deepest; ++d) {
    std::vector<std::vector<Value>> next(n);
    for (std::uint32_t s = 0; s < n; ++s) {
      const SortInfo& info = sig.sort(SortId{s});
      if (info.kind != SortKind::Datatype) continue;
      for (CtorIndex ci : info.constructors) {
        const Constructor& c = theory.constructors[ci];
        std::vector<const std::vector<Value>*> pools;
        for (const Field& f : c.fields) {
          const bool data = sig.sort(f.sort).kind == SortKind::Datatype;
          pools.push_back(data ? &level[f.sort.index] : &u.values[f.sort.index]);
        }
        expand(ci, pools, next[s]);
      }
      if (info.normalizer) {
        for (Value& v : next[s]) {
          Fuel fuel(theory.config.fuel);
          const Value args[] = {v};
          Outcome o = call_function(theory, *info.normalizer, args, fuel);
          if (!o.is_defined()) {
            throw GeneratorError("normalizer for sort " + info.name + " failed: " +
                                 std::string(reason_name(o.reason())));
          }
          v = o.value();
        }
      }
      dedupe(next[s]);
    }
    level = std::move(next);
    for (std::uint32_t s = 0; s < n; ++s) {
      if (sig.sort(SortId{s}).kind == SortKind::Datatype && depth[s] == d) u.values[s] = level[s];
    }
  }
  return u;
}

Verdict exhaustive_check(const Conjecture& c, const Theory& theory, const Universe& universe,
                         const OracleOptions& options) {
  std::vector<Variable> vars(c.lhs.vars().begin(), c.lhs.vars().end());
  vars.insert(vars.end(), c.rhs.vars().begin(), c.rhs.vars().end());
  if (c.precondition) vars.insert(vars.end(), c.precondition->args.begin(), c.precondition->args.end());
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());

  std::uint64_t total = 1;
  for (const Variable& v : vars) {
    const std::size_t k = universe.of(v.sort).size();
    if (k == 0) throw UniverseTooLarge("empty universe for sort " + theory.signature.sort(v.sort).name);
    if (total > options.cap / k) {
      throw UniverseTooLarge("more than " + std::to_string(options.cap) + " valuations");
    }
    total *= k;
  }

  const std::size_t sorts = theory.signature.sort_count();
  TestCase tc;
  tc.valuation.resize(sorts);
  tc.contexts.resize(sorts);
  for (std::uint32_t s = 0; s < sorts; ++s) {
    const SortInfo& info = theory.signature.sort(SortId{s});
    const auto& pool = universe.values[s];
    tc.valuation[s].assign(info.var_names.size(), pool.empty() ? Value() : pool.front());
    if (const ObservationSpec* o = theory.observation_for(SortId{s})) tc.contexts[s] = universe.of(o->context);
  }

  Verdict verdict;
  std::uint64_t undefined = 0;
  std::vector<std::size_t> at(vars.size(), 0);
  for (;;) {
    for (std::size_t i = 0; i < vars.size(); ++i) {
      tc.valuation[vars[i].sort.index][vars[i].index] = universe.of(vars[i].sort)[at[i]];
    }
    if (c.precondition && !condition_holds(theory, tc, *c.precondition, options.fuel)) {
      ++verdict.skipped;
    } else {
      ++verdict.valuations;
      auto lhs = observe_outcome(eval_term(c.lhs, tc, theory, options.fuel), c.lhs.sort(), tc, theory,
                                 options.fuel, options.observe);
      auto rhs = observe_outcome(eval_term(c.rhs, tc, theory, options.fuel), c.rhs.sort(), tc, theory,
                                 options.fuel, options.observe);
      auto defined = [](const std::vector<Outcome>& os) {
        return std::all_of(os.begin(), os.end(), [](const Outcome& o) { return o.is_defined(); });
      };
      if (!defined(lhs) || !defined(rhs)) {
        ++undefined;
      } else if (lhs != rhs) {
        verdict.kind = Verdict::Kind::Counterexample;
        verdict.counterexample = tc;
        break;
      }
    }
    std::size_t i = vars.size();
    bool done = true;
    while (i > 0) {
      --i;
      if (++at[i] < universe.of(vars[i].sort).size()) {
        done = false;
        break;
      }
      at[i] = 0;
    }
    if (done) break;
  }
  if (verdict.valuations > 0) {
    verdict.undefined_fraction = static_cast<double>(undefined) / static_cast<double>(verdict.valuations);
  }
  if (verdict.kind == Verdict::Kind::Counterexample) return verdict;
  if (verdict.valuations == 0 || 10 * undefined > verdict.valuations) verdict.kind = Verdict::Kind::Inconclusive;
  return verdict;
}

}  // namespace lawseeker
