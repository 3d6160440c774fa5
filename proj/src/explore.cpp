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

#include "lawseeker/explore.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>

namespace lawseeker {

namespace {

// Terms visited when looking for an equational proof of a new law.
constexpr std::size_t kProofBudget = 2000;

/// Calls `f` with every way of writing `total` as `parts` positive summands,
/// in lexicographic order.
void for_each_composition(int total, std::size_t parts, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> sizes(parts, 1);
  std::function<void(std::size_t, int)> go = [&](std::size_t i, int left) {
    if (i + 1 == parts) {
      sizes[i] = left;
      f(sizes);
      return;
    }
    const int rest = static_cast<int>(parts - i - 1);
    for (int s = 1; s <= left - rest; ++s) {
      sizes[i] = s;
      go(i + 1, left - s);
    }
  };
  if (parts == 0) {
    if (total == 0) f(sizes);
    return;
  }
  if (total >= static_cast<int>(parts)) go(0, total);
}

int max_stage(const Term& t, const Signature& sig) {
  int stage = 0;
  t.for_each_subterm([&](const Term& s) {
    if (!s.is_var()) stage = std::max(stage, sig.symbol(s.symbol()).stage);
  });
  return stage;
}

/// A term kept for building larger ones, with its raw value on each suite case.
struct Retained {
  Term term;
  std::vector<Outcome> values;
  /// Highest symbol stage inside; variables count as the stage their sort
  /// entered play.
  int stage = 0;
  bool alive = true;
};

struct Class {
  Term rep;
  Fingerprint fp;
};

struct Candidate {
  Term term;
  SymbolId symbol;
  /// (size, index) into the retained table, one per argument.
  std::vector<std::pair<int, std::size_t>> args;
  /// Variables and constants carry their values directly.
  bool leaf = false;
};

class Exploration {
 public:
  Exploration(const Theory& theory, const Config& config)
      : th_(theory), cfg_(config), sig_(theory.signature) {}

  ExplorationReport run() {
    cfg_.validate();
    RandomStream suite_rng(cfg_.seed, streams::kSuite);
    for (int i = 0; i < cfg_.initial_suite; ++i) suite_.push_back(generate_testcase(th_, cfg_, suite_rng));
    RandomStream pool_rng(cfg_.seed, streams::kConfirmation);
    for (int i = 0; i < cfg_.max_tests; ++i) pool_.push_back(generate_testcase(th_, cfg_, pool_rng));
    retained_.resize(static_cast<std::size_t>(cfg_.max_term_size) + 1);

    std::vector<SortId> in_play_before;
    for (int stage = 1; stage <= th_.last_stage(); ++stage) {
      std::vector<SortId> in_play = sorts_in_play(sig_, stage);
      std::vector<SortId> fresh;
      for (SortId s : in_play) {
        if (std::find(in_play_before.begin(), in_play_before.end(), s) == in_play_before.end()) fresh.push_back(s);
      }
      for (int size = 1; size <= cfg_.max_term_size; ++size) run_size_pass(stage, size, fresh);
      in_play_before = std::move(in_play);
    }
    discover_conditionals();

    report_.stats.suite_size = suite_.size();
    report_.stats.classes = classes_.size();
    report_.store = store_;
    return std::move(report_);
  }

 private:
  void log(LogEvent::Kind kind, int stage, int size, std::vector<Term> terms = {}) {
    if (!cfg_.record_log) return;
    report_.log.push_back(LogEvent{kind, stage, size, std::move(terms)});
  }

  Fingerprint observed_fingerprint(SortId sort, std::span<const Outcome> raw, std::span<const TestCase> suite) const {
    Fingerprint fp;
    for (std::size_t i = 0; i < raw.size(); ++i) {
      extend_fingerprint(fp, observe_outcome(raw[i], sort, suite[i], th_, cfg_.fuel, cfg_.observe));
    }
    return fp;
  }

  std::vector<Outcome> observed(const Term& t, const TestCase& tc) const {
    return observe_outcome(eval_term(t, tc, th_, cfg_.fuel), t.sort(), tc, th_, cfg_.fuel, cfg_.observe);
  }

  /// Index of the first pool case on which `t` and `u` are observed to
  /// differ, if any.
  std::optional<std::size_t> refute(const Term& t, const Term& u, std::span<const TestCase> pool) {
    for (std::size_t i = 0; i < pool.size(); ++i) {
      ++report_.stats.tests_run;
      if (observed(t, pool[i]) != observed(u, pool[i])) return i;
    }
    return std::nullopt;
  }

  static std::uint64_t class_key(SortId sort, std::uint64_t digest) { return hash_mix(sort.index + 1, digest); }

  void index_class(std::uint32_t id) {
    const Class& c = classes_[id];
    if (!c.fp.fully_defined()) return;
    class_index_[class_key(c.rep.sort(), c.fp.digest)].push_back(id);
  }

  std::optional<std::uint32_t> find_class(SortId sort, const Fingerprint& fp) const {
    auto it = class_index_.find(class_key(sort, fp.digest));
    if (it == class_index_.end()) return std::nullopt;
    for (std::uint32_t id : it->second) {
      const Class& c = classes_[id];
      if (c.rep.sort() == sort && c.fp.outcomes == fp.outcomes) return id;
    }
    return std::nullopt;
  }

  /// Adds a refuting case to the suite and brings every stored value and
  /// fingerprint up to date.
  void add_case(const TestCase& tc) {
    suite_.push_back(tc);
    ++report_.stats.refutations;
    for (auto& bucket : retained_) {
      for (Retained& r : bucket) r.values.push_back(eval_term(r.term, tc, th_, cfg_.fuel));
    }
    class_index_.clear();
    for (std::uint32_t id = 0; id < classes_.size(); ++id) {
      Class& c = classes_[id];
      extend_fingerprint(c.fp, observed(c.rep, tc));
      index_class(id);
    }
  }

  std::vector<Outcome> candidate_values(const Candidate& c) const {
    std::vector<Outcome> out;
    out.reserve(suite_.size());
    if (c.leaf) {
      for (const TestCase& tc : suite_) out.push_back(eval_term(c.term, tc, th_, cfg_.fuel));
      return out;
    }
    std::vector<Value> args(c.args.size());
    for (std::size_t i = 0; i < suite_.size(); ++i) {
      std::optional<Outcome> failed;
      for (std::size_t a = 0; a < c.args.size() && !failed; ++a) {
        const Outcome& o = retained_[c.args[a].first][c.args[a].second].values[i];
        if (o.is_defined()) {
          args[a] = o.value();
        } else {
          failed = o;
        }
      }
      if (failed) {
        out.push_back(*failed);
        continue;
      }
      Fuel fuel(cfg_.fuel);
      out.push_back(apply_symbol(th_, c.symbol, args, fuel));
    }
    return out;
  }

  /// Re-checks which retained terms are still irreducible; only those are
  /// combined into larger candidates.
  void refresh_alive() {
    if (store_.size() == alive_checked_at_) return;
    alive_checked_at_ = store_.size();
    for (auto& bucket : retained_) {
      for (Retained& r : bucket) r.alive = r.alive && !store_.is_reducible(r.term);
    }
  }

  std::vector<Candidate> enumerate(int stage, int size, const std::vector<SortId>& fresh) {
    std::vector<Candidate> out;
    if (size == 1) {
      for (SortId s : sorts_in_play(sig_, stage)) {
        const bool is_fresh = std::find(fresh.begin(), fresh.end(), s) != fresh.end();
        if (!is_fresh) continue;
        for (std::uint32_t i = 0; i < sig_.sort(s).var_names.size(); ++i) {
          out.push_back(Candidate{Term::variable(s, i), SymbolId{}, {}, true});
        }
      }
    }
    for (std::uint32_t f = 0; f < sig_.symbol_count(); ++f) {
      const Symbol& sym = sig_.symbol(SymbolId{f});
      if (sym.stage > stage) continue;
      if (sym.arity() == 0) {
        if (size == 1 && sym.stage == stage) {
          out.push_back(Candidate{Term::apply(sig_, SymbolId{f}, {}), SymbolId{f}, {}, true});
        }
        continue;
      }
      for_each_composition(size - 1, sym.arity(), [&](const std::vector<int>& sizes) {
        std::vector<std::pair<int, std::size_t>> pick(sizes.size());
        std::function<void(std::size_t, int)> go = [&](std::size_t i, int newest) {
          if (i == sizes.size()) {
            if (std::max(newest, sym.stage) != stage) return;
            std::vector<Term> args;
            args.reserve(pick.size());
            for (auto [sz, idx] : pick) args.push_back(retained_[sz][idx].term);
            Term t = Term::apply(sig_, SymbolId{f}, std::move(args));
            if (store_.is_reducible_at_root(t)) {
              ++report_.stats.terms_pruned;
              return;
            }
            out.push_back(Candidate{std::move(t), SymbolId{f}, pick, false});
            return;
          }
          const auto& bucket = retained_[sizes[i]];
          for (std::size_t idx = 0; idx < bucket.size(); ++idx) {
            const Retained& r = bucket[idx];
            if (!r.alive || r.term.sort() != sym.arg_sorts[i]) continue;
            pick[i] = {sizes[i], idx};
            go(i + 1, std::max(newest, r.stage));
          }
        };
        go(0, 0);
      });
    }
    return out;
  }

  void run_size_pass(int stage, int size, const std::vector<SortId>& fresh) {
    log(LogEvent::Kind::PassStart, stage, size);
    refresh_alive();
    std::vector<Candidate> candidates = enumerate(stage, size, fresh);
    // More general terms first, so a law is found before its instances.
    std::stable_sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
      if (a.term.distinct_vars() != b.term.distinct_vars()) return a.term.distinct_vars() > b.term.distinct_vars();
      return compare_terms(a.term, b.term) < 0;
    });
    report_.stats.terms_considered += candidates.size();
    for (const Candidate& c : candidates) log(LogEvent::Kind::Considered, stage, size, {c.term});
    for (const Candidate& c : candidates) process(c, stage, size);
  }

  void retain(const Term& t, std::vector<Outcome> values, int stage) {
    int s = max_stage(t, sig_);
    if (t.is_var()) s = stage;
    retained_[t.size()].push_back(Retained{t, std::move(values), s, true});
  }

  void process(const Candidate& c, int stage, int size) {
    const Term& t = c.term;
    if (store_.is_reducible(t)) {
      ++report_.stats.terms_pruned;
      return;
    }
    std::vector<Outcome> values = candidate_values(c);
    for (;;) {
      Fingerprint fp = observed_fingerprint(t.sort(), values, suite_);
      if (fp.unreliable()) {
        ++report_.stats.unreliable;
        return;
      }
      std::optional<std::uint32_t> hit;
      if (fp.fully_defined()) hit = find_class(t.sort(), fp);
      if (!hit) {
        classes_.push_back(Class{t, std::move(fp)});
        index_class(static_cast<std::uint32_t>(classes_.size() - 1));
        retain(t, std::move(values), stage);
        return;
      }
      const Term u = classes_[*hit].rep;
      if (auto bad = refute(t, u, pool_)) {
        add_case(pool_[*bad]);
        values.push_back(eval_term(t, suite_.back(), th_, cfg_.fuel));
        continue;
      }
      ++report_.stats.confirmations;
      equate(t, u, *hit, stage, size);
      if (!store_.is_reducible(t)) retain(t, std::move(values), stage);
      return;
    }
  }

  void equate(const Term& t, const Term& u, std::uint32_t cls, int stage, int size) {
    if (t.is_var() && u.is_var()) return;
    if (store_.is_redundant(t, u)) return;
    const bool t_big = compare_terms(t, u) > 0;
    const Term& big = t_big ? t : u;
    const Term& small = t_big ? u : t;
    const bool derived = store_.is_derivable(big, small, big.size(), kProofBudget);
    if (derived) {
      ++report_.stats.derived_laws;
    } else if (mentions_foreground(big, small, sig_)) {
      log(LogEvent::Kind::Emit, stage, size, {big, small});
      report_.laws.push_back(make_conjecture(big, small, std::nullopt, stage, static_cast<int>(pool_.size())));
    } else {
      ++report_.stats.background_laws;
    }
    store_.add(big, small);
    log(LogEvent::Kind::StoreInsert, stage, size, {big, small});
    if (!t_big) classes_[cls].rep = t;
    store_ground_instances(big, small, stage, size);
    store_ground_instances(small, big, stage, size);
  }

  /// A law whose sides each have a variable the other lacks cannot be used
  /// in either direction. Its instance with `side`'s own variables set to
  /// the least ground term of their sort can.
  void store_ground_instances(const Term& side, const Term& other, int stage, int size) {
    Substitution sub;
    bool any = false;
    for (const Variable& v : side.vars()) {
      if (other.contains_var(v)) continue;
      auto g = least_ground(v.sort);
      if (!g) continue;
      sub.bind(v, *g);
      any = true;
    }
    if (!any) return;
    Term inst = apply_substitution(sub, side);
    if (store_.is_redundant(inst, other)) return;
    store_.add(other, inst);
    log(LogEvent::Kind::StoreInsert, stage, size, {other, inst});
  }

  std::optional<Term> least_ground(SortId sort) const {
    std::optional<Term> best;
    for (const auto& bucket : retained_) {
      for (const Retained& r : bucket) {
        if (!r.alive || r.term.sort() != sort || r.term.distinct_vars() != 0) continue;
        if (!best || compare_terms(r.term, *best) < 0) best = r.term;
      }
      if (best) return best;
    }
    return best;
  }

  Conjecture make_conjecture(const Term& big, const Term& small, std::optional<Condition> pre, int stage,
                             int tests) const {
    std::vector<Term> scan{big, small};
    if (pre) {
      for (Variable v : pre->args) scan.push_back(Term::variable(v));
    }
    Substitution rename = canonical_renaming(scan);
    Conjecture c{apply_substitution(rename, big), apply_substitution(rename, small), std::nullopt, stage, 0, tests};
    c.effective_size = static_cast<int>(std::max(big.size(), small.size()));
    if (pre) {
      Condition renamed{pre->predicate, {}};
      for (Variable v : pre->args) renamed.args.push_back(apply_substitution(rename, Term::variable(v)).var());
      c.precondition = std::move(renamed);
      c.effective_size += 1;
    }
    return c;
  }

  // Conditional laws.

  struct CondRep {
    Term term;
    Fingerprint fp;
  };

  /// Binary predicates that give the same answer with their arguments
  /// swapped on every pool case are treated as symmetric, so `k /= k2` and
  /// `k2 /= k` name the same precondition.
  bool is_symmetric(const Predicate& p, std::uint32_t index) const {
    if (p.arg_sorts.size() != 2 || p.arg_sorts[0] != p.arg_sorts[1]) return false;
    const SortId s = p.arg_sorts[0];
    if (sig_.sort(s).var_names.size() < 2) return false;
    Condition ab{index, {Variable{s, 0}, Variable{s, 1}}};
    Condition ba{index, {Variable{s, 1}, Variable{s, 0}}};
    for (const TestCase& tc : pool_) {
      if (condition_holds(th_, tc, ab, cfg_.fuel) != condition_holds(th_, tc, ba, cfg_.fuel)) return false;
    }
    return true;
  }

  std::vector<std::vector<Variable>> tuples_for(const Predicate& p, const std::vector<SortId>& in_play) const {
    std::vector<std::vector<Variable>> out;
    std::vector<Variable> current;
    std::function<void(std::size_t)> go = [&](std::size_t i) {
      if (i == p.arg_sorts.size()) {
        out.push_back(current);
        return;
      }
      const SortId s = p.arg_sorts[i];
      if (std::find(in_play.begin(), in_play.end(), s) == in_play.end()) return;
      for (std::uint32_t v = 0; v < sig_.sort(s).var_names.size(); ++v) {
        Variable var{s, v};
        if (std::find(current.begin(), current.end(), var) != current.end()) continue;
        current.push_back(var);
        go(i + 1);
        current.pop_back();
      }
    };
    go(0);
    return out;
  }

  void discover_conditionals() {
    if (th_.predicates.empty() || th_.last_stage() == 0) return;
    const int side_limit = cfg_.max_term_size - 1;
    std::vector<Term> reps;
    for (const Class& c : classes_) {
      if (!c.fp.fully_defined() || static_cast<int>(c.rep.size()) > side_limit) continue;
      if (store_.is_reducible(c.rep)) continue;
      reps.push_back(c.rep);
    }
    std::sort(reps.begin(), reps.end(), [](const Term& a, const Term& b) { return compare_terms(a, b) < 0; });
    const std::vector<SortId> in_play = sorts_in_play(sig_, th_.last_stage());

    std::uint64_t stream = streams::kConditionalBase;
    for (std::uint32_t pi = 0; pi < th_.predicates.size(); ++pi) {
      const Predicate& pred = th_.predicates[pi];
      const bool symmetric = is_symmetric(pred, pi);
      EquationStore guarded = store_;
      std::set<std::string> seen;
      try {
        for (const std::vector<Variable>& tuple : tuples_for(pred, in_play)) {
          // The swapped tuple names the same condition.
          if (symmetric && tuple[1] < tuple[0]) continue;
          const Condition cond{pi, tuple};
          RandomStream suite_rng(cfg_.seed, stream++);
          RandomStream pool_rng(cfg_.seed, stream++);
          std::vector<TestCase> csuite, cpool;
          for (int i = 0; i < cfg_.initial_suite; ++i) csuite.push_back(generate_testcase(th_, cfg_, suite_rng, cond));
          for (int i = 0; i < cfg_.max_tests; ++i) cpool.push_back(generate_testcase(th_, cfg_, pool_rng, cond));
          conditional_pass(cond, symmetric, reps, csuite, cpool, guarded, seen);
        }
      } catch (const ConditionExhausted& e) {
        report_.warnings.push_back(std::string("skipping predicate ") + pred.name + ": " + e.what());
      }
    }
  }

  void conditional_pass(const Condition& cond, bool symmetric, const std::vector<Term>& all_reps,
                        std::vector<TestCase>& csuite, const std::vector<TestCase>& cpool,
                        EquationStore& guarded, std::set<std::string>& seen) {
    std::vector<CondRep> reps;
    for (const Term& t : all_reps) {
      Fingerprint fp;
      for (const TestCase& tc : csuite) extend_fingerprint(fp, observed(t, tc));
      reps.push_back(CondRep{t, std::move(fp)});
    }
    const int limit = cfg_.max_term_size;
    for (;;) {
      // Group by conditioned fingerprint; reps are already in term order.
      std::map<std::pair<std::uint64_t, std::uint32_t>, std::vector<std::size_t>> groups;
      for (std::size_t i = 0; i < reps.size(); ++i) {
        if (!reps[i].fp.fully_defined()) continue;
        groups[{reps[i].fp.digest, reps[i].term.sort().index}].push_back(i);
      }
      struct Pair {
        std::size_t big, small;
        int effective;
      };
      std::vector<Pair> pairs;
      for (const auto& [key, members] : groups) {
        for (std::size_t a = 0; a < members.size(); ++a) {
          for (std::size_t b = 0; b < a; ++b) {
            const CondRep& hi = reps[members[a]];
            const CondRep& lo = reps[members[b]];
            if (hi.fp.outcomes != lo.fp.outcomes) continue;
            const int eff = static_cast<int>(std::max(hi.term.size(), lo.term.size())) + 1;
            if (eff > limit) continue;
            bool covered = std::all_of(cond.args.begin(), cond.args.end(), [&](Variable v) {
              return hi.term.contains_var(v) || lo.term.contains_var(v);
            });
            if (!covered) continue;
            pairs.push_back(Pair{members[a], members[b], eff});
            break;  // pair each term with the least member only
          }
        }
      }
      std::sort(pairs.begin(), pairs.end(), [&](const Pair& x, const Pair& y) {
        if (x.effective != y.effective) return x.effective < y.effective;
        const std::size_t xv = reps[x.big].term.distinct_vars(), yv = reps[y.big].term.distinct_vars();
        if (xv != yv) return xv > yv;
        auto c = compare_terms(reps[x.big].term, reps[y.big].term);
        if (c != 0) return c < 0;
        return compare_terms(reps[x.small].term, reps[y.small].term) < 0;
      });

      bool refined = false;
      for (const Pair& p : pairs) {
        const Term& big = reps[p.big].term;
        const Term& small = reps[p.small].term;
        GuardContext ctx{cond.predicate, cond.args};
        if (guarded.is_redundant(big, small, &ctx)) continue;
        if (symmetric) {
          GuardContext swapped{cond.predicate, {cond.args[1], cond.args[0]}};
          if (guarded.is_redundant(big, small, &swapped)) continue;
        }
        Condition shown = cond;
        if (symmetric && cond.args[1] < cond.args[0]) std::swap(shown.args[0], shown.args[1]);
        Conjecture law = make_conjecture(big, small, shown, 0, static_cast<int>(cpool.size()));
        if (symmetric) {
          auto& a = law.precondition->args;
          if (a[1] < a[0]) std::swap(a[0], a[1]);
        }
        std::string key = to_sexpr(law.lhs, sig_) + " " + to_sexpr(law.rhs, sig_);
        for (Variable v : law.precondition->args) key += " " + std::to_string(v.sort.index) + ":" + std::to_string(v.index);
        if (seen.count(key)) continue;
        if (guarded.is_derivable(big, small, big.size(), kProofBudget, &ctx)) {
          ++report_.stats.derived_laws;
          guarded.add(big, small, Guard{cond.predicate, cond.args});
          continue;
        }

        if (auto bad = refute(big, small, cpool)) {
          csuite.push_back(cpool[*bad]);
          ++report_.stats.refutations;
          for (CondRep& r : reps) extend_fingerprint(r.fp, observed(r.term, csuite.back()));
          refined = true;
          break;
        }
        ++report_.stats.confirmations;
        seen.insert(key);
        guarded.add(big, small, Guard{cond.predicate, cond.args});
        if (!mentions_foreground(big, small, sig_)) continue;
        law.stage = std::max(max_stage(big, sig_), max_stage(small, sig_));
        log(LogEvent::Kind::Emit, law.stage, p.effective, {big, small});
        report_.laws.push_back(std::move(law));
        ++report_.stats.conditional_laws;
      }
      if (!refined) return;
    }
  }

  const Theory& th_;
  Config cfg_;
  const Signature& sig_;
  std::vector<TestCase> suite_;
  std::vector<TestCase> pool_;
  EquationStore store_;
  std::size_t alive_checked_at_ = 0;
  std::vector<std::vector<Retained>> retained_;
  std::vector<Class> classes_;
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> class_index_;
  ExplorationReport report_;
};

}  // namespace

std::vector<SortId> sorts_in_play(const Signature& sig, int stage) {
  std::set<SortId> sorts;
  for (const Symbol& s : sig.symbols()) {
    if (s.stage <= stage) sorts.insert(s.arg_sorts.begin(), s.arg_sorts.end());
  }
  return {sorts.begin(), sorts.end()};
}

bool mentions_foreground(const Term& lhs, const Term& rhs, const Signature& sig) {
  bool found = false;
  auto visit = [&](const Term& s) {
    if (!s.is_var() && !sig.symbol(s.symbol()).background) found = true;
  };
  lhs.for_each_subterm(visit);
  rhs.for_each_subterm(visit);
  return found;
}

std::vector<Term> enumerate_terms(const Signature& sig, std::span<const SymbolId> active,
                                  std::span<const Variable> variables, int size,
                                  const EquationStore& store) {
  std::map<std::pair<std::uint32_t, int>, std::vector<Term>> memo;
  std::function<const std::vector<Term>&(SortId, int)> all = [&](SortId sort, int n) -> const std::vector<Term>& {
    auto key = std::make_pair(sort.index, n);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::vector<Term> out;
    if (n == 1) {
      for (Variable v : variables) {
        if (v.sort == sort) out.push_back(Term::variable(v));
      }
    }
    for (SymbolId f : active) {
      const Symbol& sym = sig.symbol(f);
      if (sym.result != sort) continue;
      if (sym.arity() == 0) {
        if (n == 1) out.push_back(Term::apply(sig, f, {}));
        continue;
      }
      for_each_composition(n - 1, sym.arity(), [&](const std::vector<int>& sizes) {
        std::vector<Term> args(sizes.size(), Term::variable(Variable{}));
        std::function<void(std::size_t)> go = [&](std::size_t i) {
          if (i == sizes.size()) {
            out.push_back(Term::apply(sig, f, args));
            return;
          }
          // Copy: the recursive call may insert into memo.
          const std::vector<Term> choices = all(sym.arg_sorts[i], sizes[i]);
          for (const Term& a : choices) {
            args[i] = a;
            go(i + 1);
          }
        };
        go(0);
      });
    }
    return memo[key] = std::move(out);
  };

  std::vector<Term> result;
  // Variables and constants first, then compound terms by root symbol.
  if (size == 1) {
    for (Variable v : variables) result.push_back(Term::variable(v));
    for (SymbolId f : active) {
      if (sig.symbol(f).arity() == 0) result.push_back(Term::apply(sig, f, {}));
    }
  } else {
    for (SymbolId f : active) {
      const Symbol& sym = sig.symbol(f);
      if (sym.arity() == 0) continue;
      for (const Term& t : all(sym.result, size)) {
        if (t.symbol() == f) result.push_back(t);
      }
    }
  }
  std::erase_if(result, [&](const Term& t) { return store.is_reducible(t); });
  return result;
}

ExplorationReport explore(const Theory& theory, const Config& config) {
  return Exploration(theory, config).run();
}

}  // namespace lawseeker
