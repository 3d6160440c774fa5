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

#include "lawseeker/report.hpp"

#include <openssl/evp.h>

#include <charconv>
#include <map>
#include <sstream>
#include <stdexcept>

#include "lawseeker/frontend.hpp"
#include "lawseeker/sexpr.hpp"

namespace lawseeker {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string hex(const unsigned char* bytes, unsigned n) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < n; ++i) {
    out += digits[bytes[i] >> 4];
    out += digits[bytes[i] & 15];
  }
  return out;
}

// Every name a printed variable may carry, for reading terms back.
std::map<std::string, Variable> variable_table(const Signature& sig) {
  std::map<std::string, Variable> out;
  for (std::uint32_t s = 0; s < sig.sort_count(); ++s) {
    const std::size_t declared = sig.sort(SortId{s}).var_names.size();
    for (std::uint32_t i = 0; i < declared + 16; ++i) {
      Variable v{SortId{s}, i};
      out.emplace(variable_name(v, sig), v);
    }
  }
  return out;
}

std::optional<SymbolId> resolve_head(const std::string& name, const Signature& sig) {
  if (name.size() > 1 && name[0] == '@') {
    std::uint32_t index = 0;
    auto [p, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), index);
    if (ec == std::errc() && p == name.data() + name.size() && index < sig.symbol_count()) return SymbolId{index};
    return std::nullopt;
  }
  return sig.find_symbol(name);
}

Term build_term(const SExpr& e, const Signature& sig, const std::map<std::string, Variable>& vars) {
  if (e.is_list()) {
    if (e.items.empty() || e.items[0].is_list() || e.items[0].is_string()) {
      throw ParseError(e.span, "function symbol", "expected a symbol at the head of an application");
    }
    auto sym = resolve_head(e.items[0].text, sig);
    if (!sym) throw ParseError(e.items[0].span, "function symbol", "unknown symbol " + e.items[0].text);
    std::vector<Term> args;
    for (std::size_t i = 1; i < e.items.size(); ++i) args.push_back(build_term(e.items[i], sig, vars));
    if (args.size() != sig.symbol(*sym).arity()) {
      throw ParseError(e.span, "arguments", "wrong number of arguments for " + e.items[0].text);
    }
    return Term::apply(sig, *sym, std::move(args));
  }
  if (e.is_string()) throw ParseError(e.span, "term", "unexpected string");
  if (auto it = vars.find(e.text); it != vars.end()) return Term::variable(it->second);
  auto sym = resolve_head(e.text, sig);
  if (!sym) throw ParseError(e.span, "term", "unknown name " + e.text);
  if (sig.symbol(*sym).arity() != 0) throw ParseError(e.span, "term", e.text + " needs arguments");
  return Term::apply(sig, *sym, {});
}

ordered_json law_json(std::size_t index, const Conjecture& law, const Theory& theory) {
  const Signature& sig = theory.signature;
  ordered_json j;
  j["index"] = index;
  j["stage"] = law.stage;
  j["lhs"] = to_sexpr(law.lhs, sig);
  j["rhs"] = to_sexpr(law.rhs, sig);
  if (law.precondition) {
    ordered_json pre;
    pre["predicate"] = theory.predicates[law.precondition->predicate].name;
    pre["args"] = ordered_json::array();
    for (const Variable& v : law.precondition->args) pre["args"].push_back(variable_name(v, sig));
    j["precondition"] = pre;
  } else {
    j["precondition"] = nullptr;
  }
  j["effective_size"] = law.effective_size;
  j["tests_passed"] = law.tests_passed;
  return j;
}

}  // namespace

std::string show_condition(const Condition& c, const Theory& theory) {
  const Signature& sig = theory.signature;
  const std::string& name = theory.predicates.at(c.predicate).name;
  if (c.args.size() == 2 && is_operator_name(name)) {
    return variable_name(c.args[0], sig) + " " + name + " " + variable_name(c.args[1], sig);
  }
  std::string out = name;
  for (const Variable& v : c.args) out += " " + variable_name(v, sig);
  return out;
}

std::string show_law(const Conjecture& law, const Theory& theory) {
  std::string out;
  if (law.precondition) out = show_condition(*law.precondition, theory) + " => ";
  out += show_term(law.lhs, theory.signature) + " = " + show_term(law.rhs, theory.signature);
  return out;
}

std::string format_text(const ExplorationReport& report, const Theory& theory) {
  const Signature& sig = theory.signature;
  std::ostringstream out;
  std::size_t n = 0;
  for (int stage = 1; stage <= theory.last_stage(); ++stage) {
    out << "== stage " << stage << ":";
    for (const Symbol& s : sig.symbols()) {
      if (s.stage == stage && !s.background) out << ' ' << s.name;
    }
    out << " ==\n";
    for (const Conjecture& law : report.laws) {
      if (law.precondition || law.stage != stage) continue;
      out << ++n << ". " << show_law(law, theory) << '\n';
    }
  }
  bool header = false;
  for (const Conjecture& law : report.laws) {
    if (!law.precondition) continue;
    if (!header) out << "== conditional ==\n";
    header = true;
    out << ++n << ". " << show_law(law, theory) << '\n';
  }
  for (const std::string& w : report.warnings) out << "warning: " << w << '\n';
  const RunStats& s = report.stats;
  out << "-- " << s.terms_considered << " terms considered, " << s.terms_pruned << " pruned, " << s.classes
      << " classes\n";
  out << "-- suite " << s.suite_size << ", " << s.tests_run << " tests run, " << s.refutations << " refutations, "
      << s.confirmations << " confirmations\n";
  return out.str();
}

std::string theory_digest(const Theory& theory) {
  const std::string text = print_theory(theory);
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned len = 0;
  if (!EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr)) {
    throw std::runtime_error("SHA-256 failed");
  }
  return hex(md, len);
}

ordered_json to_json(const ExplorationReport& report, const Theory& theory, const Config& config) {
  ordered_json doc;
  ordered_json& h = doc["header"];
  h["seed"] = config.seed;
  h["theory"] = theory.name;
  h["theory_digest"] = theory_digest(theory);
  ordered_json& c = h["config"];
  c["max_size"] = config.max_term_size;
  c["max_tests"] = config.max_tests;
  c["vars_per_sort"] = config.vars_per_sort;
  c["fuel"] = config.fuel;
  c["initial_suite"] = config.initial_suite;
  c["max_preconditions"] = config.max_preconditions;
  c["contexts"] = config.contexts_per_sort;
  c["gen_size"] = config.value_budget;
  c["observe"] = config.observe;

  doc["laws"] = ordered_json::array();
  std::size_t index = 0;
  for (const Conjecture& law : report.laws) doc["laws"].push_back(law_json(++index, law, theory));

  const RunStats& s = report.stats;
  ordered_json& st = doc["stats"];
  st["terms_considered"] = s.terms_considered;
  st["terms_pruned"] = s.terms_pruned;
  st["classes"] = s.classes;
  st["unreliable"] = s.unreliable;
  st["suite_size"] = s.suite_size;
  st["tests_run"] = s.tests_run;
  st["confirmations"] = s.confirmations;
  st["refutations"] = s.refutations;
  st["background_laws"] = s.background_laws;
  st["derived_laws"] = s.derived_laws;
  st["conditional_laws"] = s.conditional_laws;
  doc["warnings"] = report.warnings;
  return doc;
}

Term parse_term(std::string_view text, const Signature& sig) {
  std::vector<SExpr> items = parse_sexprs(text);
  if (items.size() != 1) throw ParseError(SourceSpan{0, text.size(), 1, 1}, "term", "expected exactly one term");
  Term t = build_term(items[0], sig, variable_table(sig));
  infer_sort(t, sig);
  return t;
}

std::vector<Conjecture> laws_from_json(const json& doc, const Theory& theory) {
  if (!doc.is_object() || !doc.contains("laws") || !doc["laws"].is_array()) {
    throw std::invalid_argument("report has no laws array");
  }
  const Signature& sig = theory.signature;
  const auto vars = variable_table(sig);
  std::vector<Conjecture> out;
  for (const json& j : doc["laws"]) {
    try {
      Conjecture c{parse_term(j.at("lhs").get<std::string>(), sig),
                   parse_term(j.at("rhs").get<std::string>(), sig), std::nullopt};
      if (c.lhs.sort() != c.rhs.sort()) throw std::invalid_argument("sides have different sorts");
      c.stage = j.value("stage", 1);
      c.effective_size = j.value("effective_size", 0);
      c.tests_passed = j.value("tests_passed", 0);
      const json& pre = j.at("precondition");
      if (!pre.is_null()) {
        const std::string name = pre.at("predicate").get<std::string>();
        Condition cond;
        bool found = false;
        for (std::uint32_t p = 0; p < theory.predicates.size(); ++p) {
          if (theory.predicates[p].name == name) {
            cond.predicate = p;
            found = true;
          }
        }
        if (!found) throw std::invalid_argument("unknown predicate " + name);
        for (const json& a : pre.at("args")) {
          auto it = vars.find(a.get<std::string>());
          if (it == vars.end()) throw std::invalid_argument("unknown variable " + a.get<std::string>());
          cond.args.push_back(it->second);
        }
        const Predicate& p = theory.predicates[cond.predicate];
        if (cond.args.size() != p.arg_sorts.size()) throw std::invalid_argument("wrong predicate arity");
        for (std::size_t i = 0; i < cond.args.size(); ++i) {
          if (cond.args[i].sort != p.arg_sorts[i]) throw std::invalid_argument("ill-sorted precondition");
        }
        c.precondition = std::move(cond);
      }
      out.push_back(std::move(c));
    } catch (const json::exception& e) {
      throw std::invalid_argument(std::string("malformed law: ") + e.what());
    } catch (const ParseError& e) {
      throw std::invalid_argument(std::string("malformed term: ") + e.what());
    } catch (const SortError& e) {
      throw std::invalid_argument(std::string("ill-sorted term: ") + e.what());
    }
  }
  return out;
}

}  // namespace lawseeker
