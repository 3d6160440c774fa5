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

#include "lawseeker/frontend.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace lawseeker {

namespace {

[[noreturn]] void fail(const SExpr& at, CheckCategory c, const std::string& message) {
  throw CheckError(at.span, c, message);
}

const SExpr& expect_symbol(const SExpr& e, const char* what) {
  if (!e.is_symbol()) fail(e, CheckCategory::Malformed, std::string("expected ") + what);
  return e;
}

const SExpr& expect_list(const SExpr& e, const char* what) {
  if (!e.is_list()) fail(e, CheckCategory::Malformed, std::string("expected ") + what);
  return e;
}

std::int64_t expect_int(const SExpr& e, const char* what) {
  if (!e.is_integer()) fail(e, CheckCategory::Malformed, std::string("expected integer for ") + what);
  try {
    return std::stoll(e.text);
  } catch (const std::out_of_range&) {
    fail(e, CheckCategory::InvalidOption, std::string(what) + " is out of range");
  }
}

void expect_arity(const SExpr& e, std::size_t n, const char* form) {
  if (e.items.size() != n) {
    fail(e, CheckCategory::Malformed,
         std::string("(") + form + " ...) takes " + std::to_string(n - 1) + " argument(s)");
  }
}

struct Local {
  std::string name;
  std::uint32_t slot;
  SortId sort;
};

/// Checks one function body. Locals are numbered frame slots; shadowing is
/// allowed and frees nothing, so the frame size is the total binder count.
class BodyChecker {
 public:
  explicit BodyChecker(const Theory& theory) : th_(theory) {}

  std::uint32_t bind(std::string name, SortId sort) {
    std::uint32_t slot = next_slot_++;
    scope_.push_back({std::move(name), slot, sort});
    return slot;
  }
  std::uint32_t frame_size() const { return next_slot_; }

  ExprPtr check(const SExpr& e, std::optional<SortId> expected) {
    auto out = std::make_shared<Expr>();
    out->span = e.span;
    switch (e.kind) {
      case SExpr::Kind::Integer: {
        SortId s = expected ? *expected : default_int_sort(e);
        if (th_.signature.sort(s).kind != SortKind::Integer) {
          fail(e, CheckCategory::SortMismatch, "integer literal used where " + sort_name(s) + " is expected");
        }
        out->kind = Expr::Kind::IntLit;
        out->int_value = Integer(e.text);
        out->name = e.text;
        out->sort = s;
        return out;
      }
      case SExpr::Kind::String:
        fail(e, CheckCategory::Malformed, "string literal in expression");
      case SExpr::Kind::Symbol:
        return check_symbol(e, expected, out);
      case SExpr::Kind::List:
        break;
    }
    if (e.items.empty()) fail(e, CheckCategory::Malformed, "empty application");
    const SExpr& head = expect_symbol(e.items[0], "operator name");
    const std::string& h = head.text;
    if (h == "ite") return check_ite(e, expected, out);
    if (h == "match") return check_match(e, expected, out);
    if (h == "let") return check_let(e, expected, out);
    if (auto f = th_.find_function(h)) return check_call(e, *f, expected, out);
    if (auto c = th_.find_constructor(h)) return check_construct(e, *c, expected, out);
    if (auto b = find_builtin(h)) return check_builtin(e, *b, expected, out);
    fail(head, CheckCategory::UnknownName, "unknown function '" + h + "'");
  }

 private:
  std::string sort_name(SortId s) const { return th_.signature.sort(s).name; }

  void require(const SExpr& at, SortId found, std::optional<SortId> expected) const {
    if (expected && *expected != found) {
      fail(at, CheckCategory::SortMismatch,
           "expected " + sort_name(*expected) + ", found " + sort_name(found));
    }
  }

  SortId default_int_sort(const SExpr& at) const {
    for (std::uint32_t i = 0; i < th_.signature.sort_count(); ++i) {
      if (th_.signature.sort(SortId{i}).kind == SortKind::Integer) return SortId{i};
    }
    fail(at, CheckCategory::SortMismatch, "integer literal but no integer sort is declared");
  }

  ExprPtr check_symbol(const SExpr& e, std::optional<SortId> expected, std::shared_ptr<Expr> out) {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
      if (it->name == e.text) {
        require(e, it->sort, expected);
        out->kind = Expr::Kind::Local;
        out->slot = it->slot;
        out->sort = it->sort;
        out->name = e.text;
        return out;
      }
    }
    if (e.text == "true" || e.text == "false") {
      require(e, th_.bool_sort(), expected);
      out->kind = Expr::Kind::BoolLit;
      out->bool_value = e.text == "true";
      out->sort = th_.bool_sort();
      out->name = e.text;
      return out;
    }
    if (auto c = th_.find_constructor(e.text)) {
      SExpr app;
      app.span = e.span;
      app.items.push_back(e);
      return check_construct(app, *c, expected, out);
    }
    if (auto f = th_.find_function(e.text)) {
      SExpr app;
      app.span = e.span;
      app.items.push_back(e);
      return check_call(app, *f, expected, out);
    }
    fail(e, CheckCategory::UnknownName, "unknown name '" + e.text + "'");
  }

  ExprPtr check_call(const SExpr& e, std::uint32_t fn, std::optional<SortId> expected,
                     std::shared_ptr<Expr> out) {
    const Function& f = th_.functions[fn];
    if (e.items.size() - 1 != f.params.size()) {
      fail(e, CheckCategory::SortMismatch,
           "'" + f.name + "' expects " + std::to_string(f.params.size()) + " argument(s), got " +
               std::to_string(e.items.size() - 1));
    }
    for (std::size_t i = 0; i < f.params.size(); ++i) out->args.push_back(check(e.items[i + 1], f.params[i].sort));
    require(e, f.result, expected);
    out->kind = Expr::Kind::Call;
    out->target = fn;
    out->name = f.name;
    out->sort = f.result;
    return out;
  }

  ExprPtr check_construct(const SExpr& e, CtorIndex c, std::optional<SortId> expected,
                          std::shared_ptr<Expr> out) {
    const Constructor& ctor = th_.constructors[c];
    if (e.items.size() - 1 != ctor.fields.size()) {
      fail(e, CheckCategory::SortMismatch,
           "constructor '" + ctor.name + "' expects " + std::to_string(ctor.fields.size()) +
               " argument(s), got " + std::to_string(e.items.size() - 1));
    }
    for (std::size_t i = 0; i < ctor.fields.size(); ++i) {
      out->args.push_back(check(e.items[i + 1], ctor.fields[i].sort));
    }
    require(e, ctor.sort, expected);
    out->kind = Expr::Kind::Construct;
    out->target = c;
    out->name = ctor.name;
    out->sort = ctor.sort;
    return out;
  }

  /// Sort of the first operand whose sort does not depend on context.
  std::optional<SortId> operand_sort(const SExpr& e) {
    for (std::size_t i = 1; i < e.items.size(); ++i) {
      const SExpr& a = e.items[i];
      if (a.is_integer()) continue;
      return check(a, std::nullopt)->sort;
    }
    return std::nullopt;
  }

  ExprPtr check_builtin(const SExpr& e, BuiltinOp op, std::optional<SortId> expected,
                        std::shared_ptr<Expr> out) {
    const std::size_t n = e.items.size() - 1;
    const std::string name(builtin_name(op));
    auto arity = [&](std::size_t lo, std::size_t hi) {
      if (n < lo || n > hi) fail(e, CheckCategory::SortMismatch, "wrong number of arguments to '" + name + "'");
    };
    auto need_int = [&](SortId s) {
      if (th_.signature.sort(s).kind != SortKind::Integer) {
        fail(e, CheckCategory::SortMismatch, "'" + name + "' needs integer operands, found " + sort_name(s));
      }
    };
    out->kind = Expr::Kind::Builtin;
    out->op = op;
    out->name = name;
    SortId operand;
    switch (op) {
      case BuiltinOp::Add:
      case BuiltinOp::Mul:
      case BuiltinOp::Max:
      case BuiltinOp::Min:
      case BuiltinOp::Sub:
      case BuiltinOp::Div:
      case BuiltinOp::Mod: {
        if (op == BuiltinOp::Div || op == BuiltinOp::Mod) {
          arity(2, 2);
        } else {
          arity(op == BuiltinOp::Sub ? 1 : 2, std::numeric_limits<std::size_t>::max());
        }
        operand = expected ? *expected : operand_sort(e).value_or(default_int_sort(e));
        need_int(operand);
        out->sort = operand;
        break;
      }
      case BuiltinOp::Lt:
      case BuiltinOp::Le:
      case BuiltinOp::Gt:
      case BuiltinOp::Ge:
        arity(2, std::numeric_limits<std::size_t>::max());
        operand = operand_sort(e).value_or(default_int_sort(e));
        need_int(operand);
        out->sort = th_.bool_sort();
        break;
      case BuiltinOp::Eq:
      case BuiltinOp::Distinct:
        arity(2, std::numeric_limits<std::size_t>::max());
        operand = operand_sort(e).value_or(default_int_sort(e));
        out->sort = th_.bool_sort();
        break;
      case BuiltinOp::Not:
        arity(1, 1);
        operand = th_.bool_sort();
        out->sort = th_.bool_sort();
        break;
      case BuiltinOp::And:
      case BuiltinOp::Or:
        arity(1, std::numeric_limits<std::size_t>::max());
        operand = th_.bool_sort();
        out->sort = th_.bool_sort();
        break;
    }
    for (std::size_t i = 1; i < e.items.size(); ++i) out->args.push_back(check(e.items[i], operand));
    require(e, out->sort, expected);
    return out;
  }

  ExprPtr check_ite(const SExpr& e, std::optional<SortId> expected, std::shared_ptr<Expr> out) {
    expect_arity(e, 4, "ite");
    out->kind = Expr::Kind::Ite;
    out->name = "ite";
    out->args.push_back(check(e.items[1], th_.bool_sort()));
    ExprPtr then_branch = check(e.items[2], expected);
    out->args.push_back(then_branch);
    out->args.push_back(check(e.items[3], then_branch->sort));
    out->sort = then_branch->sort;
    return out;
  }

  ExprPtr check_let(const SExpr& e, std::optional<SortId> expected, std::shared_ptr<Expr> out) {
    expect_arity(e, 3, "let");
    out->kind = Expr::Kind::Let;
    out->name = "let";
    const std::size_t mark = scope_.size();
    for (const SExpr& b : expect_list(e.items[1], "binding list").items) {
      expect_list(b, "(name expr) binding");
      expect_arity(b, 2, "binding");
      const SExpr& name = expect_symbol(b.items[0], "bound name");
      LetBinding binding;
      binding.name = name.text;
      binding.value = check(b.items[1], std::nullopt);
      binding.slot = bind(name.text, binding.value->sort);
      out->bindings.push_back(std::move(binding));
    }
    out->args.push_back(check(e.items[2], expected));
    out->sort = out->args.back()->sort;
    scope_.resize(mark);
    return out;
  }

  Pattern check_pattern(const SExpr& p, SortId sort) {
    Pattern out;
    const SortInfo& info = th_.signature.sort(sort);
    if (p.is_integer()) {
      if (info.kind != SortKind::Integer) fail(p, CheckCategory::SortMismatch, "integer pattern for sort " + info.name);
      out.kind = Pattern::Kind::Int;
      out.int_value = Integer(p.text);
      out.name = p.text;
      return out;
    }
    if (p.is_symbol()) {
      if (p.text == "_") {
        out.kind = Pattern::Kind::Wildcard;
        out.name = "_";
        return out;
      }
      if (p.text == "true" || p.text == "false") {
        if (info.kind != SortKind::Boolean) fail(p, CheckCategory::SortMismatch, "boolean pattern for sort " + info.name);
        out.kind = Pattern::Kind::Bool;
        out.bool_value = p.text == "true";
        out.name = p.text;
        return out;
      }
      if (auto c = th_.find_constructor(p.text); c && th_.constructors[*c].sort == sort) {
        if (!th_.constructors[*c].fields.empty()) {
          fail(p, CheckCategory::SortMismatch, "constructor '" + p.text + "' needs arguments in a pattern");
        }
        out.kind = Pattern::Kind::Constructor;
        out.ctor = *c;
        out.name = p.text;
        return out;
      }
      out.kind = Pattern::Kind::Bind;
      out.name = p.text;
      out.slot = bind(p.text, sort);
      return out;
    }
    if (!p.is_list() || p.items.empty()) fail(p, CheckCategory::Malformed, "expected pattern");
    const SExpr& head = expect_symbol(p.items[0], "constructor name");
    auto c = th_.find_constructor(head.text);
    if (!c) fail(head, CheckCategory::UnknownName, "unknown constructor '" + head.text + "'");
    const Constructor& ctor = th_.constructors[*c];
    if (ctor.sort != sort) {
      fail(head, CheckCategory::SortMismatch,
           "constructor '" + ctor.name + "' builds " + sort_name(ctor.sort) + ", scrutinee is " + info.name);
    }
    if (p.items.size() - 1 != ctor.fields.size()) {
      fail(p, CheckCategory::SortMismatch, "constructor '" + ctor.name + "' has " +
                                               std::to_string(ctor.fields.size()) + " field(s)");
    }
    out.kind = Pattern::Kind::Constructor;
    out.ctor = *c;
    out.name = ctor.name;
    for (std::size_t i = 0; i < ctor.fields.size(); ++i) {
      out.args.push_back(check_pattern(p.items[i + 1], ctor.fields[i].sort));
    }
    return out;
  }

  ExprPtr check_match(const SExpr& e, std::optional<SortId> expected, std::shared_ptr<Expr> out) {
    if (e.items.size() < 3) fail(e, CheckCategory::Malformed, "(match EXPR (PATTERN BODY)...) needs at least one arm");
    out->kind = Expr::Kind::Match;
    out->name = "match";
    ExprPtr scrutinee = check(e.items[1], std::nullopt);
    out->args.push_back(scrutinee);
    std::optional<SortId> result = expected;
    for (std::size_t i = 2; i < e.items.size(); ++i) {
      const SExpr& arm = expect_list(e.items[i], "(PATTERN BODY) arm");
      expect_arity(arm, 2, "arm");
      const std::size_t mark = scope_.size();
      MatchArm m;
      m.pattern = check_pattern(arm.items[0], scrutinee->sort);
      m.body = check(arm.items[1], result);
      result = m.body->sort;
      scope_.resize(mark);
      out->arms.push_back(std::move(m));
    }
    out->sort = *result;
    return out;
  }

  const Theory& th_;
  std::vector<Local> scope_;
  std::uint32_t next_slot_ = 0;
};

/// Keys accepted in `(options ...)` and their Config fields.
void apply_option(Config& config, const SExpr& entry) {
  expect_list(entry, "(key value) option");
  expect_arity(entry, 2, "option");
  const std::string& key = expect_symbol(entry.items[0], "option name").text;
  const std::int64_t v = expect_int(entry.items[1], key.c_str());
  auto as_int = [&]() {
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
      fail(entry.items[1], CheckCategory::InvalidOption, key + " is out of range");
    }
    return static_cast<int>(v);
  };
  if (key == "max-size") {
    config.max_term_size = as_int();
  } else if (key == "max-tests") {
    config.max_tests = as_int();
  } else if (key == "seed") {
    if (v < 0) fail(entry.items[1], CheckCategory::InvalidOption, "seed must be non-negative");
    config.seed = static_cast<std::uint64_t>(v);
  } else if (key == "vars-per-sort") {
    config.vars_per_sort = as_int();
  } else if (key == "fuel") {
    config.fuel = v;
  } else if (key == "initial-suite") {
    config.initial_suite = as_int();
  } else if (key == "contexts") {
    config.contexts_per_sort = as_int();
  } else if (key == "gen-size") {
    config.value_budget = as_int();
  } else if (key == "max-preconditions") {
    config.max_preconditions = as_int();
  } else {
    fail(entry.items[0], CheckCategory::InvalidOption, "unknown option '" + key + "'");
  }
}

class Checker {
 public:
  explicit Checker(const TheorySyntax& syntax) : syn_(syntax), th_(Theory::empty(syntax.name)) {}

  Theory run() {
    for (std::size_t i : syn_.options) check_options(clause(i));
    declare_sorts();
    declare_constructors();
    declare_functions();
    th_.finalize();
    check_base_constructors();
    assign_variable_names();
    check_function_bodies();
    check_normalizers();
    for (std::size_t i : syn_.predicates) check_predicate(clause(i));
    for (std::size_t i : syn_.observations) check_observation(clause(i));
    for (std::size_t i : syn_.backgrounds) check_symbols(clause(i), 1, true);
    int stage = 0;
    for (std::size_t i : syn_.stages) check_symbols(clause(i), ++stage, false);
    for (std::size_t i : syn_.oracles) check_oracle(clause(i));
    check_variable_clashes();
    return std::move(th_);
  }

 private:
  const SExpr& clause(std::size_t i) const { return syn_.root.items[i]; }

  void claim_name(const SExpr& at, const std::string& name, const char* what) {
    if (!names_.insert(name).second) fail(at, CheckCategory::DuplicateName, std::string(what) + " '" + name + "' is already defined");
  }

  SortId resolve_sort(const SExpr& e) const {
    expect_symbol(e, "sort name");
    auto s = th_.signature.find_sort(e.text);
    if (!s) fail(e, CheckCategory::UnknownName, "unknown sort '" + e.text + "'");
    return *s;
  }

  void check_options(const SExpr& c) {
    for (std::size_t k = 1; k < c.items.size(); ++k) apply_option(th_.config, c.items[k]);
    try {
      th_.config.validate();
    } catch (const std::invalid_argument& ex) {
      fail(c, CheckCategory::InvalidOption, ex.what());
    }
  }

  /// Registers every sort name first so datatypes may refer to each other.
  void declare_sorts() {
    sort_names_.insert("Bool");
    std::vector<std::size_t> order;
    order.insert(order.end(), syn_.sorts.begin(), syn_.sorts.end());
    order.insert(order.end(), syn_.datatypes.begin(), syn_.datatypes.end());
    std::sort(order.begin(), order.end());
    for (std::size_t i : order) {
      const SExpr& c = clause(i);
      if (c.items.size() < 2) fail(c, CheckCategory::Malformed, "missing sort name");
      const SExpr& name = expect_symbol(c.items[1], "sort name");
      if (!sort_names_.insert(name.text).second) fail(name, CheckCategory::DuplicateName, "sort '" + name.text + "' is already defined");
      SortInfo info;
      info.name = name.text;
      info.kind = c.head() == "sort" ? SortKind::Integer : SortKind::Datatype;
      SortId id = th_.signature.add_sort(std::move(info));
      sort_clause_.push_back({id, i});
    }
  }

  void declare_constructors() {
    for (auto [id, i] : sort_clause_) {
      const SExpr& c = clause(i);
      SortInfo& info = th_.signature.sort(id);
      if (info.kind != SortKind::Datatype) {
        for (std::size_t k = 2; k < c.items.size(); ++k) {
          const SExpr& item = expect_list(c.items[k], "sort attribute");
          if (item.head() == "int-range") {
            expect_arity(item, 3, "int-range");
            if (!item.items[1].is_integer() || !item.items[2].is_integer()) fail(item, CheckCategory::Malformed, "int-range bounds must be integers");
            info.low = Integer(item.items[1].text);
            info.high = Integer(item.items[2].text);
            if (info.high < info.low) fail(item, CheckCategory::InvalidOption, "empty int-range");
            if (info.high - info.low >= (Integer(1) << 62)) fail(item, CheckCategory::InvalidOption, "int-range too wide");
          } else if (item.head() != "vars" && item.head() != "var-count") {
            fail(item, CheckCategory::Malformed, "unknown sort attribute '" + std::string(item.head()) + "'");
          }
        }
        continue;
      }
      if (c.items.size() < 3) fail(c, CheckCategory::Malformed, "declare-datatype needs a constructor list");
      const SExpr& ctors = expect_list(c.items[2], "constructor list");
      if (ctors.items.empty()) fail(ctors, CheckCategory::NoBaseConstructor, "datatype " + info.name + " has no constructors");
      for (const SExpr& ce : ctors.items) {
        Constructor ctor;
        ctor.sort = id;
        const SExpr* name_at = &ce;
        if (ce.is_symbol()) {
          ctor.name = ce.text;
        } else {
          expect_list(ce, "(CTOR (FIELD SORT)...)");
          if (ce.items.empty()) fail(ce, CheckCategory::Malformed, "empty constructor declaration");
          name_at = &ce.items[0];
          ctor.name = expect_symbol(ce.items[0], "constructor name").text;
          for (std::size_t k = 1; k < ce.items.size(); ++k) {
            const SExpr& f = expect_list(ce.items[k], "(FIELD SORT)");
            expect_arity(f, 2, "field");
            ctor.fields.push_back({expect_symbol(f.items[0], "field name").text, resolve_sort(f.items[1])});
          }
        }
        claim_name(*name_at, ctor.name, "constructor");
        info.constructors.push_back(static_cast<CtorIndex>(th_.constructors.size()));
        th_.constructors.push_back(std::move(ctor));
      }
      for (std::size_t k = 3; k < c.items.size(); ++k) {
        const SExpr& item = expect_list(c.items[k], "datatype attribute");
        if (item.head() != "vars" && item.head() != "var-count" && item.head() != "normalize") {
          fail(item, CheckCategory::Malformed, "unknown datatype attribute '" + std::string(item.head()) + "'");
        }
      }
    }
  }

  void declare_functions() {
    for (std::size_t i : syn_.functions) {
      const SExpr& c = clause(i);
      if (c.items.size() != 5) fail(c, CheckCategory::Malformed, "expected (define-fun NAME ((ARG SORT)...) SORT BODY)");
      Function f;
      f.name = expect_symbol(c.items[1], "function name").text;
      if (find_builtin(f.name) || f.name == "ite" || f.name == "match" || f.name == "let") {
        fail(c.items[1], CheckCategory::DuplicateName, "'" + f.name + "' is a built-in operator");
      }
      claim_name(c.items[1], f.name, "function");
      std::set<std::string> seen;
      for (const SExpr& p : expect_list(c.items[2], "parameter list").items) {
        expect_list(p, "(ARG SORT)");
        expect_arity(p, 2, "parameter");
        const std::string& pname = expect_symbol(p.items[0], "parameter name").text;
        if (!seen.insert(pname).second) fail(p, CheckCategory::DuplicateName, "duplicate parameter '" + pname + "'");
        f.params.push_back({pname, resolve_sort(p.items[1])});
      }
      f.result = resolve_sort(c.items[3]);
      f.recursive = c.head() == "define-fun-rec";
      f.span = c.span;
      th_.functions.push_back(std::move(f));
    }
  }

  void check_base_constructors() {
    for (auto [id, i] : sort_clause_) {
      if (th_.signature.sort(id).kind == SortKind::Datatype && !th_.min_value_size(id)) {
        fail(clause(i), CheckCategory::NoBaseConstructor,
             "datatype " + th_.signature.sort(id).name + " has no finite value (every constructor is recursive)");
      }
    }
  }

  void assign_variable_names() {
    const std::size_t default_count = static_cast<std::size_t>(th_.config.vars_per_sort);
    auto fill = [&](SortInfo& info, std::vector<std::string> names, std::size_t count, const SExpr& at) {
      if (names.empty()) {
        char first = info.name.empty() ? 'v' : static_cast<char>(std::tolower(static_cast<unsigned char>(info.name[0])));
        if (!std::isalpha(static_cast<unsigned char>(first))) first = 'v';
        names.push_back(std::string(1, first));
      }
      if (names.size() > count) names.resize(count);
      const std::string base = names.front();
      for (int n = 2; names.size() < count; ++n) {
        std::string candidate = base + std::to_string(n);
        if (std::find(names.begin(), names.end(), candidate) == names.end()) names.push_back(candidate);
      }
      std::set<std::string> unique(names.begin(), names.end());
      if (unique.size() != names.size()) fail(at, CheckCategory::DuplicateName, "duplicate variable name in sort " + info.name);
      info.var_names = std::move(names);
    };
    for (auto [id, i] : sort_clause_) {
      const SExpr& c = clause(i);
      std::vector<std::string> names;
      std::size_t count = default_count;
      for (std::size_t k = 2; k < c.items.size(); ++k) {
        const SExpr& item = c.items[k];
        if (item.head() == "vars") {
          for (std::size_t j = 1; j < item.items.size(); ++j) {
            const SExpr& v = item.items[j];
            if (!v.is_string() && !v.is_symbol()) fail(v, CheckCategory::Malformed, "variable names are strings");
            if (v.text.empty()) fail(v, CheckCategory::Malformed, "empty variable name");
            names.push_back(v.text);
          }
        } else if (item.head() == "var-count") {
          expect_arity(item, 2, "var-count");
          std::int64_t n = expect_int(item.items[1], "var-count");
          if (n < 1 || n > 26) fail(item, CheckCategory::InvalidOption, "var-count must be in [1, 26]");
          count = static_cast<std::size_t>(n);
        }
      }
      fill(th_.signature.sort(id), std::move(names), count, c);
    }
    // Bool is built in, so its names give way to the user's.
    std::set<std::string> taken;
    for (const SortInfo& s : th_.signature.sorts()) taken.insert(s.var_names.begin(), s.var_names.end());
    std::vector<std::string> bools;
    for (const char* candidate : {"p", "q", "r", "s", "t", "u", "w"}) {
      if (bools.size() < default_count && !taken.count(candidate)) bools.push_back(candidate);
    }
    for (int n = 2; bools.size() < default_count; ++n) {
      std::string candidate = "p" + std::to_string(n);
      if (!taken.count(candidate)) bools.push_back(candidate);
    }
    th_.signature.sort(th_.bool_sort()).var_names = std::move(bools);
  }

  void check_function_bodies() {
    for (std::size_t n = 0; n < syn_.functions.size(); ++n) {
      const SExpr& c = clause(syn_.functions[n]);
      Function& f = th_.functions[n];
      BodyChecker body(th_);
      for (const Param& p : f.params) body.bind(p.name, p.sort);
      f.body = body.check(c.items[4], f.result);
      f.frame_size = body.frame_size();
    }
  }

  void check_normalizers() {
    for (auto [id, i] : sort_clause_) {
      const SExpr& c = clause(i);
      for (std::size_t k = 3; k < c.items.size() && th_.signature.sort(id).kind == SortKind::Datatype; ++k) {
        const SExpr& item = c.items[k];
        if (item.head() != "normalize") continue;
        expect_arity(item, 2, "normalize");
        const SExpr& fname = expect_symbol(item.items[1], "function name");
        auto f = th_.find_function(fname.text);
        if (!f) fail(fname, CheckCategory::UnknownName, "unknown function '" + fname.text + "'");
        const Function& fn = th_.functions[*f];
        if (fn.params.size() != 1 || fn.params[0].sort != id || fn.result != id) {
          const std::string& s = th_.signature.sort(id).name;
          fail(fname, CheckCategory::SortMismatch, "normalizer must have type " + s + " -> " + s);
        }
        th_.signature.sort(id).normalizer = *f;
      }
    }
  }

  std::uint32_t resolve_function(const SExpr& e) const {
    expect_symbol(e, "function name");
    auto f = th_.find_function(e.text);
    if (!f) fail(e, CheckCategory::UnknownName, "unknown function '" + e.text + "'");
    return *f;
  }

  void check_predicate(const SExpr& c) {
    expect_arity(c, 3, "predicate");
    if (!c.items[1].is_string()) fail(c.items[1], CheckCategory::Malformed, "predicate name must be a string");
    Predicate p;
    p.name = c.items[1].text;
    p.function = resolve_function(c.items[2]);
    const Function& f = th_.functions[p.function];
    if (f.result != th_.bool_sort()) fail(c.items[2], CheckCategory::SortMismatch, "predicate function must return Bool");
    if (f.params.empty()) fail(c.items[2], CheckCategory::SortMismatch, "predicate function needs at least one argument");
    for (const Param& prm : f.params) p.arg_sorts.push_back(prm.sort);
    th_.predicates.push_back(std::move(p));
  }

  void check_observation(const SExpr& c) {
    if (c.items.size() != 5) fail(c, CheckCategory::Malformed, "expected (observe SORT (context S) (result S) (via FN))");
    ObservationSpec o;
    o.observed = resolve_sort(c.items[1]);
    bool have_context = false, have_result = false, have_fn = false;
    for (std::size_t k = 2; k < 5; ++k) {
      const SExpr& item = expect_list(c.items[k], "observation attribute");
      expect_arity(item, 2, "observation attribute");
      if (item.head() == "context") {
        o.context = resolve_sort(item.items[1]);
        have_context = true;
      } else if (item.head() == "result") {
        o.result = resolve_sort(item.items[1]);
        have_result = true;
      } else if (item.head() == "via") {
        o.function = resolve_function(item.items[1]);
        have_fn = true;
      } else {
        fail(item, CheckCategory::Malformed, "unknown observation attribute");
      }
    }
    if (!have_context || !have_result || !have_fn) fail(c, CheckCategory::BadObservation, "observation needs context, result and via");
    const Function& f = th_.functions[o.function];
    const auto& s = th_.signature;
    if (f.params.size() != 2 || f.params[0].sort != o.context || f.params[1].sort != o.observed ||
        f.result != o.result) {
      fail(c, CheckCategory::BadObservation,
           "observation function '" + f.name + "' must have type " + s.sort(o.context).name + " " +
               s.sort(o.observed).name + " -> " + s.sort(o.result).name);
    }
    if (th_.observation_for(o.observed)) fail(c, CheckCategory::BadObservation, "sort " + s.sort(o.observed).name + " is already observed");
    th_.observations.push_back(o);
  }

  void check_symbols(const SExpr& c, int stage, bool background) {
    if (c.items.size() < 2) fail(c, CheckCategory::EmptyStage, background ? "empty background" : "empty stage");
    for (std::size_t k = 1; k < c.items.size(); ++k) {
      const SExpr& con = expect_list(c.items[k], "(con \"NAME\" REF)");
      if (con.head() != "con") fail(con, CheckCategory::Malformed, "expected (con \"NAME\" REF)");
      expect_arity(con, 3, "con");
      if (!con.items[1].is_string()) fail(con.items[1], CheckCategory::Malformed, "symbol name must be a string");
      Symbol sym;
      sym.name = con.items[1].text;
      sym.invisible = sym.name.empty();
      sym.background = background;
      sym.stage = stage;
      const SExpr& ref = con.items[2];
      if (ref.is_list() && ref.head() == "lit") {
        expect_arity(ref, 3, "lit");
        SortId s = resolve_sort(ref.items[2]);
        const SortInfo& info = th_.signature.sort(s);
        sym.ref.kind = SymbolRef::Kind::Literal;
        if (info.kind == SortKind::Integer && ref.items[1].is_integer()) {
          sym.ref.literal = Value::integer(Integer(ref.items[1].text));
        } else if (info.kind == SortKind::Boolean && (ref.items[1].is_symbol("true") || ref.items[1].is_symbol("false"))) {
          sym.ref.literal = Value::boolean(ref.items[1].text == "true");
        } else {
          fail(ref, CheckCategory::SortMismatch, "literal does not belong to sort " + info.name);
        }
        sym.result = s;
      } else {
        expect_symbol(ref, "function, constructor or (lit VALUE SORT)");
        if (auto f = th_.find_function(ref.text)) {
          const Function& fn = th_.functions[*f];
          sym.ref.kind = SymbolRef::Kind::Function;
          sym.ref.index = *f;
          for (const Param& p : fn.params) sym.arg_sorts.push_back(p.sort);
          sym.result = fn.result;
        } else if (auto ct = th_.find_constructor(ref.text)) {
          const Constructor& ctor = th_.constructors[*ct];
          sym.ref.kind = SymbolRef::Kind::Constructor;
          sym.ref.index = *ct;
          for (const Field& f : ctor.fields) sym.arg_sorts.push_back(f.sort);
          sym.result = ctor.sort;
        } else {
          fail(ref, CheckCategory::UnknownName, "unknown function or constructor '" + ref.text + "'");
        }
      }
      symbol_spans_.push_back(con.span);
      th_.signature.add_symbol(std::move(sym));
    }
  }

  void check_oracle(const SExpr& c) {
    for (std::size_t k = 1; k < c.items.size(); ++k) {
      const SExpr& item = expect_list(c.items[k], "oracle setting");
      if (item.head() == "depth") {
        expect_arity(item, 2, "depth");
        std::int64_t d = expect_int(item.items[1], "depth");
        if (d < 1 || d > 16) fail(item, CheckCategory::InvalidOption, "oracle depth must be in [1, 16]");
        th_.oracle.depth = static_cast<int>(d);
      } else if (item.head() == "cap") {
        expect_arity(item, 2, "cap");
        std::int64_t cap = expect_int(item.items[1], "cap");
        if (cap < 1) fail(item, CheckCategory::InvalidOption, "oracle cap must be positive");
        th_.oracle.cap = static_cast<std::uint64_t>(cap);
      } else if (item.head() == "universe") {
        expect_arity(item, 3, "universe");
        UniverseOverride u;
        u.sort = resolve_sort(item.items[1]);
        const SExpr& spec = expect_list(item.items[2], "(int-range LO HI) or (depth N)");
        const SortInfo& info = th_.signature.sort(u.sort);
        if (spec.head() == "int-range" && info.kind == SortKind::Integer) {
          expect_arity(spec, 3, "int-range");
          if (!spec.items[1].is_integer() || !spec.items[2].is_integer()) fail(spec, CheckCategory::Malformed, "int-range bounds must be integers");
          Integer lo(spec.items[1].text), hi(spec.items[2].text);
          if (hi < lo) fail(spec, CheckCategory::InvalidOption, "empty int-range");
          u.range = std::make_pair(lo, hi);
        } else if (spec.head() == "depth" && info.kind == SortKind::Datatype) {
          expect_arity(spec, 2, "depth");
          std::int64_t d = expect_int(spec.items[1], "depth");
          if (d < 1 || d > 16) fail(spec, CheckCategory::InvalidOption, "universe depth must be in [1, 16]");
          u.depth = static_cast<int>(d);
        } else {
          fail(spec, CheckCategory::SortMismatch, "universe setting does not fit sort " + info.name);
        }
        th_.oracle.overrides.push_back(std::move(u));
      } else {
        fail(item, CheckCategory::Malformed, "unknown oracle setting");
      }
    }
  }

  /// Variable names must not collide with each other or with symbol names,
  /// or printed laws would be ambiguous.
  void check_variable_clashes() {
    std::map<std::string, std::string> owner;
    for (const SortInfo& s : th_.signature.sorts()) {
      for (const std::string& v : s.var_names) {
        auto [it, fresh] = owner.emplace(v, s.name);
        if (!fresh) fail(syn_.root, CheckCategory::DuplicateName, "variable name '" + v + "' is used by sorts " + it->second + " and " + s.name);
      }
    }
    for (std::size_t i = 0; i < th_.signature.symbol_count(); ++i) {
      const Symbol& sym = th_.signature.symbols()[i];
      if (owner.count(sym.name)) {
        throw CheckError(symbol_spans_[i], CheckCategory::DuplicateName,
                         "symbol name '" + sym.name + "' is also a variable name");
      }
    }
  }

  const TheorySyntax& syn_;
  Theory th_;
  std::set<std::string> names_;
  std::set<std::string> sort_names_;
  std::vector<std::pair<SortId, std::size_t>> sort_clause_;
  std::vector<SourceSpan> symbol_spans_;
};

// Printing.

std::string quote(const std::string& s) {
  SExpr e;
  e.kind = SExpr::Kind::String;
  e.text = s;
  return print_sexpr(e);
}

void print_pattern(const Pattern& p, std::string& out) {
  if (p.kind == Pattern::Kind::Constructor && !p.args.empty()) {
    out += '(' + p.name;
    for (const Pattern& a : p.args) {
      out += ' ';
      print_pattern(a, out);
    }
    out += ')';
    return;
  }
  out += p.name;
}

void print_expr(const Expr& e, std::string& out) {
  switch (e.kind) {
    case Expr::Kind::Local:
    case Expr::Kind::IntLit:
    case Expr::Kind::BoolLit:
      out += e.name;
      return;
    case Expr::Kind::Construct:
      if (e.args.empty()) {
        out += e.name;
        return;
      }
      [[fallthrough]];
    case Expr::Kind::Call:
    case Expr::Kind::Builtin:
    case Expr::Kind::Ite:
      out += '(' + e.name;
      for (const ExprPtr& a : e.args) {
        out += ' ';
        print_expr(*a, out);
      }
      out += ')';
      return;
    case Expr::Kind::Match:
      out += "(match ";
      print_expr(*e.args[0], out);
      for (const MatchArm& arm : e.arms) {
        out += " (";
        print_pattern(arm.pattern, out);
        out += ' ';
        print_expr(*arm.body, out);
        out += ')';
      }
      out += ')';
      return;
    case Expr::Kind::Let:
      out += "(let (";
      for (std::size_t i = 0; i < e.bindings.size(); ++i) {
        if (i > 0) out += ' ';
        out += '(' + e.bindings[i].name + ' ';
        print_expr(*e.bindings[i].value, out);
        out += ')';
      }
      out += ") ";
      print_expr(*e.args[0], out);
      out += ')';
      return;
  }
}

void print_vars(const SortInfo& s, std::ostringstream& out) {
  out << " (vars";
  for (const std::string& v : s.var_names) out << ' ' << quote(v);
  out << ") (var-count " << s.var_names.size() << ')';
}

}  // namespace

std::string_view category_name(CheckCategory c) {
  switch (c) {
    case CheckCategory::UnknownName:
      return "unknown name";
    case CheckCategory::SortMismatch:
      return "sort mismatch";
    case CheckCategory::NoBaseConstructor:
      return "no base constructor";
    case CheckCategory::BadObservation:
      return "bad observation";
    case CheckCategory::EmptyStage:
      return "empty stage";
    case CheckCategory::DuplicateName:
      return "duplicate name";
    case CheckCategory::InvalidOption:
      return "invalid option";
    case CheckCategory::Malformed:
      return "malformed clause";
  }
  return "?";
}

TheorySyntax parse_theory(std::string_view text) {
  std::vector<SExpr> top = parse_sexprs(text);
  SourceSpan at;
  if (!top.empty()) at = top.front().span;
  if (top.size() != 1 || top[0].head() != "theory") {
    throw ParseError(at, "(theory ...)", "expected (theory ...)");
  }
  TheorySyntax out;
  out.root = std::move(top[0]);
  const auto& items = out.root.items;
  if (items.size() < 2 || !items[1].is_symbol()) {
    throw ParseError(items.size() < 2 ? out.root.span : items[1].span, "theory name", "expected theory name");
  }
  out.name = items[1].text;
  for (std::size_t i = 2; i < items.size(); ++i) {
    const SExpr& c = items[i];
    std::string_view h = c.head();
    if (h == "options") {
      out.options.push_back(i);
    } else if (h == "sort") {
      out.sorts.push_back(i);
    } else if (h == "declare-datatype") {
      out.datatypes.push_back(i);
    } else if (h == "define-fun" || h == "define-fun-rec") {
      out.functions.push_back(i);
    } else if (h == "predicate") {
      out.predicates.push_back(i);
    } else if (h == "observe") {
      out.observations.push_back(i);
    } else if (h == "background") {
      out.backgrounds.push_back(i);
    } else if (h == "stage") {
      out.stages.push_back(i);
    } else if (h == "oracle") {
      out.oracles.push_back(i);
    } else {
      throw ParseError(c.span,
                       "one of options, sort, declare-datatype, define-fun, define-fun-rec, predicate, "
                       "observe, background, stage, oracle",
                       c.is_list() && !h.empty() ? "unknown clause '" + std::string(h) + "'"
                                                 : "expected a clause");
    }
  }
  return out;
}

Theory check_theory(const TheorySyntax& syntax) { return Checker(syntax).run(); }

Theory load_theory(std::string_view text) { return check_theory(parse_theory(text)); }

std::string print_theory(const Theory& th) {
  std::ostringstream out;
  const Config& c = th.config;
  out << "(theory " << th.name << '\n';
  out << "  (options (max-size " << c.max_term_size << ") (max-tests " << c.max_tests << ") (seed " << c.seed
      << ") (vars-per-sort " << c.vars_per_sort << ") (fuel " << c.fuel << ") (initial-suite "
      << c.initial_suite << ") (contexts " << c.contexts_per_sort << ") (gen-size " << c.value_budget
      << ") (max-preconditions " << c.max_preconditions << "))\n";
  const Signature& sig = th.signature;
  for (std::uint32_t i = 1; i < sig.sort_count(); ++i) {
    const SortInfo& s = sig.sort(SortId{i});
    if (s.kind == SortKind::Integer) {
      out << "  (sort " << s.name << " (int-range " << s.low << ' ' << s.high << ')';
    } else {
      out << "  (declare-datatype " << s.name << " (";
      for (std::size_t k = 0; k < s.constructors.size(); ++k) {
        const Constructor& ctor = th.constructors[s.constructors[k]];
        if (k > 0) out << ' ';
        out << '(' << ctor.name;
        for (const Field& f : ctor.fields) out << " (" << f.name << ' ' << sig.sort(f.sort).name << ')';
        out << ')';
      }
      out << ')';
    }
    print_vars(s, out);
    if (s.normalizer) out << " (normalize " << th.functions[*s.normalizer].name << ')';
    out << ")\n";
  }
  for (const Function& f : th.functions) {
    out << "  (" << (f.recursive ? "define-fun-rec " : "define-fun ") << f.name << " (";
    for (std::size_t k = 0; k < f.params.size(); ++k) {
      if (k > 0) out << ' ';
      out << '(' << f.params[k].name << ' ' << sig.sort(f.params[k].sort).name << ')';
    }
    std::string body;
    print_expr(*f.body, body);
    out << ") " << sig.sort(f.result).name << '\n' << "    " << body << ")\n";
  }
  for (const Predicate& p : th.predicates) {
    out << "  (predicate " << quote(p.name) << ' ' << th.functions[p.function].name << ")\n";
  }
  for (const ObservationSpec& o : th.observations) {
    out << "  (observe " << sig.sort(o.observed).name << " (context " << sig.sort(o.context).name
        << ") (result " << sig.sort(o.result).name << ") (via " << th.functions[o.function].name << "))\n";
  }
  auto print_con = [&](const Symbol& s) {
    out << " (con " << quote(s.name) << ' ';
    switch (s.ref.kind) {
      case SymbolRef::Kind::Function:
        out << th.functions[s.ref.index].name;
        break;
      case SymbolRef::Kind::Constructor:
        out << th.constructors[s.ref.index].name;
        break;
      case SymbolRef::Kind::Literal:
        out << "(lit " << show_value(s.ref.literal, th) << ' ' << sig.sort(s.result).name << ')';
        break;
    }
    out << ')';
  };
  bool any_background = false;
  for (const Symbol& s : sig.symbols()) any_background = any_background || s.background;
  if (any_background) {
    out << "  (background";
    for (const Symbol& s : sig.symbols()) {
      if (s.background) print_con(s);
    }
    out << ")\n";
  }
  for (int stage = 1; stage <= th.last_stage(); ++stage) {
    out << "  (stage";
    for (const Symbol& s : sig.symbols()) {
      if (!s.background && s.stage == stage) print_con(s);
    }
    out << ")\n";
  }
  out << "  (oracle (depth " << th.oracle.depth << ") (cap " << th.oracle.cap << ')';
  for (const UniverseOverride& u : th.oracle.overrides) {
    out << " (universe " << sig.sort(u.sort).name;
    if (u.range) out << " (int-range " << u.range->first << ' ' << u.range->second << "))";
    if (u.depth) out << " (depth " << *u.depth << "))";
  }
  out << "))\n";
  return out.str();
}

std::string format_diagnostic(std::string_view file, std::string_view text, SourceSpan span,
                              std::string_view message) {
  std::ostringstream out;
  out << file << ':' << span.line << ':' << span.column << ": error: " << message << '\n';
  const std::size_t begin = std::min(span.begin, text.size());
  std::size_t line_start = begin;
  while (line_start > 0 && text[line_start - 1] != '\n') --line_start;
  std::size_t line_end = text.find('\n', begin);
  if (line_end == std::string_view::npos) line_end = text.size();
  out << "  " << text.substr(line_start, line_end - line_start) << '\n';
  out << "  " << std::string(span.column > 0 ? span.column - 1 : 0, ' ') << "^\n";
  return out.str();
}

}  // namespace lawseeker
