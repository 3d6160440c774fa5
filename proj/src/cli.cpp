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

#include "lawseeker/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "lawseeker/explore.hpp"
#include "lawseeker/frontend.hpp"
#include "lawseeker/oracle.hpp"
#include "lawseeker/report.hpp"

namespace lawseeker {

namespace {

struct Overrides {
  std::optional<int> max_size, max_tests;
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> fuel;
  std::string format = "text";
  std::string out_path;
  bool no_observe = false;
};

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Loads and checks a theory file, printing a diagnostic on failure.
std::optional<Theory> load(const std::string& path, std::ostream& err) {
  auto text = read_file(path);
  if (!text) {
    err << path << ": error: cannot read file\n";
    return std::nullopt;
  }
  try {
    return load_theory(*text);
  } catch (const ParseError& e) {
    err << format_diagnostic(path, *text, e.span, std::string("parse error: ") + e.what());
  } catch (const CheckError& e) {
    err << format_diagnostic(path, *text, e.span,
                             std::string(category_name(e.category)) + ": " + e.what());
  }
  return std::nullopt;
}

std::optional<std::uint64_t> env_seed(std::ostream& err, bool& bad) {
  const char* s = std::getenv("LAWSEEKER_SEED");
  if (!s || !*s) return std::nullopt;
  char* end = nullptr;
  errno = 0;
  unsigned long long v = std::strtoull(s, &end, 10);
  if (*end != '\0' || errno != 0 || *s == '-') {
    err << "error: LAWSEEKER_SEED must be a non-negative integer, got '" << s << "'\n";
    bad = true;
    return std::nullopt;
  }
  return v;
}

bool emit(const std::string& text, const std::string& path, std::ostream& out, std::ostream& err) {
  if (path.empty()) {
    out << text;
    return true;
  }
  std::ofstream f(path, std::ios::binary);
  f << text;
  if (!f) {
    err << path << ": error: cannot write file\n";
    return false;
  }
  return true;
}

int cmd_check(const std::string& path, std::ostream& out, std::ostream& err) {
  auto theory = load(path, err);
  if (!theory) return exit_code::kInputError;
  out << "ok: theory " << theory->name << ", " << theory->signature.sort_count() - 1 << " sorts, "
      << theory->signature.symbol_count() << " symbols, " << theory->last_stage() << " stages\n";
  return exit_code::kOk;
}

int cmd_explore(const std::string& path, const Overrides& o, std::ostream& out, std::ostream& err) {
  bool bad_env = false;
  const auto seed_from_env = env_seed(err, bad_env);
  if (bad_env) return exit_code::kUsage;

  auto theory = load(path, err);
  if (!theory) return exit_code::kInputError;

  Config config = theory->config;
  if (seed_from_env) config.seed = *seed_from_env;
  if (o.seed) config.seed = *o.seed;
  if (o.max_size) config.max_term_size = *o.max_size;
  if (o.max_tests) config.max_tests = *o.max_tests;
  if (o.fuel) config.fuel = *o.fuel;
  if (o.no_observe) config.observe = false;
  try {
    config.validate();
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kUsage;
  }

  ExplorationReport report;
  try {
    report = explore(*theory, config);
  } catch (const std::exception& e) {
    err << path << ": error: " << e.what() << '\n';
    return exit_code::kInputError;
  }
  for (const std::string& w : report.warnings) err << "warning: " << w << '\n';

  std::string text = o.format == "json" ? to_json(report, *theory, config).dump(2) + "\n"
                                        : format_text(report, *theory);
  return emit(text, o.out_path, out, err) ? exit_code::kOk : exit_code::kInputError;
}

std::string show_case(const Conjecture& law, const TestCase& tc, const Theory& theory) {
  std::vector<Variable> vars(law.lhs.vars().begin(), law.lhs.vars().end());
  vars.insert(vars.end(), law.rhs.vars().begin(), law.rhs.vars().end());
  if (law.precondition) vars.insert(vars.end(), law.precondition->args.begin(), law.precondition->args.end());
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  std::string out;
  for (const Variable& v : vars) {
    if (!out.empty()) out += ", ";
    out += variable_name(v, theory.signature) + " = " + show_value(tc.value_of(v), theory);
  }
  return out;
}

int cmd_verify(const std::string& report_path, const std::string& theory_path, std::ostream& out,
               std::ostream& err) {
  auto theory = load(theory_path, err);
  if (!theory) return exit_code::kInputError;
  auto text = read_file(report_path);
  if (!text) {
    err << report_path << ": error: cannot read file\n";
    return exit_code::kInputError;
  }
  nlohmann::json doc;
  std::vector<Conjecture> laws;
  try {
    doc = nlohmann::json::parse(*text);
    laws = laws_from_json(doc, *theory);
  } catch (const std::exception& e) {
    err << report_path << ": error: " << e.what() << '\n';
    return exit_code::kInputError;
  }
  const auto header = doc.value("header", nlohmann::json::object());
  if (header.contains("theory_digest") && header["theory_digest"] != theory_digest(*theory)) {
    err << report_path << ": error: report was produced from a different theory\n";
    return exit_code::kInputError;
  }
  OracleOptions options;
  options.fuel = theory->config.fuel;
  options.cap = theory->oracle.cap;
  if (header.contains("config")) {
    options.fuel = header["config"].value("fuel", options.fuel);
    options.observe = header["config"].value("observe", true);
  }

  Universe universe = build_universe(*theory);
  std::size_t held = 0, failed = 0, unsure = 0;
  for (std::size_t i = 0; i < laws.size(); ++i) {
    const Conjecture& law = laws[i];
    out << i + 1 << ". " << show_law(law, *theory) << ": ";
    try {
      Verdict v = exhaustive_check(law, *theory, universe, options);
      switch (v.kind) {
        case Verdict::Kind::Holds:
          ++held;
          out << "holds (" << v.valuations << " valuations)\n";
          break;
        case Verdict::Kind::Counterexample:
          ++failed;
          out << "COUNTEREXAMPLE " << show_case(law, *v.counterexample, *theory) << '\n';
          break;
        case Verdict::Kind::Inconclusive:
          ++unsure;
          out << "inconclusive (" << v.undefined_fraction * 100 << "% undefined)\n";
          break;
      }
    } catch (const UniverseTooLarge& e) {
      ++unsure;
      out << "inconclusive (" << e.what() << ")\n";
    }
  }
  out << "-- " << held << " hold, " << failed << " refuted, " << unsure << " inconclusive\n";
  return failed > 0 ? exit_code::kCounterexample : exit_code::kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Discovers equational laws of a theory by testing."};
  app.require_subcommand(1);

  std::string explore_path;
  Overrides o;
  auto* explore_cmd = app.add_subcommand("explore", "Search a theory for laws");
  explore_cmd->add_option("theory", explore_path, "Theory file")->required();
  explore_cmd->add_option("--max-size", o.max_size, "Largest term size")->check(CLI::PositiveNumber);
  explore_cmd->add_option("--max-tests", o.max_tests, "Confirmation tests per law")->check(CLI::PositiveNumber);
  explore_cmd->add_option("--seed", o.seed, "Random seed (default: LAWSEEKER_SEED, then the theory)");
  explore_cmd->add_option("--fuel", o.fuel, "Evaluation step budget")->check(CLI::PositiveNumber);
  explore_cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  explore_cmd->add_option("--out", o.out_path, "Write the report here instead of standard output");
  explore_cmd->add_flag("--no-observe", o.no_observe, "Compare observed sorts structurally");

  std::string check_path;
  auto* check_cmd = app.add_subcommand("check", "Parse and type-check a theory");
  check_cmd->add_option("theory", check_path, "Theory file")->required();

  std::string report_path, verify_theory;
  auto* verify_cmd = app.add_subcommand("verify", "Re-check a JSON report with the exhaustive oracle");
  verify_cmd->add_option("report", report_path, "Report from explore --format json")->required();
  verify_cmd->add_option("--theory", verify_theory, "Theory the report was produced from")->required();

  std::vector<const char*> args;
  for (const std::string& a : argv) args.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(args.size()), args.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::kOk : exit_code::kUsage;
  }

  if (*explore_cmd) return cmd_explore(explore_path, o, out, err);
  if (*check_cmd) return cmd_check(check_path, out, err);
  return cmd_verify(report_path, verify_theory, out, err);
}

}  // namespace lawseeker
