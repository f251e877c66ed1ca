// Copyright 2026 The pfa-reductions Authors.
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

// Command-line front end. Exit codes: 0 ok, 1 failed invariant, 2 bad
// input, 3 unmet construction precondition.

#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pfa/automaton.hpp"
#include "pfa/checks.hpp"
#include "pfa/error.hpp"
#include "pfa/io.hpp"
#include "pfa/pipeline.hpp"
#include "pfa/semithue.hpp"

namespace {

using pfa::Json;

constexpr int kInvariantFailed = 1;
constexpr int kBadInput = 2;
constexpr int kPrecondition = 3;

// Reads option values from a JSON object. Nested objects name subcommands:
// {"check": {"trials": 50}} sets `check --trials 50`.
class JsonConfig : public CLI::Config {
 public:
  std::string to_config(const CLI::App*, bool, bool, std::string) const override {
    return {};
  }

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    Json root;
    try {
      root = Json::parse(input);
    } catch (const Json::parse_error& e) {
      throw CLI::ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!root.is_object()) throw CLI::ConfigError("config must be a JSON object");
    std::vector<CLI::ConfigItem> items;
    flatten(root, {}, items);
    return items;
  }

 private:
  static std::string scalar(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number()) return v.dump();
    throw CLI::ConfigError("unsupported config value " + v.dump());
  }

  static void flatten(const Json& object, const std::vector<std::string>& parents,
                      std::vector<CLI::ConfigItem>& items) {
    for (const auto& [key, v] : object.items()) {
      if (v.is_object()) {
        auto nested = parents;
        nested.push_back(key);
        flatten(v, nested, items);
        continue;
      }
      CLI::ConfigItem item;
      item.parents = parents;
      item.name = key;
      if (v.is_array()) {
        for (const auto& x : v) item.inputs.push_back(scalar(x));
      } else {
        item.inputs.push_back(scalar(v));
      }
      items.push_back(std::move(item));
    }
  }
};

struct BuildArgs {
  std::string instance;
  std::string variant = "forward7";
  std::string merge = "auto";
  std::string alpha;
  std::string comparison = "strict";
  std::string out = "pfa.json";
  std::string report = "build_report.json";
};

struct EvalArgs {
  std::string pfa;
  std::vector<std::string> words;
  std::string comparison;
};

struct SolveArgs {
  std::string pcp, pfa, semithue;
  std::size_t max_steps = 16;
  std::size_t max_overhang = 64;
  std::size_t max_len = 6;
  std::size_t depth = 8;
  bool exclude_empty = false;
  bool skip_empty_decoding = false;
  std::string report;
};

struct CheckArgs {
  std::string suite = "all";
  std::optional<std::size_t> trials;
  std::optional<std::size_t> max_len;
  std::uint64_t seed = pfa::kDefaultSeed;
};

struct ConvertArgs {
  std::string semithue;
  std::string out_dir = ".";
  bool emit_all = false;
};

pfa::MergeMode resolve_merge(const std::string& merge, const std::string& variant,
                             const pfa::PcpInstance& instance) {
  if (merge != "auto") return pfa::parse_merge_mode(merge);
  if (variant == "backward6") {
    if (instance.forced_start) return pfa::MergeMode::forced_start;
    if (instance.forced_end) return pfa::MergeMode::forced_end_reversed;
    throw pfa::PreconditionError("backward6 needs a forced start or end pair");
  }
  if (instance.forced_end) return pfa::MergeMode::forced_end_reversed;
  if (instance.forced_start) return pfa::MergeMode::forced_start;
  return pfa::MergeMode::none;
}

pfa::Comparison parse_comparison(const std::string& text) {
  if (text == "strict") return pfa::Comparison::strict;
  if (text == "weak") return pfa::Comparison::weak;
  throw pfa::InvalidInput("comparison must be strict or weak, got \"" + text + "\"");
}

int cmd_build(const BuildArgs& args) {
  const pfa::PcpInstance instance = pfa::pcp_from_json(pfa::read_json_file(args.instance));
  pfa::PipelineOptions options;
  options.merge = resolve_merge(args.merge, args.variant, instance);
  if (!args.alpha.empty()) options.alpha = pfa::parse_rational(args.alpha);
  const pfa::Comparison comparison = parse_comparison(args.comparison);

  pfa::BuildResult built;
  if (args.variant == "forward7") {
    built = pfa::forward_pfa(instance, options);
  } else if (args.variant == "backward6") {
    built = pfa::backward_pfa(instance, options);
  } else if (args.variant == "two-matrix") {
    built = pfa::two_matrix_pfa(instance, options);
  } else {
    throw pfa::InvalidInput("unknown variant \"" + args.variant +
                            "\" (forward7, backward6, two-matrix)");
  }
  built.pfa.comparison = comparison;

  const pfa::ValidationReport check = pfa::validate(built.pfa);
  Json report = pfa::to_json(built.report);
  report["merge"] = pfa::to_string(options.merge);
  report["validation"] = check.violations;
  pfa::write_text_file(args.out, pfa::dump(pfa::to_json(built.pfa)));
  pfa::write_text_file(args.report, pfa::dump(report));

  Json summary{{"pfa", args.out},
               {"report", args.report},
               {"states", built.pfa.automaton.dimension()},
               {"symbols", built.pfa.automaton.alphabet},
               {"cutpoint", pfa::to_string(built.pfa.cutpoint)},
               {"merge", pfa::to_string(options.merge)}};
  std::cout << summary.dump() << "\n";
  if (!check.ok()) {
    std::cerr << "built automaton fails validation: " << check.violations.front() << "\n";
    return kInvariantFailed;
  }
  return 0;
}

int cmd_eval(const EvalArgs& args) {
  pfa::Pfa automaton = pfa::pfa_from_json(pfa::read_json_file(args.pfa));
  if (!args.comparison.empty()) automaton.comparison = parse_comparison(args.comparison);
  for (const auto& text : args.words) {
    const pfa::Word word = automaton.automaton.parse_word(text);
    const pfa::Rational v = pfa::value(automaton, word);
    Json line{{"word", text},
              {"value", pfa::to_string(v)},
              {"cutpoint", pfa::to_string(automaton.cutpoint)},
              {"accepted", pfa::exceeds_cutpoint(automaton, v)}};
    std::cout << line.dump() << "\n";
  }
  return 0;
}

Json solve_json(const pfa::SolveResult& r) {
  Json j{{"status", pfa::to_string(r.status)}};
  j["solution"] = r.solution ? Json(*r.solution) : Json(nullptr);
  j["configurations"] = r.configurations;
  return j;
}

int cmd_solve(const SolveArgs& args) {
  const int sources = !args.pcp.empty() + !args.pfa.empty() + !args.semithue.empty();
  if (sources != 1) throw pfa::InvalidInput("give exactly one of --pcp, --pfa, --semithue");
  if (!args.pcp.empty()) {
    const pfa::SolveLimits limits{args.max_steps, args.max_overhang};
    const auto any = pfa::instance_from_json(pfa::read_json_file(args.pcp));
    const auto result = std::visit(
        [&](const auto& instance) { return pfa::bounded_solve(instance, limits); }, any);
    std::cout << solve_json(result).dump() << "\n";
    return 0;
  }
  if (!args.semithue.empty()) {
    const auto problem = pfa::word_problem_from_json(pfa::read_json_file(args.semithue));
    const auto r = pfa::bounded_derives(problem.system, problem.source, problem.target, args.depth);
    Json j{{"status", pfa::to_string(r.status)}};
    j["derivation"] = r.derivation ? Json(*r.derivation) : Json(nullptr);
    j["words_seen"] = r.words_seen;
    std::cout << j.dump() << "\n";
    return 0;
  }
  const pfa::Pfa automaton = pfa::pfa_from_json(pfa::read_json_file(args.pfa));
  pfa::WordFilter skip;
  std::optional<pfa::SequenceMap> map;
  if (args.skip_empty_decoding) {
    if (args.report.empty()) {
      throw pfa::InvalidInput("--skip-empty-decoding needs the build --report file");
    }
    const Json report = pfa::read_json_file(args.report);
    pfa::SequenceMap m;
    try {
      const Json& sm = report.at("sequence_map");
      m.instance_reversed = sm.at("instance_reversed").get<bool>();
      m.word_reversed = sm.at("word_reversed").get<bool>();
      if (!sm.at("merged_pair").is_null()) m.merged_pair = sm["merged_pair"].get<std::size_t>();
      if (sm.contains("code")) {
        m.binary = true;
        for (const auto& e : sm["code"]) m.code_symbols.push_back(e.at("pair").get<std::size_t>());
      }
    } catch (const Json::exception& e) {
      throw pfa::InvalidInput(std::string("malformed build report: ") + e.what());
    }
    map = m;
    skip = [&](const pfa::Word& w) {
      return pfa::to_instance_sequence(*map, automaton.automaton, w).empty();
    };
  }
  const auto r = pfa::bounded_emptiness(automaton, args.max_len, args.exclude_empty, skip);
  Json j{{"bounded", r.bounded}, {"max_len", args.max_len}, {"words_checked", r.words_checked}};
  j["word"] = r.word ? Json(automaton.automaton.format_word(*r.word)) : Json(nullptr);
  j["value"] = r.value ? Json(pfa::to_string(*r.value)) : Json(nullptr);
  if (r.word && map) j["pairs"] = pfa::to_instance_sequence(*map, automaton.automaton, *r.word);
  std::cout << j.dump() << "\n";
  return 0;
}

int cmd_check(const CheckArgs& args) {
  const pfa::CheckOptions options{args.trials, args.max_len, args.seed};
  std::vector<std::string> suites;
  if (args.suite == "all") {
    suites = pfa::suite_names();
  } else {
    suites.push_back(args.suite);
  }
  bool ok = true;
  for (const auto& name : suites) {
    const pfa::SuiteResult result = pfa::run_suite(name, options);
    for (const auto& inv : result.invariants) {
      Json line{{"suite", result.suite},
                {"invariant", inv.name},
                {"passed", inv.passed},
                {"detail", inv.detail}};
      std::cout << line.dump() << "\n";
    }
    ok = ok && result.passed();
  }
  return ok ? 0 : kInvariantFailed;
}

int cmd_convert(const ConvertArgs& args) {
  const auto problem = pfa::word_problem_from_json(pfa::read_json_file(args.semithue));
  const pfa::GpcpInstance gpcp =
      pfa::gpcp_from_semithue(problem.system, problem.target, problem.source);
  const pfa::PcpInstance brackets = pfa::gpcp_to_pcp(gpcp);
  const pfa::PcpInstance binary = pfa::binarize_alphabet(brackets);
  std::filesystem::create_directories(args.out_dir);
  const std::filesystem::path dir(args.out_dir);
  Json written = Json::array();
  auto emit = [&](const std::string& name, const Json& json) {
    const auto path = (dir / name).string();
    pfa::write_text_file(path, pfa::dump(json));
    written.push_back(path);
  };
  if (args.emit_all) {
    emit("gpcp.json", pfa::to_json(gpcp));
    emit("pcp5.json", pfa::to_json(brackets));
  }
  emit("pcp2.json", pfa::to_json(binary));
  const pfa::SymbolCode code(problem.system.alphabet);
  Json codes = Json::object();
  for (char c : code.symbols()) codes[std::string(1, c)] = code.codeword(c);
  std::cout << Json{{"written", written}, {"codewords", codes}}.dump() << "\n";
  return 0;
}

int cmd_counterexample() {
  const pfa::Counterexample c = pfa::start_pair_counterexample();
  const auto [top, bottom] = pfa::apply(c.instance, c.witness);
  const bool ok = pfa::is_solution(c.instance, c.witness) && c.witness.front() != 1 &&
                  c.instance.pairs[1].bottom.empty();
  Json j{{"instance", pfa::to_json(c.instance)},
         {"witness", c.witness},
         {"top", top},
         {"bottom", bottom},
         {"verified", ok}};
  std::cout << j.dump(2) << "\n";
  return ok ? 0 : kInvariantFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact PFA constructions from PCP instances and semi-Thue systems"};
  app.require_subcommand(1);
  app.config_formatter(std::make_shared<JsonConfig>());
  app.set_config("--config", "", "JSON file with option values; command-line flags win");

  BuildArgs build;
  auto* b = app.add_subcommand("build", "Build a PFA from a PCP instance");
  b->add_option("instance", build.instance, "PCP instance JSON")->required();
  b->add_option("--variant", build.variant, "forward7, backward6 or two-matrix")
      ->capture_default_str();
  b->add_option("--merge", build.merge,
                "auto, none, forced-start or forced-end-reversed")
      ->capture_default_str();
  b->add_option("--alpha", build.alpha, "blend weight p/q (default: largest 10^-p that works)");
  b->add_option("--comparison", build.comparison, "strict or weak")->capture_default_str();
  b->add_option("-o,--out", build.out, "PFA output file")->capture_default_str();
  b->add_option("--report", build.report, "build report output file")->capture_default_str();

  EvalArgs eval;
  auto* e = app.add_subcommand("eval", "Evaluate words on a PFA file");
  e->add_option("pfa", eval.pfa, "PFA JSON")->required();
  e->add_option("-w,--word", eval.words, "word, e.g. 1323 or 10,2 (repeatable)")->required();
  e->add_option("--comparison", eval.comparison, "override: strict or weak");

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Bounded search on a PCP/GPCP, PFA or semi-Thue system");
  s->add_option("--pcp", solve.pcp, "PCP or GPCP instance JSON");
  s->add_option("--pfa", solve.pfa, "PFA JSON (bounded emptiness)");
  s->add_option("--semithue", solve.semithue, "semi-Thue word problem JSON");
  s->add_option("--max-steps", solve.max_steps)->capture_default_str();
  s->add_option("--max-overhang", solve.max_overhang)->capture_default_str();
  s->add_option("--max-len", solve.max_len, "word length bound for --pfa")->capture_default_str();
  s->add_option("--depth", solve.depth, "derivation length bound for --semithue")
      ->capture_default_str();
  s->add_flag("--exclude-empty", solve.exclude_empty, "never report the empty word");
  s->add_flag("--skip-empty-decoding", solve.skip_empty_decoding,
              "skip words that stand for no pair at all (needs --report)");
  s->add_option("--report", solve.report, "build report of the PFA");

  CheckArgs check;
  auto* c = app.add_subcommand("check", "Run named invariant suites");
  c->add_option("suite", check.suite, "suite name or all")->capture_default_str();
  c->add_option("--trials", check.trials, "samples for randomized suites");
  c->add_option("--max-len", check.max_len, "length bound for exhaustive suites");
  c->add_option("--seed", check.seed, "random seed")->capture_default_str();

  ConvertArgs convert;
  auto* v = app.add_subcommand("convert", "Reduce a semi-Thue word problem to a binary PCP");
  v->add_option("--semithue", convert.semithue, "semi-Thue word problem JSON")->required();
  v->add_option("--out-dir", convert.out_dir)->capture_default_str();
  v->add_flag("--emit-all", convert.emit_all, "also write gpcp.json and pcp5.json");

  app.add_subcommand("counterexample", "Print and verify the empty-word counterexample");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : kBadInput;
  }

  try {
    if (*b) return cmd_build(build);
    if (*e) return cmd_eval(eval);
    if (*s) return cmd_solve(solve);
    if (*c) return cmd_check(check);
    if (*v) return cmd_convert(convert);
    return cmd_counterexample();
  } catch (const pfa::InvalidInput& err) {
    std::cerr << "invalid input: " << err.what() << "\n";
    return kBadInput;
  } catch (const pfa::PreconditionError& err) {
    std::cerr << "precondition failed: " << err.what() << "\n";
    return kPrecondition;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kInvariantFailed;
  }
}
