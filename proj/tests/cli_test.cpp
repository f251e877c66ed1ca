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

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "pfa/checks.hpp"
#include "pfa/io.hpp"
#include "pfa/pipeline.hpp"

namespace pfa {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int status = -1;
  std::string out;
};

Outcome run(const std::string& args) {
  const std::string command = std::string(PFA_TOOL) + " " + args + " 2>/dev/null";
  Outcome r;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(PFA_TEST_DATA) + "/" + name; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("pfa_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string build_args(const std::string& instance, const std::string& variant,
                         const std::string& tag) const {
    return "build " + data(instance) + " --variant " + variant + " -o " + path(tag + ".json") +
           " --report " + path(tag + "_report.json");
  }

  fs::path dir_;
};

TEST_F(Cli, BuildForwardSevenStates) {
  const Outcome r = run(build_args("classic.json", "forward7", "f"));
  ASSERT_EQ(r.status, 0);
  const Json summary = Json::parse(r.out);
  EXPECT_EQ(summary["states"], 7);
  EXPECT_EQ(summary["cutpoint"], "1/7");
  EXPECT_EQ(pfa_from_json(read_json_file(path("f.json"))).automaton.dimension(), 7u);
}

TEST_F(Cli, BuildTwoMatrixSizes) {
  ASSERT_EQ(run(build_args("structured5.json", "two-matrix", "five")).status, 0);
  EXPECT_EQ(pfa_from_json(read_json_file(path("five.json"))).automaton.dimension(), 18u);
  ASSERT_EQ(run(build_args("structured7.json", "two-matrix", "seven") + " --merge forced-start")
                .status,
            0);
  EXPECT_EQ(pfa_from_json(read_json_file(path("seven.json"))).automaton.dimension(), 28u);
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(run(build_args("empty_word.json", "backward6", "e")).status, 3);
  EXPECT_EQ(run(build_args("malformed.json", "forward7", "m")).status, 2);
  EXPECT_EQ(run(build_args("classic.json", "sideways", "s")).status, 2);
  EXPECT_EQ(run("frobnicate").status, 2);
  EXPECT_EQ(run("check no-such-suite").status, 2);
  EXPECT_EQ(run("--help").status, 0);
}

TEST_F(Cli, BuildIsDeterministic) {
  ASSERT_EQ(run(build_args("classic.json", "two-matrix", "a")).status, 0);
  ASSERT_EQ(run(build_args("classic.json", "two-matrix", "b")).status, 0);
  EXPECT_EQ(slurp(path("a.json")), slurp(path("b.json")));
  const std::string ra = slurp(path("a_report.json")), rb = slurp(path("b_report.json"));
  EXPECT_FALSE(ra.empty());
  EXPECT_EQ(Json::parse(ra)["stages"], Json::parse(rb)["stages"]);
}

TEST_F(Cli, EvalMatchesInProcessValue) {
  ASSERT_EQ(run(build_args("classic.json", "forward7", "f")).status, 0);
  const Outcome r = run("eval " + path("f.json") + " -w 323 -w 2");
  ASSERT_EQ(r.status, 0);
  std::istringstream lines(r.out);
  std::string first, second;
  std::getline(lines, first);
  std::getline(lines, second);
  const BuildResult built = forward_pfa(classic_instance(), {MergeMode::forced_start, std::nullopt});
  const Json a = Json::parse(first), b = Json::parse(second);
  EXPECT_EQ(a["value"], to_string(value(built.pfa, built.pfa.automaton.parse_word("323"))));
  EXPECT_EQ(a["accepted"], true);
  EXPECT_EQ(b["accepted"], false);
}

TEST_F(Cli, SolvePcp) {
  const Outcome r = run("solve --pcp " + data("classic.json") + " --max-steps 6");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(Json::parse(r.out)["solution"], Json::parse("[1,3,2,3]"));
}

TEST_F(Cli, SolvePfaFindsSolutionWord) {
  ASSERT_EQ(run(build_args("classic.json", "forward7", "f")).status, 0);
  const Outcome r = run("solve --pfa " + path("f.json") + " --max-len 4 --exclude-empty");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(Json::parse(r.out)["word"], "323");
}

TEST_F(Cli, SolveSemiThue) {
  EXPECT_EQ(Json::parse(run("solve --semithue " + data("toy_semithue.json")).out)["status"],
            "found");
  EXPECT_EQ(
      Json::parse(run("solve --semithue " + data("unreachable_semithue.json")).out)["status"],
      "closed");
}

TEST_F(Cli, ConvertEmitsChain) {
  const Outcome r = run("convert --semithue " + data("toy_semithue.json") + " --out-dir " +
                    path("out") + " --emit-all");
  ASSERT_EQ(r.status, 0);
  for (const char* f : {"gpcp.json", "pcp5.json", "pcp2.json"}) {
    EXPECT_TRUE(fs::exists(dir_ / "out" / f)) << f;
  }
  const PcpInstance binary = pcp_from_json(read_json_file(path("out/pcp2.json")));
  EXPECT_EQ(binary.alphabet, "ab");
  const Outcome solved = run("solve --pcp " + path("out/pcp2.json") + " --max-steps 40 --max-overhang 768");
  EXPECT_EQ(Json::parse(solved.out)["status"], "found");
}

TEST_F(Cli, CheckAndCounterexample) {
  const Outcome r = run("check start-pair-counterexample");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("[2,1,3]"), std::string::npos);
  EXPECT_EQ(run("check multiplicative --trials 50").status, 0);
  const Outcome c = run("counterexample");
  EXPECT_EQ(c.status, 0);
  EXPECT_EQ(Json::parse(c.out)["verified"], true);
}

TEST_F(Cli, ConfigFileWithOverride) {
  write_text_file(path("cfg.json"), R"({"solve": {"pcp": ")" + data("classic.json") +
                                        R"(", "max-steps": 6, "max-overhang": 8}})");
  EXPECT_EQ(Json::parse(run("--config " + path("cfg.json") + " solve").out)["solution"],
            Json::parse("[1,3,2,3]"));
  EXPECT_EQ(
      Json::parse(run("--config " + path("cfg.json") + " solve --max-steps 3").out)["status"],
      "limit_reached");
}

}  // namespace
}  // namespace pfa
