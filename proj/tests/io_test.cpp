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

#include <filesystem>

#include "pfa/checks.hpp"
#include "pfa/error.hpp"
#include "pfa/io.hpp"
#include "pfa/pipeline.hpp"

namespace pfa {
namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("pfa_io_test_" + name)).string();
}

TEST(InstanceJson, RoundTrip) {
  const PcpInstance p = classic_instance();
  const Json j = to_json(p);
  EXPECT_EQ(j["kind"], "pcp");
  EXPECT_EQ(j["start_index"], 1);
  EXPECT_EQ(pcp_from_json(j), p);
  const GpcpInstance g{"ab", {{"a", "ab"}, {"ba", "a"}}};
  EXPECT_EQ(std::get<GpcpInstance>(instance_from_json(to_json(g))), g);
  EXPECT_THROW(pcp_from_json(to_json(g)), InvalidInput);
}

TEST(InstanceJson, KindDefaultsToPcp) {
  const Json j = Json::parse(R"({"alphabet":["a"],"pairs":[{"top":"a","bottom":"a"}]})");
  EXPECT_EQ(pcp_from_json(j).size(), 1u);
}

TEST(InstanceJson, Rejects) {
  EXPECT_THROW(instance_from_json(Json::parse(R"({"alphabet":["ab"],"pairs":[]})")), InvalidInput);
  EXPECT_THROW(instance_from_json(Json::parse(R"({"alphabet":["a"]})")), InvalidInput);
  EXPECT_THROW(instance_from_json(Json::parse(R"({"kind":"x","alphabet":["a"],"pairs":[]})")),
               InvalidInput);
  EXPECT_THROW(
      instance_from_json(Json::parse(
          R"({"alphabet":["a"],"pairs":[{"top":"a","bottom":"a"}],"start_index":4})")),
      InvalidInput);
}

TEST(WordProblemJson, RoundTrip) {
  const WordProblem w{{"ab", {{"ab", "ba"}}}, "ab", "ba"};
  const WordProblem back = word_problem_from_json(to_json(w));
  EXPECT_EQ(back.system, w.system);
  EXPECT_EQ(back.source, "ab");
  EXPECT_EQ(back.target, "ba");
  Json bad = to_json(w);
  bad["target"] = "bc";
  EXPECT_THROW(word_problem_from_json(bad), InvalidInput);
}

TEST(PfaJson, DumpParseDumpIsByteIdentical) {
  for (const Pfa& p :
       {forward_pfa(classic_instance()).pfa, two_matrix_pfa(classic_instance()).pfa,
        backward_pfa(classic_instance(), {MergeMode::forced_start, std::nullopt}).pfa}) {
    const std::string first = dump(to_json(p));
    const Pfa back = pfa_from_json(Json::parse(first));
    EXPECT_EQ(back, p);
    EXPECT_EQ(dump(to_json(back)), first);
  }
}

TEST(PfaJson, IntegersWrittenOverN) {
  const Json j = to_json(forward_pfa(classic_instance()).pfa);
  EXPECT_EQ(j["output"][0], "1/1");
  EXPECT_EQ(j["cutpoint"], "1/7");
  EXPECT_EQ(j["states"], 7);
  EXPECT_EQ(j["stochastic_kind"], "doubly");
}

TEST(PfaJson, Rejects) {
  Json j = to_json(forward_pfa(classic_instance()).pfa);
  Json wrong_version = j;
  wrong_version["version"] = 2;
  EXPECT_THROW(pfa_from_json(wrong_version), InvalidInput);
  Json short_row = j;
  short_row["matrices"]["1"][0].erase(0);
  EXPECT_THROW(pfa_from_json(short_row), InvalidInput);
  Json bad_number = j;
  bad_number["cutpoint"] = 0.5;
  EXPECT_THROW(pfa_from_json(bad_number), InvalidInput);
  Json zero_den = j;
  zero_den["start"][0] = "1/0";
  EXPECT_THROW(pfa_from_json(zero_den), InvalidInput);
}

TEST(ReportJson, BinaryBuildListsCode) {
  const Json j = to_json(two_matrix_pfa(classic_instance()).report);
  EXPECT_EQ(j["variant"], "two-matrix");
  ASSERT_EQ(j["sequence_map"]["code"].size(), 3u);
  EXPECT_EQ(j["sequence_map"]["code"][0]["codeword"], "b");
  EXPECT_EQ(j["sequence_map"]["code"][2]["codeword"], "aa");
}

TEST(Files, ReadWriteAndBadJson) {
  const std::string good = temp_path("good.json"), bad = temp_path("bad.json");
  write_text_file(good, dump(to_json(classic_instance())));
  EXPECT_EQ(pcp_from_json(read_json_file(good)), classic_instance());
  write_text_file(bad, "{\"alphabet\": [");
  EXPECT_THROW(read_json_file(bad), InvalidInput);
  EXPECT_THROW(read_json_file(temp_path("missing.json")), InvalidInput);
  std::filesystem::remove(good);
  std::filesystem::remove(bad);
}

}  // namespace
}  // namespace pfa
