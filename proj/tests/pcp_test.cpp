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

#include <random>

#include "oracle.hpp"
#include "pfa/checks.hpp"
#include "pfa/error.hpp"
#include "pfa/pcp.hpp"

namespace pfa {
namespace {

oracle::Pairs as_pairs(const PcpInstance& p) {
  oracle::Pairs out;
  for (const auto& w : p.pairs) out.emplace_back(w.top, w.bottom);
  return out;
}

TEST(Apply, ClassicSolution) {
  const auto [top, bottom] = apply(classic_instance(), {1, 3, 2, 3});
  EXPECT_EQ(top, "101110011");
  EXPECT_EQ(bottom, "101110011");
}

TEST(Apply, SmallCases) {
  EXPECT_EQ(apply(PcpInstance{"a", {{"a", "a"}}}, {1}), std::make_pair(std::string("a"), std::string("a")));
  const PcpInstance two{"01", {{"1", "101"}, {"10", "00"}}};
  EXPECT_EQ(apply(two, {2}), std::make_pair(std::string("10"), std::string("00")));
  EXPECT_THROW(apply(two, {3}), InvalidInput);
}

TEST(IsSolution, Examples) {
  EXPECT_TRUE(is_solution(classic_instance(), {1, 3, 2, 3}));
  EXPECT_FALSE(is_solution(classic_instance(), {1}));
  EXPECT_FALSE(is_solution(classic_instance(), {}));
  const GpcpInstance g{"a", {{"a", "a"}, {"a", "a"}}};
  EXPECT_FALSE(is_solution(g, {2, 1}));
  EXPECT_TRUE(is_solution(g, {1, 2}));
}

TEST(BoundedSolve, ClassicMatchesBruteForce) {
  const PcpInstance p = classic_instance();
  const auto result = bounded_solve(p, {6, 8});
  ASSERT_EQ(result.status, SearchStatus::found);
  EXPECT_EQ(*result.solution, (IndexSequence{1, 3, 2, 3}));
  std::size_t shortest = 0;
  for (const auto& s : oracle::sequences(3, 6)) {
    if (oracle::solves(as_pairs(p), s)) {
      shortest = s.size();
      break;
    }
  }
  EXPECT_EQ(result.solution->size(), shortest);
}

TEST(BoundedSolve, TrivialCases) {
  EXPECT_EQ(bounded_solve(PcpInstance{"ab", {{"a", "b"}}}, {}).status, SearchStatus::closed);
  const auto one = bounded_solve(PcpInstance{"a", {{"a", "a"}}}, {});
  EXPECT_EQ(one.solution, (IndexSequence{1}));
}

TEST(BoundedSolve, StepLimitReported) {
  const auto r = bounded_solve(classic_instance(), {3, 8});
  EXPECT_EQ(r.status, SearchStatus::limit_reached);
  EXPECT_FALSE(r.solution);
}

TEST(BoundedSolve, AgreesWithBruteForceOnRandomInstances) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 60; ++t) {
    PcpInstance p{"ab", {}};
    for (int i = 0; i < 3; ++i) {
      std::string top, bottom;
      for (std::size_t n = 1 + rng() % 3; n > 0; --n) top += "ab"[rng() % 2];
      for (std::size_t n = 1 + rng() % 3; n > 0; --n) bottom += "ab"[rng() % 2];
      p.pairs.push_back({top, bottom});
    }
    bool brute = false;
    for (const auto& s : oracle::sequences(3, 5)) brute = brute || oracle::solves(as_pairs(p), s);
    const auto r = bounded_solve(p, {5, 64});
    EXPECT_EQ(r.solution.has_value(), brute);
    if (r.solution) {
      EXPECT_TRUE(oracle::solves(as_pairs(p), *r.solution));
    }
  }
}

TEST(BoundedSolve, GpcpShape) {
  const GpcpInstance g{"ab", {{"a", "ab"}, {"ba", "a"}, {"b", "b"}}};
  const auto r = bounded_solve(g, {});
  ASSERT_TRUE(r.solution);
  EXPECT_EQ(r.solution->front(), 1u);
  EXPECT_EQ(r.solution->back(), 2u);
  EXPECT_TRUE(is_solution(g, *r.solution));
}

TEST(Reverse, Examples) {
  EXPECT_EQ(reverse(PcpInstance{"ab", {{"ab", "b"}}}).pairs, (std::vector<WordPair>{{"ba", "b"}}));
  const PcpInstance pal{"ab", {{"aba", "aa"}}};
  EXPECT_EQ(reverse(pal), pal);
  EXPECT_TRUE(is_solution(reverse(classic_instance()), {3, 2, 3, 1}));
}

TEST(Reverse, SwapsMarkers) {
  PcpInstance p = classic_instance();
  p.forced_end = 3;
  const PcpInstance r = reverse(p);
  EXPECT_EQ(r.forced_start, 3u);
  EXPECT_EQ(r.forced_end, 1u);
}

TEST(Reverse, SolutionsCorrespond) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    PcpInstance p{"ab", {}};
    for (int i = 0; i < 3; ++i) {
      std::string top, bottom;
      for (std::size_t n = 1 + rng() % 3; n > 0; --n) top += "ab"[rng() % 2];
      for (std::size_t n = 1 + rng() % 3; n > 0; --n) bottom += "ab"[rng() % 2];
      p.pairs.push_back({top, bottom});
    }
    const PcpInstance r = reverse(p);
    for (const auto& s : oracle::sequences(3, 6)) {
      ASSERT_EQ(is_solution(p, s), is_solution(r, reversed(s)));
    }
  }
}

TEST(Validate, RejectsBadInstances) {
  EXPECT_THROW((PcpInstance{"ab", {}}).validate(), InvalidInput);
  EXPECT_THROW((PcpInstance{"aa", {{"a", "a"}}}).validate(), InvalidInput);
  EXPECT_THROW((PcpInstance{"a", {{"b", "a"}}}).validate(), InvalidInput);
  EXPECT_THROW((PcpInstance{"a", {{"a", "a"}}, 2, std::nullopt}).validate(), InvalidInput);
  EXPECT_THROW((GpcpInstance{"a", {{"a", "a"}}}).validate(), InvalidInput);
}

TEST(IndexText, Format) { EXPECT_EQ(to_string(IndexSequence{1, 3, 2, 3}), "[1,3,2,3]"); }

}  // namespace
}  // namespace pfa
