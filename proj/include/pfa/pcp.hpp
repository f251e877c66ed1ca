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

// Post Correspondence Problem instances, solution checking and a bounded
// breadth-first solver.
//
// Symbols are single characters; words are std::string. Pair indices are
// 1-based throughout, matching the usual i_1 i_2 ... i_m notation.

#ifndef PFA_PCP_HPP_
#define PFA_PCP_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pfa {

using IndexSequence = std::vector<std::size_t>;

struct WordPair {
  std::string top;     // v_i
  std::string bottom;  // w_i
  friend bool operator==(const WordPair&, const WordPair&) = default;
};

// Ordinary PCP. The optional structure markers record that every solution
// is known to start (end) with the given pair; they are claims about the
// instance used by the start/end merging constructions, not constraints
// enforced by is_solution.
struct PcpInstance {
  std::string alphabet;  // distinct symbols in declared order
  std::vector<WordPair> pairs;
  std::optional<std::size_t> forced_start{};
  std::optional<std::size_t> forced_end{};

  std::size_t size() const { return pairs.size(); }
  bool has_empty_word() const;
  // Throws InvalidInput unless k >= 1, the alphabet has distinct symbols,
  // all words stay inside it and the markers are in range.
  void validate() const;

  friend bool operator==(const PcpInstance&, const PcpInstance&) = default;
};

// Generalized PCP: solutions must have the shape 1, i_2..i_{m-1}, 2 with
// every middle index in 3..k.
struct GpcpInstance {
  std::string alphabet;
  std::vector<WordPair> pairs;  // pairs[0] is the start pair, pairs[1] the end pair

  std::size_t size() const { return pairs.size(); }
  bool has_empty_word() const;
  // As PcpInstance::validate, plus k >= 2.
  void validate() const;

  friend bool operator==(const GpcpInstance&, const GpcpInstance&) = default;
};

// (v_{i_1}...v_{i_m}, w_{i_1}...w_{i_m}). Throws InvalidInput on an index
// outside 1..k.
std::pair<std::string, std::string> apply(const PcpInstance& instance,
                                          const IndexSequence& indices);
std::pair<std::string, std::string> apply(const GpcpInstance& instance,
                                          const IndexSequence& indices);

// The empty sequence is never a solution.
bool is_solution(const PcpInstance& instance, const IndexSequence& indices);
bool is_solution(const GpcpInstance& instance, const IndexSequence& indices);

struct SolveLimits {
  std::size_t max_steps = 16;     // longest index sequence explored
  std::size_t max_overhang = 64;  // longest unmatched suffix kept
};

enum class SearchStatus {
  found,
  closed,         // every reachable configuration explored, none solves
  limit_reached,  // some configuration was cut off by a limit
};

struct SolveResult {
  SearchStatus status = SearchStatus::closed;
  std::optional<IndexSequence> solution;
  std::size_t configurations = 0;  // distinct configurations stored
};

// Called with the index path of every configuration the solver stores. For
// a GPCP these are exactly the partial solutions that started with the
// start pair and have not used the end pair yet.
using PartialVisitor = std::function<void(const IndexSequence&)>;

// Breadth-first search over configurations (which side leads, overhang).
// Returns a shortest solution within the limits, the lexicographically
// least among the shortest. Throws InvalidInput if a limit is zero.
SolveResult bounded_solve(const PcpInstance& instance, const SolveLimits& limits,
                          const PartialVisitor& visitor = {});
SolveResult bounded_solve(const GpcpInstance& instance, const SolveLimits& limits,
                          const PartialVisitor& visitor = {});

// Reverses every word. The forced end pair becomes the forced start pair
// and vice versa; solution s of the input maps to reversed(s).
PcpInstance reverse(const PcpInstance& instance);
IndexSequence reversed(IndexSequence indices);

std::string to_string(const IndexSequence& indices);  // "[1,3,2,3]"
std::string to_string(SearchStatus status);

}  // namespace pfa

#endif  // PFA_PCP_HPP_
