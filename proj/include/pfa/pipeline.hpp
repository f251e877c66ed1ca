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

// End-to-end builds of PFAs from PCP instances over a two-letter alphabet:
//   forward:    7 states, doubly stochastic, cutpoint 1/7
//   backward:   6 states, row stochastic, fractional outputs, cutpoint 1/6
//   two-matrix: 2 symbols, doubly stochastic, cutpoint 1/states
// A word is accepted iff the pair-index sequence it stands for (see
// SequenceMap) is a solution.

#ifndef PFA_PIPELINE_HPP_
#define PFA_PIPELINE_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pfa/automaton.hpp"
#include "pfa/pcp.hpp"
#include "pfa/rational.hpp"

namespace pfa {

enum class MergeMode {
  none,
  forced_end_reversed,  // reverse all words, then fold the forced end pair into the start
  forced_start,         // fold the forced start pair into the start
};

std::string to_string(MergeMode mode);
MergeMode parse_merge_mode(std::string_view text);

struct PipelineOptions {
  MergeMode merge = MergeMode::none;
  std::optional<Rational> alpha;  // blend weight; chosen automatically if unset
};

struct StageRecord {
  std::string name;
  std::size_t dimension = 0;
  std::size_t symbols = 0;
  std::vector<std::string> checksums;  // one per matrix, in alphabet order
};

// How a word of the built automaton maps back to pair indices of the input:
// decode (binary builds), reverse if word_reversed, prefix the merged pair,
// then reverse everything if the instance was reversed.
struct SequenceMap {
  bool binary = false;
  std::vector<std::size_t> code_symbols;  // pair index of each code symbol
  bool word_reversed = false;
  std::optional<std::size_t> merged_pair;
  bool instance_reversed = false;
};

struct BuildReport {
  std::string variant;
  std::string alphabet_order;  // instance letters recoded to 11 and 12
  std::vector<StageRecord> stages;
  std::optional<Rational> alpha;
  std::optional<mpz_class> normalization_scale;
  Rational cutpoint;
  std::string empty_word;
  SequenceMap sequence_map;
};

struct BuildResult {
  Pfa pfa;
  BuildReport report;
};

// 6-state weighted automaton with one gadget matrix per pair (symbols
// "1".."k"), start (1/99,0,-1,0,-105/99,2) and end e_1. The value of an
// index word is positive iff it is a solution. Throws InvalidInput unless the
// alphabet has exactly two letters.
WeightedAutomaton gadget_automaton(const PcpInstance& instance);

// Same values, conjugated so every matrix has column sums 1 and the start
// sums to 0.
WeightedAutomaton column_stochastic_automaton(const PcpInstance& instance);

// Throws InvalidInput for malformed instances and PreconditionError when
// the merge mode needs a structure marker the instance lacks.
BuildResult forward_pfa(const PcpInstance& instance, const PipelineOptions& options = {});

// merge must be forced_start or forced_end_reversed, and every word must be
// nonempty (PreconditionError otherwise). The PFA word x stands for the
// merged pair followed by x reversed.
BuildResult backward_pfa(const PcpInstance& instance, const PipelineOptions& options);

BuildResult two_matrix_pfa(const PcpInstance& instance, const PipelineOptions& options = {});

// Pair-index sequence of the input instance that `word` stands for.
IndexSequence to_instance_sequence(const SequenceMap& map, const WeightedAutomaton& automaton,
                                   const Word& word);

}  // namespace pfa

#endif  // PFA_PIPELINE_HPP_
