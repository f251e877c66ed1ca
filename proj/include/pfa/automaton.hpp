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

// Weighted (generalized probabilistic) automata and PFAs over exact
// rationals: evaluation, cutpoint acceptance, validation, bounded emptiness
// search and cutpoint shifting.

#ifndef PFA_AUTOMATON_HPP_
#define PFA_AUTOMATON_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pfa/linalg.hpp"
#include "pfa/rational.hpp"

namespace pfa {

// A word is a sequence of positions into an automaton's alphabet.
using Word = std::vector<std::size_t>;

struct WeightedAutomaton {
  std::vector<std::string> alphabet;
  std::vector<Matrix> matrices;  // parallel to alphabet
  RowVector start;
  ColumnVector end;

  std::size_t dimension() const { return start.size(); }
  // Throws InvalidInput for an unknown symbol.
  std::size_t symbol_index(std::string_view symbol) const;
  const Matrix& matrix(std::string_view symbol) const {
    return matrices[symbol_index(symbol)];
  }
  // Throws InvalidInput unless every matrix and vector has the same
  // dimension and symbols are distinct and nonempty.
  void check_shape() const;

  // "1323" when every symbol is a single character, otherwise
  // comma-separated symbols ("10,2"). The empty string is the empty word.
  Word parse_word(std::string_view text) const;
  std::string format_word(const Word& word) const;

  friend bool operator==(const WeightedAutomaton&,
                         const WeightedAutomaton&) = default;
};

// start * M_{w_1} * ... * M_{w_m} * end, folded left to right.
Rational value(const WeightedAutomaton& automaton, const Word& word);

enum class Comparison { strict, weak };
enum class StochasticKind { none, row, column, doubly };

std::string to_string(StochasticKind kind);
StochasticKind parse_stochastic_kind(std::string_view text);

struct Pfa {
  WeightedAutomaton automaton;
  Rational cutpoint;
  Comparison comparison = Comparison::strict;
  StochasticKind kind = StochasticKind::row;

  friend bool operator==(const Pfa&, const Pfa&) = default;
};

Rational value(const Pfa& pfa, const Word& word);
bool exceeds_cutpoint(const Pfa& pfa, const Rational& value);
bool accepts(const Pfa& pfa, const Word& word);

// Words for which this returns true are evaluated but never reported.
using WordFilter = std::function<bool(const Word&)>;

struct EmptinessResult {
  std::optional<Word> word;  // shortest accepted word, lexicographically least
  std::optional<Rational> value;
  std::size_t words_checked = 0;
  // Always true: absence of an accepted word is only ever established up
  // to the length bound.
  bool bounded = true;
};

EmptinessResult bounded_emptiness(const Pfa& pfa, std::size_t max_len,
                                  bool exclude_empty,
                                  const WordFilter& skip = {});

// Moves the cutpoint to `target` without changing the accepted language:
// outputs scale by target/cutpoint when lowering, and map to
// 1 - a + a*f with a = (1 - target)/(1 - cutpoint) when raising. Raising
// needs row sums 1 and a start summing to 1 (PreconditionError otherwise).
// Throws InvalidInput unless 0 < target < 1.
Pfa shift_cutpoint(const Pfa& pfa, const Rational& target);

struct ValidationReport {
  std::vector<std::string> violations;
  StochasticKind detected_kind = StochasticKind::none;
  bool nonnegative = false;  // every matrix entry >= 0
  bool positive = false;     // every matrix entry > 0
  bool start_is_distribution = false;
  bool start_is_deterministic = false;  // a unit vector
  bool output_in_unit_interval = false;
  bool output_is_zero_one = false;

  bool ok() const { return violations.empty(); }
};

// Checks the invariants implied by the declared stochastic kind, that the
// start is a distribution and that outputs lie in [0,1]. Every violation
// names the matrix and row/column and the exact deviation.
ValidationReport validate(const Pfa& pfa);

// Strongest kind satisfied by every matrix (entries >= 0 and exact sums).
StochasticKind detect_kind(const std::vector<Matrix>& matrices);

}  // namespace pfa

#endif  // PFA_AUTOMATON_HPP_
