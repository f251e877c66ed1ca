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

// Reduction of a k-symbol weighted automaton to one over {a,b} through the
// prefix code b, ab, aab, ..., a^(k-2)b, a^(k-1).

#ifndef PFA_BINARIZE_HPP_
#define PFA_BINARIZE_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "pfa/automaton.hpp"
#include "pfa/construction.hpp"
#include "pfa/pcp.hpp"

namespace pfa {

class TauCode {
 public:
  // Throws InvalidInput if k < 2.
  explicit TauCode(std::size_t k);

  std::size_t size() const { return k_; }
  // Symbol i (1-based) is a^(i-1)b for i < k and a^(k-1) for i = k.
  std::string codeword(std::size_t index) const;
  // Throws InvalidInput for an index outside 1..k.
  std::string encode(const IndexSequence& indices) const;

  struct Decoding {
    IndexSequence indices;    // decoding of the longest decodable prefix
    std::size_t pending = 0;  // length of the trailing partial codeword a^i
  };
  // Throws InvalidInput on letters other than a and b.
  Decoding decode(std::string_view word) const;

 private:
  std::size_t k_;
};

std::string tau_encode(const TauCode& code, const IndexSequence& indices);

struct BinaryAutomaton {
  WeightedAutomaton automaton;  // alphabet {"a","b"}
  TauCode code;
};

// Dimension (k-1)(d-1)+1. The value of a binary word equals the value of
// the decoding of its longest decodable prefix; a trailing partial codeword
// is ignored. Code symbol i is the automaton's i-th symbol. For k = 2 the
// matrices pass through unchanged (a -> second, b -> first). Throws
// InvalidInput for fewer than 2 symbols and PreconditionError when k >= 3 and
// some matrix's first row is not (1,0,...,0).
BinaryAutomaton reduce_to_two(const WeightedAutomaton& automaton);

// [[M, 0], [s, 1]] with s = 1 - column sums of M; start and end padded
// with 0. Word values are unchanged and every column sums to 1.
StochasticStage column_fix(const std::vector<Matrix>& matrices, const RowVector& start,
                           const ColumnVector& end);

}  // namespace pfa

#endif  // PFA_BINARIZE_HPP_
