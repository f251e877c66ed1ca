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

#include "pfa/binarize.hpp"

#include <utility>

#include "pfa/error.hpp"

namespace pfa {

TauCode::TauCode(std::size_t k) : k_(k) {
  if (k < 2) throw InvalidInput("a binary prefix code needs at least 2 symbols");
}

std::string TauCode::codeword(std::size_t index) const {
  if (index < 1 || index > k_) {
    throw InvalidInput("code symbol " + std::to_string(index) + " outside 1.." +
                       std::to_string(k_));
  }
  if (index == k_) return std::string(k_ - 1, 'a');
  return std::string(index - 1, 'a') + 'b';
}

std::string TauCode::encode(const IndexSequence& indices) const {
  std::string out;
  for (std::size_t i : indices) out += codeword(i);
  return out;
}

TauCode::Decoding TauCode::decode(std::string_view word) const {
  Decoding d;
  for (char c : word) {
    if (c == 'b') {
      d.indices.push_back(d.pending + 1);
      d.pending = 0;
    } else if (c == 'a') {
      if (++d.pending == k_ - 1) {
        d.indices.push_back(k_);
        d.pending = 0;
      }
    } else {
      throw InvalidInput(std::string("binary words use only a and b, got '") + c + "'");
    }
  }
  return d;
}

std::string tau_encode(const TauCode& code, const IndexSequence& indices) {
  return code.encode(indices);
}

BinaryAutomaton reduce_to_two(const WeightedAutomaton& automaton) {
  automaton.check_shape();
  const std::size_t k = automaton.alphabet.size();
  TauCode code(k);
  if (k == 2) {
    WeightedAutomaton out{{"a", "b"},
                          {automaton.matrices[1], automaton.matrices[0]},
                          automaton.start,
                          automaton.end};
    return {std::move(out), code};
  }
  const std::size_t d = automaton.dimension();
  for (std::size_t i = 0; i < k; ++i) {
    const Matrix& m = automaton.matrices[i];
    for (std::size_t c = 0; c < d; ++c) {
      if (m(0, c) != (c == 0 ? 1 : 0)) {
        throw PreconditionError("first state must be absorbing: matrix \"" +
                                automaton.alphabet[i] + "\" row 1 is not (1,0,...,0)");
      }
    }
  }
  const std::size_t h = d - 1;  // size of each replicated block
  const std::size_t dim = 1 + (k - 1) * h;
  auto block = [h](std::size_t j) { return 1 + j * h; };  // first index of block j

  Matrix ma(dim), mb(dim);
  ma(0, 0) = 1;
  mb(0, 0) = 1;
  // Places c_i and C-hat_i of matrix m into rows of block j, columns 0 and block 0.
  auto place = [&](Matrix& target, std::size_t j, const Matrix& m) {
    for (std::size_t r = 0; r < h; ++r) {
      target(block(j) + r, 0) = m(1 + r, 0);
      for (std::size_t c = 0; c < h; ++c) target(block(j) + r, block(0) + c) = m(1 + r, 1 + c);
    }
  };
  for (std::size_t j = 0; j + 1 < k; ++j) {
    place(mb, j, automaton.matrices[j]);
    if (j + 2 < k) {
      for (std::size_t r = 0; r < h; ++r) ma(block(j) + r, block(j + 1) + r) = 1;
    } else {
      place(ma, j, automaton.matrices[k - 1]);
    }
  }

  RowVector start(dim);
  ColumnVector end(dim);
  start[0] = automaton.start[0];
  end[0] = automaton.end[0];
  for (std::size_t r = 0; r < h; ++r) {
    start[1 + r] = automaton.start[1 + r];
    // The end replicates into every block so a pending partial codeword
    // still reads out the value reached so far.
    for (std::size_t j = 0; j + 1 < k; ++j) end[block(j) + r] = automaton.end[1 + r];
  }
  WeightedAutomaton out{{"a", "b"}, {std::move(ma), std::move(mb)}, std::move(start),
                        std::move(end)};
  return {std::move(out), code};
}

StochasticStage column_fix(const std::vector<Matrix>& matrices, const RowVector& start,
                           const ColumnVector& end) {
  StochasticStage out;
  for (const auto& m : matrices) {
    const std::size_t n = m.dim();
    Matrix g = m.grown();
    const auto cols = m.column_sums();
    for (std::size_t c = 0; c < n; ++c) g(n, c) = 1 - cols[c];
    g(n, n) = 1;
    out.matrices.push_back(std::move(g));
  }
  out.start = start.padded(0);
  out.end = end.padded(0);
  return out;
}

}  // namespace pfa
