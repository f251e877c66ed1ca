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

// Matrix gadgets that turn word pairs into 6x6 rational matrices whose
// products detect equality of concatenations, and the stages that make a
// weighted automaton built from them stochastic.

#ifndef PFA_CONSTRUCTION_HPP_
#define PFA_CONSTRUCTION_HPP_

#include <cstddef>
#include <string_view>
#include <vector>

#include "pfa/automaton.hpp"
#include "pfa/linalg.hpp"
#include "pfa/rational.hpp"

namespace pfa {

inline constexpr std::size_t kGadgetDimension = 6;

// Rows, 1-based:
//   1: 1
//   2: 0.v, 10^-|v|
//   3: (0.v)^2, 2*10^-|v|*0.v, 10^-2|v|
//   4: 0.w, 0, 0, 10^-|w|
//   5: (0.w)^2, 0, 0, 2*10^-|w|*0.w, 10^-2|w|
//   6: 0.v*0.w, 10^-|v|*0.w, 0, 10^-|w|*0.v, 0, 10^-|v|-|w|
// so that a0(v1,w1)*a0(v2,w2) = a0(v1v2,w1w2). Throws InvalidInput unless
// both words are in {11,12}*.
Matrix a0_matrix(const DigitWord& v, const DigitWord& w);

struct GadgetConstants {
  Matrix u, u_inverse;  // identity except u(3,1) = 1/99, u(5,5) = 99/105
  Matrix v, v_inverse;  // identity with first row all ones
  RowVector pi0;        // (0,0,-1,0,-1,2)
  RowVector pi1;        // pi0 * u^-1 = (1/99,0,-1,0,-105/99,2)
  ColumnVector f1;      // e_1
};

const GadgetConstants& gadget_constants();

// n x n matrix with every entry 1/n.
Matrix uniform_matrix(std::size_t n);

// u * a0 * u^-1. With the constants above,
// pi1 * a(v,w) * f1 = -(0.v - 0.w)^2 + 10^-2|v| / 99.
Matrix a_matrix(const DigitWord& v, const DigitWord& w);

// v^-1 * a * v: column sums exactly 1, and strictly positive when both
// words are nonempty.
Matrix b_matrix(const DigitWord& v, const DigitWord& w);

struct StochasticStage {
  std::vector<Matrix> matrices;
  RowVector start;
  ColumnVector end;
};

// [[B, r], [0, 1]] with r = 1 - row sums of B. The start gains a sink
// coordinate equal to minus its sum, so the new start sums to 0; the end is
// padded with 0. Throws PreconditionError unless every column sum is 1.
StochasticStage add_sink_state(std::vector<Matrix> matrices, const RowVector& start,
                               const ColumnVector& end);

// (1 - alpha) J + alpha C for each C. Throws PreconditionError naming the
// first entry that would not be strictly positive.
std::vector<Matrix> blend_with_uniform(const std::vector<Matrix>& matrices,
                                       const Rational& alpha);

// Largest 10^-p, p >= 2, for which blend_with_uniform succeeds.
Rational choose_alpha(const std::vector<Matrix>& matrices);

struct NormalizedStart {
  RowVector start;  // (c*1 + start) / (c*n), a distribution
  mpz_class scale;  // c = max(1, ceil(-min entry))
  Rational offset;  // 1/n: value shift per unit of output mass
};

// Throws PreconditionError unless the start sums to 0.
NormalizedStart normalize_start(const RowVector& start);

// Folds the matrix of `symbol` into the start vector and drops the symbol:
// value'(s) = value(symbol s). Throws InvalidInput for an absent symbol.
WeightedAutomaton merge_start(const WeightedAutomaton& automaton,
                              std::string_view symbol);

}  // namespace pfa

#endif  // PFA_CONSTRUCTION_HPP_
