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

#include "pfa/construction.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "pfa/error.hpp"

namespace pfa {
namespace {

void require_gadget_word(const DigitWord& word) {
  if (!word.is_gadget_word()) {
    throw InvalidInput("gadget words must be in {11,12}*, got \"" +
                       word.digits() + "\"");
  }
}

GadgetConstants make_constants() {
  GadgetConstants k;
  const std::size_t n = kGadgetDimension;
  k.u = Matrix::identity(n);
  k.u(2, 0) = Rational(1, 99);
  k.u(4, 4) = Rational(99, 105);
  k.u(4, 4).canonicalize();
  k.u_inverse = Matrix::identity(n);
  k.u_inverse(2, 0) = Rational(-1, 99);
  k.u_inverse(4, 4) = Rational(105, 99);
  k.u_inverse(4, 4).canonicalize();

  k.v = Matrix::identity(n);
  k.v_inverse = Matrix::identity(n);
  for (std::size_t c = 1; c < n; ++c) {
    k.v(0, c) = 1;
    k.v_inverse(0, c) = -1;
  }

  k.pi0 = RowVector{0, 0, -1, 0, -1, 2};
  k.pi1 = k.pi0 * k.u_inverse;
  k.f1 = ColumnVector::unit(n, 0);
  return k;
}

}  // namespace

Matrix a0_matrix(const DigitWord& v, const DigitWord& w) {
  require_gadget_word(v);
  require_gadget_word(w);
  const Rational x = fractional_value(v);
  const Rational y = fractional_value(w);
  const Rational sv = pow10_neg(v.size());
  const Rational sw = pow10_neg(w.size());

  Matrix m(kGadgetDimension);
  m(0, 0) = 1;
  m(1, 0) = x;
  m(1, 1) = sv;
  m(2, 0) = x * x;
  m(2, 1) = 2 * sv * x;
  m(2, 2) = sv * sv;
  m(3, 0) = y;
  m(3, 3) = sw;
  m(4, 0) = y * y;
  m(4, 3) = 2 * sw * y;
  m(4, 4) = sw * sw;
  m(5, 0) = x * y;
  m(5, 1) = sv * y;
  m(5, 3) = sw * x;
  m(5, 5) = sv * sw;
  return m;
}

const GadgetConstants& gadget_constants() {
  static const GadgetConstants constants = make_constants();
  return constants;
}

Matrix uniform_matrix(std::size_t n) {
  return Matrix::filled(n, Rational(1, static_cast<unsigned long>(n)));
}

Matrix a_matrix(const DigitWord& v, const DigitWord& w) {
  const auto& k = gadget_constants();
  return k.u * a0_matrix(v, w) * k.u_inverse;
}

Matrix b_matrix(const DigitWord& v, const DigitWord& w) {
  const auto& k = gadget_constants();
  return k.v_inverse * a_matrix(v, w) * k.v;
}

StochasticStage add_sink_state(std::vector<Matrix> matrices, const RowVector& start,
                               const ColumnVector& end) {
  StochasticStage out;
  const std::size_t n = start.size();
  for (std::size_t i = 0; i < matrices.size(); ++i) {
    const Matrix& b = matrices[i];
    const auto cols = b.column_sums();
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (cols[c] != 1) {
        throw PreconditionError("sink state needs column sums 1; matrix " +
                                std::to_string(i + 1) + " column " +
                                std::to_string(c + 1) + " sums to " +
                                to_string(cols[c]));
      }
    }
    Matrix g = b.grown();
    const auto rows = b.row_sums();
    for (std::size_t r = 0; r < n; ++r) g(r, n) = 1 - rows[r];
    g(n, n) = 1;
    out.matrices.push_back(std::move(g));
  }
  out.start = start.padded(-start.sum());
  out.end = end.padded(0);
  return out;
}

std::vector<Matrix> blend_with_uniform(const std::vector<Matrix>& matrices,
                                       const Rational& alpha) {
  if (sgn(alpha) <= 0) {
    throw PreconditionError("blend weight must be positive, got " + to_string(alpha));
  }
  std::vector<Matrix> out;
  out.reserve(matrices.size());
  for (std::size_t i = 0; i < matrices.size(); ++i) {
    const Matrix& c = matrices[i];
    const std::size_t n = c.dim();
    const Rational base = (1 - alpha) / n;
    Matrix d(n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t col = 0; col < n; ++col) {
        d(r, col) = base + alpha * c(r, col);
        if (sgn(d(r, col)) <= 0) {
          throw PreconditionError(
              "blend weight " + to_string(alpha) + " too large: matrix " +
              std::to_string(i + 1) + " entry (" + std::to_string(r + 1) + "," +
              std::to_string(col + 1) + ") becomes " + to_string(d(r, col)));
        }
      }
    }
    out.push_back(std::move(d));
  }
  return out;
}

Rational choose_alpha(const std::vector<Matrix>& matrices) {
  // Blended entry (1-a)/n + a*x > 0 iff a*(x - 1/n) > -1/n; only the most
  // negative entry per dimension matters.
  for (std::size_t p = 2;; ++p) {
    const Rational alpha = pow10_neg(p);
    bool ok = true;
    for (const auto& c : matrices) {
      const Rational base = (1 - alpha) / c.dim();
      for (std::size_t r = 0; r < c.dim() && ok; ++r)
        for (std::size_t col = 0; col < c.dim() && ok; ++col)
          ok = sgn(base + alpha * c(r, col)) > 0;
      if (!ok) break;
    }
    if (ok) return alpha;
  }
}

NormalizedStart normalize_start(const RowVector& start) {
  if (start.size() == 0) throw PreconditionError("cannot normalize an empty start");
  if (start.sum() != 0) {
    throw PreconditionError("normalization needs a start summing to 0, got " +
                            to_string(start.sum()));
  }
  const Rational min = *std::min_element(start.begin(), start.end());
  NormalizedStart out;
  out.scale = ceil(Rational(-min));
  if (out.scale < 1) out.scale = 1;
  const std::size_t n = start.size();
  const Rational divisor = Rational(out.scale) * n;
  out.start = RowVector(n);
  for (std::size_t i = 0; i < n; ++i) out.start[i] = (out.scale + start[i]) / divisor;
  out.offset = Rational(1, static_cast<unsigned long>(n));
  return out;
}

WeightedAutomaton merge_start(const WeightedAutomaton& automaton,
                              std::string_view symbol) {
  const std::size_t s = automaton.symbol_index(symbol);
  WeightedAutomaton out;
  out.start = automaton.start * automaton.matrices[s];
  out.end = automaton.end;
  for (std::size_t i = 0; i < automaton.alphabet.size(); ++i) {
    if (i == s) continue;
    out.alphabet.push_back(automaton.alphabet[i]);
    out.matrices.push_back(automaton.matrices[i]);
  }
  return out;
}

}  // namespace pfa
