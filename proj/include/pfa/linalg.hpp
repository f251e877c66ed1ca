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

// Square rational matrices and row/column vectors.
//
// Orientation convention: start vectors are rows multiplied on the left,
// end vectors are columns multiplied on the right, so a word value is
// start * M_1 * ... * M_m * end.

#ifndef PFA_LINALG_HPP_
#define PFA_LINALG_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "pfa/rational.hpp"

namespace pfa {

enum class Orientation { row, column };

template <Orientation O>
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t n) : entries_(n, Rational(0)) {}
  explicit Vector(std::vector<Rational> entries)
      : entries_(std::move(entries)) {}
  Vector(std::initializer_list<Rational> entries) : entries_(entries) {}

  static Vector unit(std::size_t n, std::size_t i) {
    Vector v(n);
    v[i] = 1;
    return v;
  }

  std::size_t size() const { return entries_.size(); }
  Rational& operator[](std::size_t i) { return entries_[i]; }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Rational>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  Rational sum() const {
    Rational s = 0;
    for (const auto& x : entries_) s += x;
    return s;
  }

  // Copy with `value` appended.
  Vector padded(const Rational& value) const {
    Vector out = *this;
    out.entries_.push_back(value);
    return out;
  }

  Vector<O == Orientation::row ? Orientation::column : Orientation::row>
  transposed() const {
    return Vector<O == Orientation::row ? Orientation::column
                                        : Orientation::row>(entries_);
  }

  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<Rational> entries_;
};

using RowVector = Vector<Orientation::row>;
using ColumnVector = Vector<Orientation::column>;

class Matrix {
 public:
  Matrix() = default;
  // n x n zero matrix.
  explicit Matrix(std::size_t n) : n_(n), data_(n * n, Rational(0)) {}
  // Row-major nested initializer; rows must all have the same length as the
  // number of rows.
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix filled(std::size_t n, const Rational& value);

  std::size_t dim() const { return n_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * n_ + c];
  }

  Matrix transposed() const;
  std::vector<Rational> row_sums() const;
  std::vector<Rational> column_sums() const;

  // Copy with one extra row and column, filled with zeros.
  Matrix grown() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& s, const Matrix& m);

 private:
  std::size_t n_ = 0;
  std::vector<Rational> data_;
};

RowVector operator*(const RowVector& v, const Matrix& m);
ColumnVector operator*(const Matrix& m, const ColumnVector& v);
Rational operator*(const RowVector& row, const ColumnVector& column);

// FNV-1a over the canonical "num/den" strings of all entries, row-major,
// with the dimension mixed in first. Stable across platforms.
std::uint64_t checksum(const Matrix& m);
std::string checksum_hex(const Matrix& m);

}  // namespace pfa

#endif  // PFA_LINALG_HPP_
