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

#include "pfa/linalg.hpp"

#include <cstdio>
#include <stdexcept>

namespace pfa {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : n_(rows.size()) {
  data_.reserve(n_ * n_);
  for (const auto& row : rows) {
    if (row.size() != n_) throw std::invalid_argument("matrix must be square");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::filled(std::size_t n, const Rational& value) {
  Matrix m(n);
  for (auto& x : m.data_) x = value;
  return m;
}

Matrix Matrix::transposed() const {
  Matrix t(n_);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

std::vector<Rational> Matrix::row_sums() const {
  std::vector<Rational> sums(n_, Rational(0));
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) sums[r] += (*this)(r, c);
  return sums;
}

std::vector<Rational> Matrix::column_sums() const {
  std::vector<Rational> sums(n_, Rational(0));
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) sums[c] += (*this)(r, c);
  return sums;
}

Matrix Matrix::grown() const {
  Matrix g(n_ + 1);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) g(r, c) = (*this)(r, c);
  return g;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("matrix dimension mismatch");
  const std::size_t n = a.n_;
  Matrix p(n);
  Rational term;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      const Rational& x = a(r, k);
      if (sgn(x) == 0) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (sgn(b(k, c)) == 0) continue;
        term = x * b(k, c);
        p(r, c) += term;
      }
    }
  }
  return p;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("matrix dimension mismatch");
  Matrix s(a.n_);
  for (std::size_t i = 0; i < s.data_.size(); ++i)
    s.data_[i] = a.data_[i] + b.data_[i];
  return s;
}

Matrix operator*(const Rational& s, const Matrix& m) {
  Matrix out(m.n_);
  for (std::size_t i = 0; i < out.data_.size(); ++i)
    out.data_[i] = s * m.data_[i];
  return out;
}

RowVector operator*(const RowVector& v, const Matrix& m) {
  if (v.size() != m.dim())
    throw std::invalid_argument("row vector / matrix dimension mismatch");
  RowVector out(m.dim());
  Rational term;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (sgn(v[k]) == 0) continue;
    for (std::size_t c = 0; c < m.dim(); ++c) {
      if (sgn(m(k, c)) == 0) continue;
      term = v[k] * m(k, c);
      out[c] += term;
    }
  }
  return out;
}

ColumnVector operator*(const Matrix& m, const ColumnVector& v) {
  if (v.size() != m.dim())
    throw std::invalid_argument("matrix / column vector dimension mismatch");
  ColumnVector out(m.dim());
  Rational term;
  for (std::size_t r = 0; r < m.dim(); ++r) {
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (sgn(v[k]) == 0 || sgn(m(r, k)) == 0) continue;
      term = m(r, k) * v[k];
      out[r] += term;
    }
  }
  return out;
}

Rational operator*(const RowVector& row, const ColumnVector& column) {
  if (row.size() != column.size())
    throw std::invalid_argument("inner product dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < row.size(); ++i) s += row[i] * column[i];
  return s;
}

std::uint64_t checksum(const Matrix& m) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
    h ^= 0xff;  // entry separator
    h *= 0x100000001b3ULL;
  };
  mix(std::to_string(m.dim()));
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c) mix(to_string(m(r, c)));
  return h;
}

std::string checksum_hex(const Matrix& m) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(checksum(m)));
  return buf;
}

}  // namespace pfa
