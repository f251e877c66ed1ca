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

// Reference computations for tests, written without the library's own
// helpers: direct concatenation, the gadget template entry by entry, a naive
// prefix-code decoder and plain word enumeration.

#ifndef PFA_TESTS_ORACLE_HPP_
#define PFA_TESTS_ORACLE_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Grid = std::vector<std::vector<Q>>;
using Pairs = std::vector<std::pair<std::string, std::string>>;

inline Q q(long num, unsigned long den = 1) {
  Q x(num, den);
  x.canonicalize();
  return x;
}

// 0.d1d2... read digit by digit.
inline Q decimal(const std::string& digits) {
  Q value = 0, place = q(1, 10);
  for (char c : digits) {
    value += place * (c - '0');
    place /= 10;
  }
  return value;
}

inline Q ten_to_minus(std::size_t n) {
  Q x = 1;
  for (std::size_t i = 0; i < n; ++i) x /= 10;
  return x;
}

// The 6x6 template, entry by entry.
inline Grid a0_template(const std::string& v, const std::string& w) {
  const Q x = decimal(v), y = decimal(w);
  const Q sv = ten_to_minus(v.size()), sw = ten_to_minus(w.size());
  Grid m(6, std::vector<Q>(6, Q(0)));
  m[0][0] = 1;
  m[1][0] = x;
  m[1][1] = sv;
  m[2][0] = x * x;
  m[2][1] = 2 * sv * x;
  m[2][2] = sv * sv;
  m[3][0] = y;
  m[3][3] = sw;
  m[4][0] = y * y;
  m[4][3] = 2 * sw * y;
  m[4][4] = sw * sw;
  m[5][0] = x * y;
  m[5][1] = sv * y;
  m[5][3] = sw * x;
  m[5][5] = sv * sw;
  return m;
}

// The conjugated template: row 3 gains (1 - 10^-2|v|)/99 in column 1 and
// row 5 is rescaled by 99/105 outside the diagonal.
inline Grid a_template(const std::string& v, const std::string& w) {
  Grid m = a0_template(v, w);
  const Q sv = ten_to_minus(v.size());
  m[2][0] += (1 - sv * sv) / 99;
  m[4][0] *= q(99, 105);
  m[4][3] *= q(99, 105);
  return m;
}

inline std::pair<std::string, std::string> concat(const Pairs& pairs,
                                                  const std::vector<std::size_t>& indices) {
  std::pair<std::string, std::string> out;
  for (std::size_t i : indices) {
    out.first += pairs[i - 1].first;
    out.second += pairs[i - 1].second;
  }
  return out;
}

inline bool solves(const Pairs& pairs, const std::vector<std::size_t>& indices) {
  if (indices.empty()) return false;
  const auto [top, bottom] = concat(pairs, indices);
  return top == bottom;
}

// All sequences over 1..k of length 1..max_len.
inline std::vector<std::vector<std::size_t>> sequences(std::size_t k, std::size_t max_len) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::vector<std::size_t>> level{{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& s : level) {
      for (std::size_t i = 1; i <= k; ++i) {
        auto t = s;
        t.push_back(i);
        next.push_back(t);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

// All strings over `letters` of length 0..max_len.
inline std::vector<std::string> strings(const std::string& letters, std::size_t max_len) {
  std::vector<std::string> out{""};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].size() == max_len) continue;
    for (char c : letters) out.push_back(out[i] + c);
  }
  return out;
}

// Prefix code b, ab, ..., a^(k-2)b, a^(k-1) by table lookup.
inline std::vector<std::string> tau_table(std::size_t k) {
  std::vector<std::string> t;
  for (std::size_t i = 1; i < k; ++i) t.push_back(std::string(i - 1, 'a') + "b");
  t.push_back(std::string(k - 1, 'a'));
  return t;
}

// Greedy longest-decodable-prefix decoding by trying every codeword.
inline std::vector<std::size_t> tau_decode(std::size_t k, const std::string& word) {
  const auto table = tau_table(k);
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (true) {
    bool matched = false;
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (word.compare(pos, table[i].size(), table[i]) == 0 &&
          pos + table[i].size() <= word.size()) {
        out.push_back(i + 1);
        pos += table[i].size();
        matched = true;
        break;
      }
    }
    if (!matched) return out;
  }
}

inline std::string random_gadget_digits(std::mt19937_64& rng, std::size_t max_digits) {
  const std::size_t letters = rng() % (max_digits / 2 + 1);
  std::string d;
  for (std::size_t i = 0; i < letters; ++i) d += rng() % 2 ? "12" : "11";
  return d;
}

}  // namespace oracle

#endif  // PFA_TESTS_ORACLE_HPP_
