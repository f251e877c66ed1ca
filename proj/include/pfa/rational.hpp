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

// Exact scalars and the decimal digit words that parameterize the matrix
// gadgets.

#ifndef PFA_RATIONAL_HPP_
#define PFA_RATIONAL_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

namespace pfa {

// Arbitrary-precision fraction. GMP keeps every value canonical (lowest
// terms, positive denominator) after each operation.
using Rational = mpq_class;

// Accepts "p/q" or "p" with optional sign; non-canonical input such as
// "-105/99" is reduced. Throws InvalidInput on anything else.
Rational parse_rational(std::string_view text);

// Always "num/den" in lowest terms, including integers ("3/1", "0/1").
std::string to_string(const Rational& value);

// Smallest integer >= value.
mpz_class ceil(const Rational& value);

// 1 / 10^n.
Rational pow10_neg(std::size_t n);

// A word of decimal digits 0-9. The empty word is valid.
class DigitWord {
 public:
  DigitWord() = default;
  // Throws InvalidInput if any character is not a decimal digit.
  explicit DigitWord(std::string_view digits);

  const std::string& digits() const { return digits_; }
  std::size_t size() const { return digits_.size(); }
  bool empty() const { return digits_.empty(); }

  // True when every digit is 1 or 2 and the length is even, i.e. the word
  // lies in {11,12}* as the gadget matrices require.
  bool is_gadget_word() const;

  DigitWord operator+(const DigitWord& other) const {
    DigitWord out;
    out.digits_ = digits_ + other.digits_;
    return out;
  }
  friend auto operator<=>(const DigitWord&, const DigitWord&) = default;

 private:
  std::string digits_;
};

// 0.u = sum_j u_j 10^{-j}. Trailing zeros do not change the value.
Rational fractional_value(const DigitWord& word);

// Recodes a word over a two-letter alphabet: the first letter of `alphabet`
// becomes "11", the second "12". Throws InvalidInput if `alphabet` does not
// have exactly two distinct letters or `word` leaves it.
DigitWord recode_binary(std::string_view word, std::string_view alphabet);

}  // namespace pfa

#endif  // PFA_RATIONAL_HPP_
