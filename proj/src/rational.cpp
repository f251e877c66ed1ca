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

#include "pfa/rational.hpp"

#include <algorithm>
#include <cctype>

#include "pfa/error.hpp"

namespace pfa {
namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  const auto den_text =
      slash == std::string_view::npos ? std::string_view("1")
                                      : text.substr(slash + 1);
  if (!is_integer_literal(num_text) || !is_integer_literal(den_text) ||
      den_text.front() == '-' || den_text.front() == '+') {
    throw InvalidInput("not a rational literal: \"" + std::string(text) + "\"");
  }
  const mpz_class den = parse_integer(den_text);
  if (den == 0) {
    throw InvalidInput("zero denominator: \"" + std::string(text) + "\"");
  }
  Rational out(parse_integer(num_text), den);
  out.canonicalize();
  return out;
}

std::string to_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

mpz_class ceil(const Rational& value) {
  mpz_class out;
  mpz_cdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return out;
}

Rational pow10_neg(std::size_t n) {
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, n);
  return Rational(mpz_class(1), den);
}

DigitWord::DigitWord(std::string_view digits) : digits_(digits) {
  for (char c : digits_) {
    if (c < '0' || c > '9') {
      throw InvalidInput("not a decimal digit: '" + std::string(1, c) + "'");
    }
  }
}

bool DigitWord::is_gadget_word() const {
  return digits_.size() % 2 == 0 &&
         std::all_of(digits_.begin(), digits_.end(),
                     [](char c) { return c == '1' || c == '2'; });
}

Rational fractional_value(const DigitWord& word) {
  // Horner from the right: 0.u = (u_1 + 0.u_2...u_n) / 10.
  Rational acc = 0;
  for (auto it = word.digits().rbegin(); it != word.digits().rend(); ++it) {
    acc = (acc + (*it - '0')) / 10;
  }
  return acc;
}

DigitWord recode_binary(std::string_view word, std::string_view alphabet) {
  if (alphabet.size() != 2 || alphabet[0] == alphabet[1]) {
    throw InvalidInput("binary recoding needs exactly two distinct letters, got \"" +
                       std::string(alphabet) + "\"");
  }
  std::string out;
  out.reserve(2 * word.size());
  for (char c : word) {
    if (c == alphabet[0]) {
      out += "11";
    } else if (c == alphabet[1]) {
      out += "12";
    } else {
      throw InvalidInput("symbol '" + std::string(1, c) +
                         "' is not in the alphabet \"" + std::string(alphabet) +
                         "\"");
    }
  }
  return DigitWord(out);
}

}  // namespace pfa
