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

#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "pfa/error.hpp"
#include "pfa/rational.hpp"

namespace pfa {
namespace {

TEST(FractionalValue, DropsTrailingZeros) {
  EXPECT_EQ(fractional_value(DigitWord("432100")), Rational(4321, 10000));
}

TEST(FractionalValue, EmptyWordIsZero) { EXPECT_EQ(fractional_value(DigitWord("")), 0); }

TEST(FractionalValue, TwoDigits) { EXPECT_EQ(fractional_value(DigitWord("11")), Rational(11, 100)); }

TEST(FractionalValue, ConcatenationLaw) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    std::string u, v;
    for (std::size_t i = rng() % 8; i > 0; --i) u += static_cast<char>('0' + rng() % 10);
    for (std::size_t i = rng() % 8; i > 0; --i) v += static_cast<char>('0' + rng() % 10);
    EXPECT_EQ(fractional_value(DigitWord(u + v)),
              fractional_value(DigitWord(u)) + pow10_neg(u.size()) * fractional_value(DigitWord(v)))
        << u << " " << v;
    EXPECT_EQ(fractional_value(DigitWord(u)), oracle::decimal(u));
  }
}

TEST(FractionalValue, AppendingZeroKeepsValue) {
  EXPECT_EQ(fractional_value(DigitWord("12")), fractional_value(DigitWord("120")));
}

TEST(DigitWord, RejectsNonDigits) { EXPECT_THROW(DigitWord("1a"), InvalidInput); }

TEST(DigitWord, GadgetWords) {
  EXPECT_TRUE(DigitWord("").is_gadget_word());
  EXPECT_TRUE(DigitWord("1112").is_gadget_word());
  EXPECT_FALSE(DigitWord("111").is_gadget_word());
  EXPECT_FALSE(DigitWord("13").is_gadget_word());
}

TEST(RecodeBinary, Examples) {
  EXPECT_EQ(recode_binary("0", "01").digits(), "11");
  EXPECT_EQ(recode_binary("01", "01").digits(), "1112");
  EXPECT_EQ(recode_binary("", "01").digits(), "");
  EXPECT_EQ(recode_binary("ba", "ab").digits(), "1211");
}

TEST(RecodeBinary, RejectsForeignSymbol) {
  EXPECT_THROW(recode_binary("012", "01"), InvalidInput);
  EXPECT_THROW(recode_binary("0", "012"), InvalidInput);
}

TEST(Pow10Neg, Examples) {
  EXPECT_EQ(pow10_neg(0), 1);
  EXPECT_EQ(pow10_neg(2), Rational(1, 100));
  EXPECT_EQ(pow10_neg(4), Rational(1, 10000));
}

TEST(RationalText, CanonicalForm) {
  EXPECT_EQ(to_string(parse_rational("-105/99")), "-35/33");
  EXPECT_EQ(to_string(parse_rational("4")), "4/1");
  EXPECT_EQ(to_string(parse_rational("-6/4")), "-3/2");
  EXPECT_EQ(to_string(Rational(0)), "0/1");
}

TEST(RationalText, Rejects) {
  EXPECT_THROW(parse_rational("1/0"), InvalidInput);
  EXPECT_THROW(parse_rational("x"), InvalidInput);
  EXPECT_THROW(parse_rational(""), InvalidInput);
  EXPECT_THROW(parse_rational("1.5"), InvalidInput);
  EXPECT_THROW(parse_rational("6/-4"), InvalidInput);
}

TEST(RationalArithmetic, FieldLawsOnRandomTriples) {
  std::mt19937_64 rng(11);
  auto draw = [&] {
    return Rational(static_cast<long>(rng() % 2001) - 1000, 1 + rng() % 997) /
           Rational(1 + rng() % 13);
  };
  for (int t = 0; t < 500; ++t) {
    Rational a = draw(), b = draw(), c = draw();
    a.canonicalize();
    b.canonicalize();
    c.canonicalize();
    EXPECT_EQ(Rational((a + b) + c), Rational(a + (b + c)));
    EXPECT_EQ(Rational(a * b), Rational(b * a));
    EXPECT_EQ(Rational(a * (b + c)), Rational(a * b + a * c));
  }
}

TEST(Ceil, RoundsUp) {
  EXPECT_EQ(ceil(Rational(7, 2)), 4);
  EXPECT_EQ(ceil(Rational(-7, 2)), -3);
  EXPECT_EQ(ceil(Rational(2)), 2);
}

}  // namespace
}  // namespace pfa
