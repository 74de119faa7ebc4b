// Copyright 2026 The hnp-kit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hnp/rational.hpp"

#include <gtest/gtest.h>

#include <random>

using hnp::parse_rational;
using hnp::ParseError;
using hnp::Rational;

TEST(RationalParse, IntegersAndFractions) {
  EXPECT_EQ(parse_rational("0"), Rational(0));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_EQ(parse_rational("+3"), Rational(3));
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(parse_rational("-10/4"), Rational(-5, 2));
  EXPECT_EQ(parse_rational("123456789012345678901234567890/3"),
            Rational(hnp::Integer("41152263004115226300411522630")));
}

TEST(RationalParse, ParsedValuesAreCanonical) {
  for (const char* s : {"6/4", "-9/3", "0/5", "100/250"}) {
    EXPECT_TRUE(hnp::is_canonical(parse_rational(s))) << s;
  }
  EXPECT_EQ(hnp::to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(hnp::to_string(parse_rational("-9/3")), "-3");
  EXPECT_EQ(hnp::to_string(parse_rational("0/5")), "0");
}

TEST(RationalParse, RejectsMalformed) {
  for (const char* s : {"", "-", "1/", "/2", "1.5", "1/-2", "a", "1 /2", "--1", "1/2/3", "0x10"}) {
    EXPECT_THROW(parse_rational(s), ParseError) << '"' << s << '"';
  }
}

TEST(RationalParse, ZeroDenominator) {
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("0/0"), ParseError);
  try {
    parse_rational("3/00");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("zero denominator"), std::string::npos);
  }
}

TEST(RationalArithmetic, FuzzedResultsStayCanonical) {
  std::mt19937_64 rng(7);
  auto draw = [&] {
    const long num = static_cast<long>(rng() % 2001) - 1000;
    const long den = static_cast<long>(rng() % 999) + 1;
    return Rational(num, den);
  };
  for (int trial = 0; trial < 2000; ++trial) {
    const Rational p = draw();
    const Rational q = draw();
    for (const Rational& r : {p + q, p - q, p * q, q != 0 ? p / q : p, -p}) {
      ASSERT_TRUE(hnp::is_canonical(r));
      ASSERT_EQ(parse_rational(hnp::to_string(r)), r);
    }
  }
}
