// Copyright 2026 The twalg Authors
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


#include "twalg/rational.hpp"

#include <cstdint>
#include <limits>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

namespace twalg {
namespace {

TEST(RationalTest, NormalizesSignAndLowestTerms) {
  const Rational r(6, -4);
  EXPECT_EQ(r.numerator(), BigInt(-3));
  EXPECT_EQ(r.denominator(), BigInt(2));
  EXPECT_EQ(r.to_string(), "-3/2");
  EXPECT_EQ(Rational(0, -7), Rational(0));
  EXPECT_TRUE(Rational(8, 4).is_integer());
}

TEST(RationalTest, ZeroDenominatorThrows) {
  EXPECT_THROW(Rational(1, 0), std::domain_error);
  EXPECT_THROW(Rational(0).inverse(), std::domain_error);
  EXPECT_THROW(Rational(3) / Rational(0), std::domain_error);
}

TEST(RationalTest, OverflowPromotesToBigAndBack) {
  const Rational big = Rational(std::numeric_limits<std::int64_t>::max()) +
                       Rational(std::numeric_limits<std::int64_t>::max());
  EXPECT_FALSE(big.is_small());
  EXPECT_EQ(big.numerator(),
            BigInt(std::numeric_limits<std::int64_t>::max()) * 2);
  const Rational back = big - Rational(std::numeric_limits<std::int64_t>::max());
  EXPECT_TRUE(back.is_small());
  EXPECT_EQ(back, Rational(std::numeric_limits<std::int64_t>::max()));
}

TEST(RationalTest, BigConstructorAcceptsNegativeDenominator) {
  EXPECT_EQ(Rational(BigInt(-537), BigInt(-189)), Rational(179, 63));
  EXPECT_EQ(Rational(BigInt(5), BigInt(-10)), Rational(-1, 2));
  EXPECT_THROW(Rational(BigInt(1), BigInt(0)), std::domain_error);
}

TEST(RationalTest, Int64MinIsRepresentable) {
  const Rational m(std::numeric_limits<std::int64_t>::min());
  EXPECT_EQ(m.numerator(), BigInt(std::numeric_limits<std::int64_t>::min()));
  EXPECT_EQ(-(-m), m);
  EXPECT_EQ((m * Rational(-1)).numerator(),
            -BigInt(std::numeric_limits<std::int64_t>::min()));
}

TEST(RationalTest, OrderingAndPrinting) {
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
  std::ostringstream os;
  os << Rational(5, 10);
  EXPECT_EQ(os.str(), "1/2");
  EXPECT_EQ(Rational(-7).sign(), -1);
  EXPECT_EQ(Rational(-7, 2).abs(), Rational(7, 2));
}

// Property: every operation agrees with boost's cpp_rational, including
// operands near the int64 boundary where the fast path must promote.
TEST(RationalPropertyTest, MatchesCppRational) {
  std::mt19937_64 rng(20260101);
  const std::int64_t edges[] = {0, 1, -1, 2, 3, 1'000'003,
                                std::numeric_limits<std::int64_t>::max(),
                                std::numeric_limits<std::int64_t>::min() + 1,
                                std::numeric_limits<std::int64_t>::max() / 3};
  auto draw = [&]() -> std::int64_t {
    if (rng() % 4 == 0) return edges[rng() % std::size(edges)];
    return static_cast<std::int64_t>(rng() % 2001) - 1000;
  };
  for (int trial = 0; trial < 4000; ++trial) {
    const std::int64_t an = draw(), bn = draw();
    std::int64_t ad = draw(), bd = draw();
    if (ad == 0) ad = 1;
    if (bd == 0) bd = 7;
    const Rational a(an, ad), b(bn, bd);
    // cpp_rational wants a positive denominator.
    const BigRational ba = BigRational(BigInt(an)) / BigRational(BigInt(ad));
    const BigRational bb = BigRational(BigInt(bn)) / BigRational(BigInt(bd));
    ASSERT_EQ((a + b).to_big(), ba + bb);
    ASSERT_EQ((a - b).to_big(), ba - bb);
    ASSERT_EQ((a * b).to_big(), ba * bb);
    if (bn != 0) ASSERT_EQ((a / b).to_big(), ba / bb);
    ASSERT_EQ(a < b, ba < bb);
    ASSERT_EQ(a == b, ba == bb);
  }
}

}  // namespace
}  // namespace twalg
