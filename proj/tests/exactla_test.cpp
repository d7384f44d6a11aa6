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


#include "twalg/exactla.hpp"

#include <algorithm>
#include <random>

#include <gtest/gtest.h>

namespace twalg {
namespace {

RationalMatrix RandomMatrix(std::mt19937_64& rng, Index rows, Index cols) {
  RationalMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) {
      // Sparse small entries keep rank deficiency likely.
      m(i, j) = rng() % 3 == 0 ? Rational(static_cast<int>(rng() % 7) - 3, 1 + rng() % 3)
                               : Rational(0);
    }
  }
  return m;
}

RationalMatrix Unit(Index n, Index i, Index j) {
  RationalMatrix m = RationalMatrix::Zero(n, n);
  m(i, j) = 1;
  return m;
}

TEST(ExactLaTest, KronOfIdentitiesIsIdentity) {
  const RationalMatrix k = kron(RationalMatrix::Identity(2, 2), RationalMatrix::Identity(3, 3));
  EXPECT_EQ(k, RationalMatrix::Identity(6, 6));
}

TEST(ExactLaTest, KronBlockLayout) {
  RationalMatrix a(1, 2), b(2, 1);
  a << Rational(1), Rational(2);
  b << Rational(3), Rational(5);
  const RationalMatrix k = kron(a, b);
  ASSERT_EQ(k.rows(), 2);
  ASSERT_EQ(k.cols(), 2);
  EXPECT_EQ(k(0, 0), Rational(3));
  EXPECT_EQ(k(1, 0), Rational(5));
  EXPECT_EQ(k(0, 1), Rational(6));
  EXPECT_EQ(k(1, 1), Rational(10));
}

TEST(ExactLaTest, HadamardShapeMismatchThrows) {
  EXPECT_THROW(hadamard(RationalMatrix::Zero(2, 2), RationalMatrix::Zero(2, 3)), DimensionError);
  EXPECT_THROW(multiply(RationalMatrix::Zero(2, 2), RationalMatrix::Zero(3, 3)), DimensionError);
}

TEST(ExactLaTest, NullspaceAndInverse) {
  RationalMatrix m(2, 3);
  m << Rational(1), Rational(2), Rational(3), Rational(2), Rational(4), Rational(6);
  EXPECT_EQ(rank(m), 1);
  const RationalMatrix ns = nullspace(m);
  EXPECT_EQ(ns.cols(), 2);
  EXPECT_TRUE(is_zero_matrix(multiply(m, ns)));

  RationalMatrix a(2, 2);
  a << Rational(2), Rational(1), Rational(1), Rational(1);
  EXPECT_EQ(multiply(a, inverse(a)), RationalMatrix::Identity(2, 2));
  EXPECT_THROW(inverse(RationalMatrix::Zero(2, 2)), DimensionError);
}

TEST(ExactLaTest, RowEchelonCoordinatesAndKernel) {
  RowEchelon<Rational> e(3);
  const std::vector<Rational> u = {Rational(1), Rational(1), Rational(0)};
  const std::vector<Rational> v = {Rational(0), Rational(1), Rational(1)};
  EXPECT_TRUE(e.insert(std::span<const Rational>(u)));
  EXPECT_TRUE(e.insert(std::span<const Rational>(v)));
  const std::vector<Rational> w = {Rational(2), Rational(3), Rational(1)};  // 2u + v
  EXPECT_FALSE(e.insert(std::span<const Rational>(w)));
  EXPECT_EQ(e.rank(), 2);
  ASSERT_TRUE(e.coordinates(std::span<const Rational>(w)).has_value());
  const auto kernel = e.kernel();
  ASSERT_EQ(kernel.size(), 1u);
  for (const auto* r : {&u, &v}) {
    Rational dot = 0;
    for (std::size_t j = 0; j < 3; ++j) dot += (*r)[j] * kernel[0][j];
    EXPECT_EQ(dot, Rational(0));
  }
  EXPECT_THROW(e.insert(std::vector<Rational>(4)), DimensionError);
}

TEST(ExactLaTest, ClosureOfMatrixUnitIsFullAlgebra) {
  // E_01 and E_10 generate all of M_2.
  const auto span = multiplicative_closure<Rational>({Unit(2, 0, 1), Unit(2, 1, 0)});
  EXPECT_EQ(span.dim(), 4);
  EXPECT_THROW(multiplicative_closure<Rational>({}), DimensionError);
}

TEST(ExactLaTest, ClosureOfDiagonalIsDiagonal) {
  RationalMatrix d = RationalMatrix::Zero(3, 3);
  d(0, 0) = 1;
  d(1, 1) = 2;
  d(2, 2) = 3;
  EXPECT_EQ(multiplicative_closure<Rational>({d}).dim(), 3);
}

TEST(ExactLaPropertyTest, KronIsAssociative) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const RationalMatrix a = RandomMatrix(rng, 1 + rng() % 3, 1 + rng() % 3);
    const RationalMatrix b = RandomMatrix(rng, 1 + rng() % 3, 1 + rng() % 3);
    const RationalMatrix c = RandomMatrix(rng, 1 + rng() % 2, 1 + rng() % 2);
    ASSERT_EQ(kron(kron(a, b), c), kron(a, kron(b, c)));
  }
}

TEST(ExactLaPropertyTest, MultiplyMatchesEigenProduct) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const RationalMatrix a = RandomMatrix(rng, 4, 3);
    const RationalMatrix b = RandomMatrix(rng, 3, 5);
    const RationalMatrix expected = a * b;
    ASSERT_EQ(multiply(a, b), expected);
  }
}

TEST(ExactLaPropertyTest, RrefIsIdempotentAndPreservesRank) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const RationalMatrix m = RandomMatrix(rng, 1 + rng() % 5, 1 + rng() % 5);
    const auto once = rref(m);
    const auto twice = rref(once.reduced);
    ASSERT_EQ(once.reduced, twice.reduced);
    ASSERT_EQ(once.rank, twice.rank);
    ASSERT_EQ(rank(RationalMatrix(m.transpose())), once.rank);
    ASSERT_EQ(nullspace(m).cols(), m.cols() - once.rank);
  }
}

TEST(ExactLaPropertyTest, SpanIsIndependentOfInsertionOrder) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<RationalMatrix> ms;
    for (int k = 0; k < 5; ++k) ms.push_back(RandomMatrix(rng, 3, 3));
    ms.push_back(ms[0] + ms[1]);  // a dependent element
    MatrixAlgebraSpan forward(3), backward(3);
    for (const auto& m : ms) forward.insert(m);
    std::reverse(ms.begin(), ms.end());
    for (const auto& m : ms) backward.insert(m);
    ASSERT_EQ(forward, backward);
    for (const auto& m : ms) ASSERT_TRUE(forward.contains(m));
  }
}

TEST(ExactLaPropertyTest, ClosureIsClosedUnderProducts) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 5; ++trial) {
    const auto span = multiplicative_closure<Rational>(
        {RandomMatrix(rng, 3, 3), RandomMatrix(rng, 3, 3)});
    const auto basis = span.basis();
    for (const auto& x : basis) {
      for (const auto& y : basis) ASSERT_TRUE(span.contains(multiply(x, y)));
    }
  }
}

}  // namespace
}  // namespace twalg
