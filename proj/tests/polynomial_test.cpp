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


#include "twalg/polynomial.hpp"

#include <random>

#include <gtest/gtest.h>

namespace twalg {
namespace {

// Monic product of (t - r) over the roots.
Polynomial FromRoots(const std::vector<Rational>& roots) {
  Polynomial p = {Rational(1)};
  for (const Rational& r : roots) {
    Polynomial next(p.size() + 1, Rational(0));
    for (std::size_t k = 0; k < p.size(); ++k) {
      next[k + 1] += p[k];
      next[k] -= r * p[k];
    }
    p = std::move(next);
  }
  return p;
}

TEST(PolynomialTest, EvaluateAndDivide) {
  const Polynomial p = FromRoots({Rational(1), Rational(-2)});  // t^2 + t - 2
  EXPECT_EQ(evaluate(p, Rational(1)), Rational(0));
  EXPECT_EQ(evaluate(p, Rational(0)), Rational(-2));
  const auto [q, r] = divide(p, FromRoots({Rational(1)}));
  EXPECT_EQ(q, FromRoots({Rational(-2)}));
  EXPECT_TRUE(r.empty());
  EXPECT_THROW(divide(p, Polynomial{}), std::domain_error);
}

TEST(PolynomialTest, GcdAndSquareFree) {
  const Polynomial a = FromRoots({Rational(1), Rational(2)});
  const Polynomial b = FromRoots({Rational(2), Rational(3)});
  EXPECT_EQ(gcd(a, b), FromRoots({Rational(2)}));
  EXPECT_TRUE(is_square_free(a));
  EXPECT_FALSE(is_square_free(FromRoots({Rational(2), Rational(2)})));
  EXPECT_EQ(derivative(a), (Polynomial{Rational(-3), Rational(2)}));
}

TEST(PolynomialTest, RationalRootsIncludeFractions) {
  // 6t^2 - 5t + 1 = (2t - 1)(3t - 1).
  const Polynomial p = {Rational(1), Rational(-5), Rational(6)};
  EXPECT_EQ(rational_roots(p, Rational(10)), (std::vector<Rational>{Rational(1, 3), Rational(1, 2)}));
  // t^2 - 2 has no rational roots.
  EXPECT_TRUE(rational_roots({Rational(-2), Rational(0), Rational(1)}, Rational(10)).empty());
}

TEST(PolynomialTest, MinimalPolynomialOfProjector) {
  RationalMatrix e = RationalMatrix::Zero(3, 3);
  e(0, 0) = 1;
  e(1, 1) = 1;
  EXPECT_EQ(minimal_polynomial(e), FromRoots({Rational(0), Rational(1)}));
}

TEST(PolynomialTest, EigenvaluesOfCompleteGraph) {
  // K_4 adjacency: 3 once and -1 three times.
  RationalMatrix a = RationalMatrix::Constant(4, 4, Rational(1));
  for (Index i = 0; i < 4; ++i) a(i, i) = 0;
  EXPECT_EQ(rational_eigenvalues(a), (std::vector<Rational>{Rational(-1), Rational(3)}));
}

TEST(PolynomialTest, IrrationalEigenvalueThrows) {
  // Path on three vertices: eigenvalues 0 and +-sqrt(2).
  RationalMatrix a = RationalMatrix::Zero(3, 3);
  a(0, 1) = a(1, 0) = a(1, 2) = a(2, 1) = 1;
  EXPECT_THROW(rational_eigenvalues(a), IrrationalEigenvalueError);
}

TEST(PolynomialTest, NonDiagonalizableThrows) {
  RationalMatrix j = RationalMatrix::Zero(2, 2);
  j(0, 1) = 1;
  EXPECT_THROW(rational_eigenvalues(j), VerificationError);
}

// Property: roots planted in a diagonal matrix (conjugated by a unipotent
// matrix) come back exactly.
TEST(PolynomialPropertyTest, PlantedEigenvaluesAreRecovered) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    const Index n = 2 + rng() % 4;
    RationalMatrix d = RationalMatrix::Zero(n, n);
    std::vector<Rational> planted;
    for (Index i = 0; i < n; ++i) {
      d(i, i) = Rational(static_cast<int>(rng() % 13) - 6, 1 + rng() % 2);
      planted.push_back(d(i, i));
    }
    RationalMatrix u = RationalMatrix::Identity(n, n);
    for (Index i = 0; i < n; ++i) {
      for (Index j = i + 1; j < n; ++j) u(i, j) = Rational(static_cast<int>(rng() % 5) - 2);
    }
    const RationalMatrix m = multiply(multiply(u, d), inverse(u));
    std::sort(planted.begin(), planted.end());
    planted.erase(std::unique(planted.begin(), planted.end()), planted.end());
    ASSERT_EQ(rational_eigenvalues(m), planted);
  }
}

}  // namespace
}  // namespace twalg
