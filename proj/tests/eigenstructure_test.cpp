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


#include <gtest/gtest.h>

#include "twalg/scheme.hpp"

namespace twalg {
namespace {

Rational Trace(const RationalMatrix& m) {
  Rational t;
  for (Index i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

class EigenstructureTest : public ::testing::TestWithParam<std::vector<int>> {};

TEST_P(EigenstructureTest, IdempotentsAndEigenmatrices) {
  const AssociationScheme s = build_from_spec(SchemeSpec(GetParam()));
  const Eigenstructure e = eigenstructure(s);
  const int d = s.classes();
  const Index n = s.order();
  ASSERT_EQ(e.classes(), d);

  // Trivial idempotent first.
  EXPECT_EQ(e.idempotents[0], RationalMatrix::Constant(n, n, Rational(1, n)));

  RationalMatrix sum = RationalMatrix::Zero(n, n);
  for (int i = 0; i <= d; ++i) {
    const RationalMatrix& ei = e.idempotents[i];
    sum += ei;
    EXPECT_EQ(multiply(ei, ei), ei);
    EXPECT_EQ(Trace(ei), Rational(e.multiplicities[i]));
    for (int k = i + 1; k <= d; ++k) EXPECT_TRUE(is_zero_matrix(multiply(ei, e.idempotents[k])));
    for (int j = 0; j <= d; ++j) {
      EXPECT_EQ(multiply(s.adjacency(j), ei), e.first(i, j) * ei);
    }
  }
  EXPECT_EQ(sum, RationalMatrix::Identity(n, n));

  // P Q = n I with P(i, j) = p_j(i), Q(j, i) = q_i(j).
  const RationalMatrix pq = multiply(e.first, e.second);
  EXPECT_EQ(pq, RationalMatrix::Identity(d + 1, d + 1) * Rational(n));

  for (int h = 0; h <= d; ++h) {
    for (int i = 0; i <= d; ++i) {
      for (int j = 0; j <= d; ++j) EXPECT_GE(e.krein_parameter(h, i, j), Rational(0));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Wreaths, EigenstructureTest,
                         ::testing::Values(std::vector<int>{2}, std::vector<int>{4},
                                           std::vector<int>{2, 3}, std::vector<int>{3, 3},
                                           std::vector<int>{2, 2, 3}, std::vector<int>{3, 2, 4},
                                           std::vector<int>{2, 2, 2, 2}));

TEST(EigenstructureErrorTest, PentagonHasIrrationalEigenvalues) {
  IntMatrix c5(5, 5);
  for (Index x = 0; x < 5; ++x) {
    for (Index y = 0; y < 5; ++y) {
      const Index dist = std::min((x - y + 5) % 5, (y - x + 5) % 5);
      c5(x, y) = static_cast<int>(dist);
    }
  }
  const AssociationScheme s = AssociationScheme::from_relation_table(c5);
  ASSERT_TRUE(validate(s).passed);
  EXPECT_THROW(eigenstructure(s), IrrationalEigenvalueError);
}

TEST(EigenstructureTest, CompleteSchemeEigenmatrix) {
  const Eigenstructure e = eigenstructure(complete_scheme(5));
  EXPECT_EQ(e.first(0, 1), Rational(4));
  EXPECT_EQ(e.first(1, 1), Rational(-1));
  EXPECT_EQ(e.multiplicities, (std::vector<Index>{1, 4}));
}

}  // namespace
}  // namespace twalg
