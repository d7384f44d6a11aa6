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


#include "twalg/repdecomp.hpp"

#include <numeric>

#include <gtest/gtest.h>

namespace twalg {
namespace {

AlgebraDecomposition Decompose(const std::vector<int>& factors, std::uint64_t seed = 0) {
  return decompose(TerwilligerContext(build_from_spec(SchemeSpec(factors)), 0), seed);
}

TEST(RepDecompTest, CenterDimensions) {
  EXPECT_EQ(Decompose({2}).center.center_basis.dim(), 1);
  for (int m : {3, 4, 5}) EXPECT_EQ(Decompose({m}).center.center_basis.dim(), 2) << m;
  EXPECT_EQ(Decompose({3, 3}).center.center_basis.dim(), 4);
}

TEST(RepDecompTest, ProfilesOfWreathPowers) {
  const std::pair<std::vector<int>, std::string> cases[] = {
      {{2}, "M2"},           {{3}, "M2+M1"},         {{4}, "M2+M1"},
      {{3, 3}, "M3+M1^3"},   {{4, 4}, "M3+M1^3"},    {{3, 3, 3}, "M4+M1^6"},
      {{2, 2}, "M3+M1"},     {{2, 2, 2}, "M4+M1^3"}, {{2, 2, 2, 2}, "M5+M1^6"},
      {{2, 3}, "M3+M1^2"},   {{3, 2, 4}, "M4+M1^5"}};
  for (const auto& [f, summary] : cases) {
    const AlgebraDecomposition dec = Decompose(f);
    EXPECT_EQ(dec.profile.summary(), summary) << SchemeSpec(f).to_string();
    Index squares = 0, ranks = 0;
    for (const WedderburnBlock& b : dec.profile.blocks) {
      squares += b.dim * b.dim;
      ranks += b.module_dim();
    }
    EXPECT_EQ(squares, dec.algebra.dim());
    EXPECT_EQ(ranks, SchemeSpec(f).order());
  }
}

TEST(RepDecompTest, CentralIdempotentsAreOrthogonalAndCentral) {
  const AlgebraDecomposition dec = Decompose({3, 2});
  const auto& es = dec.center.central_idempotents;
  ASSERT_EQ(static_cast<Index>(es.size()), dec.center.center_basis.dim());
  const Index n = dec.algebra.t.order();
  RationalMatrix sum = RationalMatrix::Zero(n, n);
  for (std::size_t a = 0; a < es.size(); ++a) {
    sum += es[a];
    EXPECT_EQ(multiply(es[a], es[a]), es[a]);
    EXPECT_TRUE(dec.algebra.t.contains(es[a]));
    for (std::size_t b = a + 1; b < es.size(); ++b) {
      EXPECT_TRUE(is_zero_matrix(multiply(es[a], es[b])));
    }
    for (const RationalMatrix& g : dec.algebra.generators) {
      EXPECT_EQ(multiply(es[a], g), multiply(g, es[a]));
    }
  }
  EXPECT_EQ(sum, RationalMatrix::Identity(n, n));
}

TEST(RepDecompTest, ResultDoesNotDependOnSeed) {
  const AlgebraDecomposition a = Decompose({3, 3}, 0);
  const AlgebraDecomposition b = Decompose({3, 3}, 12345);
  ASSERT_EQ(a.center.central_idempotents.size(), b.center.central_idempotents.size());
  for (std::size_t k = 0; k < a.center.central_idempotents.size(); ++k) {
    EXPECT_EQ(a.center.central_idempotents[k], b.center.central_idempotents[k]);
  }
  EXPECT_EQ(a.profile.summary(), b.profile.summary());
}

TEST(RepDecompTest, PrimaryModuleIsIrreducible) {
  for (const auto& f : std::vector<std::vector<int>>{{3}, {2, 2}, {3, 3}, {2, 3, 4}}) {
    const TerwilligerContext ctx(build_from_spec(SchemeSpec(f)), 0);
    const PrimaryModuleReport r = verify_primary_module(ctx, decompose(ctx).profile);
    EXPECT_EQ(r.dim, static_cast<Index>(f.size()) + 1);
    EXPECT_TRUE(r.irreducible()) << SchemeSpec(f).to_string();
  }
}

TEST(RepDecompTest, StandardModuleSplitsIntoOrthogonalComponents) {
  const AlgebraDecomposition dec = Decompose({2, 3, 2});
  const auto parts = decompose_standard_module(dec.profile);
  ASSERT_EQ(parts.size(), dec.profile.blocks.size());
  Index total = 0;
  for (const IsotypicComponent& c : parts) {
    EXPECT_EQ(c.basis.cols(), c.dim * c.mult);
    total += c.basis.cols();
  }
  EXPECT_EQ(total, 12);
}

TEST(RepDecompTest, ModuleConjectureOnMixedFactors) {
  for (const auto& f : std::vector<std::vector<int>>{{2, 3}, {3, 2, 4}, {4, 2, 3}}) {
    const ConjectureReport r = general_wreath_module_conjecture(SchemeSpec(f));
    EXPECT_TRUE(r.consistent()) << SchemeSpec(f).to_string();
    EXPECT_EQ(r.status(), "CONJECTURE consistent");
  }
}

TEST(RepDecompTest, ConjectureFlagsAViolation) {
  WedderburnProfile p = Decompose({3, 3}).profile;
  p.blocks.back().dim = 2;  // a fabricated non-primary 2-dimensional block
  const ConjectureReport r = evaluate_module_conjecture(SchemeSpec({3, 3}), p);
  EXPECT_FALSE(r.consistent());
  EXPECT_EQ(r.status(), "CONJECTURE violated");
}

TEST(RepDecompTest, TruncatedSpanIsRejected) {
  MatrixAlgebraSpan span(2);
  for (const auto& [r, c] : {std::pair{0, 0}, std::pair{0, 1}, std::pair{1, 0}}) {
    RationalMatrix e = RationalMatrix::Zero(2, 2);
    e(r, c) = Rational(1);
    span.insert(e);
  }
  EXPECT_THROW(wedderburn_profile(span, {RationalMatrix::Identity(2, 2)}), WedderburnError);
}

TEST(RepDecompTest, FullMatrixAlgebraIsOneBlock) {
  MatrixAlgebraSpan span(3);
  for (Index r = 0; r < 3; ++r) {
    for (Index c = 0; c < 3; ++c) {
      RationalMatrix e = RationalMatrix::Zero(3, 3);
      e(r, c) = Rational(1);
      span.insert(e);
    }
  }
  const WedderburnProfile p = wedderburn_profile(span, {RationalMatrix::Identity(3, 3)});
  ASSERT_EQ(p.blocks.size(), 1u);
  EXPECT_EQ(p.blocks[0].dim, 3);
  EXPECT_EQ(p.blocks[0].mult, 1);
  EXPECT_EQ(p.summary(), "M3");
}

}  // namespace
}  // namespace twalg
