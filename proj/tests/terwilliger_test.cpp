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


#include "twalg/terwilliger.hpp"

#include <numeric>
#include <random>

#include <gtest/gtest.h>

namespace twalg {
namespace {

// Cayley graph on Z_4 x Z_4 with the given connection set, as a 2-class
// scheme.
AssociationScheme CayleyZ4Squared(const std::vector<std::pair<int, int>>& connection) {
  IntMatrix t(16, 16);
  for (int x = 0; x < 16; ++x) {
    for (int y = 0; y < 16; ++y) {
      const int da = ((y / 4 - x / 4) % 4 + 4) % 4, db = ((y % 4 - x % 4) % 4 + 4) % 4;
      int r = x == y ? 0 : 2;
      for (const auto& [a, b] : connection) {
        if (((a % 4 + 4) % 4) == da && ((b % 4 + 4) % 4) == db) r = 1;
      }
      t(x, y) = r;
    }
  }
  return AssociationScheme::from_relation_table(t);
}

TEST(TerwilligerTest, TripleProductsMatchBruteForce) {
  const AssociationScheme s = build_from_spec(SchemeSpec({2, 3}));
  for (Index x : {Index{0}, Index{4}}) {
    const TerwilligerContext ctx(s, x);
    const int d = s.classes();
    for (int i = 0; i <= d; ++i) {
      for (int j = 0; j <= d; ++j) {
        for (int h = 0; h <= d; ++h) {
          const RationalMatrix direct =
              multiply(multiply(ctx.dual_idempotent(i), s.adjacency(j)), ctx.dual_idempotent(h));
          ASSERT_EQ(ctx.triple(i, j, h), direct);
          for (Index y = 0; y < s.order(); ++y) {
            for (Index z = 0; z < s.order(); ++z) {
              const bool on = s.relation(x, y) == i && s.relation(y, z) == j &&
                              s.relation(x, z) == h;
              ASSERT_EQ(direct(y, z), Rational(on ? 1 : 0));
            }
          }
        }
      }
    }
  }
}

TEST(TerwilligerTest, DualIdempotentsPartitionIdentity) {
  const TerwilligerContext ctx(build_from_spec(SchemeSpec({3, 2})), 0);
  RationalMatrix sum = RationalMatrix::Zero(6, 6);
  RationalMatrix dual_sum = RationalMatrix::Zero(6, 6);
  for (int i = 0; i <= ctx.classes(); ++i) {
    sum += ctx.dual_idempotent(i);
    dual_sum += ctx.dual_adjacency(i);
  }
  EXPECT_EQ(sum, RationalMatrix::Identity(6, 6));
  // Sum of A_i* is n E_0*.
  EXPECT_EQ(dual_sum, ctx.dual_idempotent(0) * Rational(6));
  EXPECT_EQ(ctx.dual_adjacency(0), RationalMatrix::Identity(6, 6));
}

TEST(TerwilligerTest, BadBasePointThrows) {
  const AssociationScheme s = build_from_spec(SchemeSpec({2, 2}));
  EXPECT_THROW(TerwilligerContext(s, 4), std::out_of_range);
  EXPECT_THROW(TerwilligerContext(s, -1), std::out_of_range);
}

TEST(TerwilligerTest, NonzeroTriplesAreTheFiveFamilies) {
  for (const auto& f : std::vector<std::vector<int>>{
           {2}, {3}, {2, 3}, {3, 2}, {2, 2, 3}, {3, 3, 3}, {2, 4, 2, 3}}) {
    const SchemeSpec spec(f);
    const TerwilligerContext ctx(build_from_spec(spec), 0);
    EXPECT_EQ(nonzero_triple_products(ctx), predicted_nonzero_triples(spec)) << spec.to_string();
  }
}

TEST(TerwilligerTest, TriplesWithDistinctIndicesVanish) {
  // Relations from the base are ultrametric: two largest of i, j, h agree.
  const TerwilligerContext ctx(build_from_spec(SchemeSpec({3, 3, 3})), 0);
  for (int i = 0; i <= 3; ++i) {
    for (int j = 0; j <= 3; ++j) {
      for (int h = 0; h <= 3; ++h) {
        if (i == j || j == h || i == h) continue;
        EXPECT_TRUE(is_zero_matrix(ctx.triple(i, j, h))) << i << j << h;
      }
    }
  }
}

TEST(TerwilligerTest, DimensionMatchesFormula) {
  const std::pair<std::vector<int>, Index> cases[] = {
      {{2}, 4}, {{3}, 5}, {{3, 3}, 12}, {{4, 4}, 12}, {{2, 3}, 11}, {{2, 2, 3}, 20}, {{3, 3, 3}, 22}};
  for (const auto& [f, expected] : cases) {
    const SchemeSpec spec(f);
    EXPECT_EQ(predicted_dim(spec), expected) << spec.to_string();
    const TerwilligerContext ctx(build_from_spec(spec), 0);
    const TerwilligerAlgebra a = full_algebra(ctx);
    EXPECT_EQ(a.dim(), expected) << spec.to_string();
    EXPECT_EQ(a.t0.dim(), expected) << spec.to_string();
    EXPECT_TRUE(a.triply_regular);
    EXPECT_TRUE(munemasa_check(ctx, a.t0));
  }
}

TEST(TerwilligerTest, AlgebraIsClosedUnderTranspose) {
  const TerwilligerContext ctx(build_from_spec(SchemeSpec({2, 3, 2})), 0);
  const TerwilligerAlgebra a = full_algebra(ctx);
  for (const RationalMatrix& b : a.t.basis()) {
    ASSERT_TRUE(a.t.contains(RationalMatrix(b.transpose())));
  }
  for (const RationalMatrix& g : ctx.generators()) ASSERT_TRUE(a.t.contains(g));
}

TEST(TerwilligerTest, ShrikhandeIsNotTriplyRegularButRookGraphIs) {
  const AssociationScheme shrikhande =
      CayleyZ4Squared({{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}});
  const AssociationScheme rook =
      CayleyZ4Squared({{1, 0}, {2, 0}, {3, 0}, {0, 1}, {0, 2}, {0, 3}});
  ASSERT_TRUE(validate(shrikhande).passed);
  ASSERT_TRUE(validate(rook).passed);
  EXPECT_EQ(intersection_numbers(shrikhande), intersection_numbers(rook));

  const TerwilligerContext sctx(shrikhande, 0);
  const TerwilligerAlgebra sa = full_algebra(sctx);
  EXPECT_FALSE(sa.triply_regular);
  EXPECT_LT(sa.t0.dim(), sa.dim());
  EXPECT_FALSE(munemasa_check(sctx, sa.t0));
  EXPECT_FALSE(combinatorial_triple_regularity(shrikhande));

  const TerwilligerContext rctx(rook, 0);
  EXPECT_TRUE(full_algebra(rctx).triply_regular);
  EXPECT_TRUE(combinatorial_triple_regularity(rook));
}

TEST(TerwilligerTest, CensusGuard) {
  EXPECT_THROW(combinatorial_triple_regularity(build_from_spec(SchemeSpec({2, 2, 2, 2, 2, 3, 3}))),
               GuardError);
}

TEST(TerwilligerTest, ReversedOrderKeepsDimension) {
  // Relabelling relations permutes the generators, so dim T is unchanged.
  const AssociationScheme s = build_from_spec(SchemeSpec({2, 3, 2}));
  const AssociationScheme r = relabel_relations(s, {0, 3, 2, 1});
  EXPECT_EQ(full_algebra(TerwilligerContext(r, 0)).dim(),
            full_algebra(TerwilligerContext(s, 0)).dim());
  EXPECT_EQ(full_algebra(TerwilligerContext(reverse_relation_order(s), 0)).dim(),
            predicted_dim(SchemeSpec({2, 3, 2})));
}

// Property: the wreath schemes are vertex-transitive, so dim T does not
// depend on the base point.
TEST(TerwilligerPropertyTest, DimensionIsBasePointInvariant) {
  std::mt19937_64 rng(31);
  for (const auto& f : std::vector<std::vector<int>>{{2, 3}, {3, 3}, {2, 2, 3}, {3, 2, 2}, {3, 4, 3}}) {
    const SchemeSpec spec(f);
    const AssociationScheme s = build_from_spec(spec);
    ASSERT_LE(s.order(), 36);
    for (int trial = 0; trial < 3; ++trial) {
      const Index x = static_cast<Index>(rng() % s.order());
      const TerwilligerContext ctx(s, x);
      ASSERT_EQ(full_algebra(ctx).dim(), predicted_dim(spec)) << spec.to_string() << " x=" << x;
      ASSERT_EQ(nonzero_triple_products(ctx).size(), predicted_nonzero_triples(spec).size());
    }
  }
}

// Property: shuffling vertex labels does not change the algebra up to
// conjugation, so its dimension and triple regularity are preserved.
TEST(TerwilligerPropertyTest, DimensionIsVertexRelabelInvariant) {
  std::mt19937_64 rng(37);
  const AssociationScheme s = build_from_spec(SchemeSpec({3, 2, 2}));
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<Index> order(s.order());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    const AssociationScheme p = permute_vertices(s, order);
    const TerwilligerAlgebra a = full_algebra(TerwilligerContext(p, 0));
    ASSERT_EQ(a.dim(), 20);
    ASSERT_TRUE(a.triply_regular);
  }
}

}  // namespace
}  // namespace twalg
