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


#include "twalg/scheme.hpp"

#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "twalg/scheme_io.hpp"

namespace twalg {
namespace {

std::vector<SchemeSpec> SmallSpecs() {
  return {SchemeSpec({2}),       SchemeSpec({5}),       SchemeSpec({2, 3}),
          SchemeSpec({3, 2}),    SchemeSpec({3, 3}),    SchemeSpec({2, 2, 3}),
          SchemeSpec({3, 2, 4}), SchemeSpec({2, 2, 2, 2})};
}

IntMatrix Table(const std::vector<std::vector<int>>& rows) {
  IntMatrix t(rows.size(), rows.size());
  for (std::size_t x = 0; x < rows.size(); ++x) {
    for (std::size_t y = 0; y < rows.size(); ++y) t(x, y) = rows[x][y];
  }
  return t;
}

TEST(SchemeSpecTest, OrderPrefixAndName) {
  const SchemeSpec s({3, 2, 4});
  EXPECT_EQ(s.order(), 24);
  EXPECT_EQ(s.prefix_order(1), 1);
  EXPECT_EQ(s.prefix_order(3), 6);
  EXPECT_EQ(s.k2_count(), 1);
  EXPECT_EQ(s.to_string(), "K(3) wr K(2) wr K(4)");
  EXPECT_THROW(SchemeSpec(std::vector<int>{}), std::invalid_argument);
  EXPECT_THROW(SchemeSpec({3, 1}), std::invalid_argument);
}

TEST(SchemeTest, CompleteSchemeIsValid) {
  const AssociationScheme k = complete_scheme(4);
  EXPECT_EQ(k.order(), 4);
  EXPECT_EQ(k.classes(), 1);
  EXPECT_TRUE(validate(k).passed);
  EXPECT_THROW(complete_scheme(1), std::invalid_argument);
}

TEST(SchemeTest, BaseSubconstituentsAreIndexRanges) {
  const SchemeSpec spec({2, 2, 3});
  const AssociationScheme s = build_from_spec(spec);
  for (int i = 1; i <= spec.classes(); ++i) {
    std::vector<Index> expected(spec.prefix_order(i) * (spec.factor(i) - 1));
    std::iota(expected.begin(), expected.end(), spec.prefix_order(i));
    EXPECT_EQ(s.subconstituent(0, i), expected) << "i=" << i;
  }
}

TEST(SchemeTest, BuildMatchesExplicitWreathFold) {
  const AssociationScheme folded = wreath(wreath(complete_scheme(2), complete_scheme(2)),
                                          complete_scheme(3));
  EXPECT_EQ(folded.relations(), build_from_spec(SchemeSpec({2, 2, 3})).relations());
}

TEST(SchemeTest, SmallWreathTable) {
  // K(2) wr K(2): vertices 0,1 form one K(2) block.
  const IntMatrix expected = Table({{0, 1, 2, 2}, {1, 0, 2, 2}, {2, 2, 0, 1}, {2, 2, 1, 0}});
  EXPECT_EQ(build_from_spec(SchemeSpec({2, 2})).relations(), expected);
}

TEST(SchemeTest, ValidatorNamesEachAxiom) {
  const IntMatrix good = build_from_spec(SchemeSpec({2, 3})).relations();

  IntMatrix t = good;
  t(0, 0) = 1;
  auto r = validate(AssociationScheme::from_relation_table(t));
  ASSERT_FALSE(r.passed);
  EXPECT_EQ(r.failed_axiom, Axiom::kIdentity);

  t = good;
  t(0, 1) = 2;
  r = validate(AssociationScheme::from_relation_table(t));
  ASSERT_FALSE(r.passed);
  EXPECT_EQ(r.failed_axiom, Axiom::kSymmetry);
  EXPECT_NE(r.message().find("symmetry"), std::string::npos);

  // A symmetric 2-class relation on 5 points that is not distance-regular:
  // the path 0-1-2-3-4 plus its complement.
  IntMatrix p = IntMatrix::Constant(5, 5, 2);
  for (Index x = 0; x < 5; ++x) p(x, x) = 0;
  for (Index x = 0; x + 1 < 5; ++x) p(x, x + 1) = p(x + 1, x) = 1;
  r = validate(AssociationScheme::from_relation_table(p));
  ASSERT_FALSE(r.passed);
  EXPECT_EQ(r.failed_axiom, Axiom::kProductClosure);

  std::vector<RationalMatrix> overlap = build_from_spec(SchemeSpec({2, 3})).adjacency();
  overlap[1](0, 2) = 1;
  r = validate(AssociationScheme(overlap));
  ASSERT_FALSE(r.passed);
  EXPECT_EQ(r.failed_axiom, Axiom::kPartition);
  EXPECT_THROW(require_valid(AssociationScheme(overlap)), InvalidSchemeError);

  std::vector<RationalMatrix> shape = build_from_spec(SchemeSpec({2, 3})).adjacency();
  shape[1](1, 0) = 2;
  r = validate(AssociationScheme(shape));
  ASSERT_FALSE(r.passed);
  EXPECT_EQ(r.failed_axiom, Axiom::kShape);
}

TEST(SchemeTest, RelationTableRejectsMalformedInput) {
  EXPECT_THROW(AssociationScheme::from_relation_table(IntMatrix::Zero(2, 3)), InvalidSchemeError);
  IntMatrix neg = IntMatrix::Zero(2, 2);
  neg(0, 1) = -1;
  EXPECT_THROW(AssociationScheme::from_relation_table(neg), InvalidSchemeError);
}

TEST(SchemeTest, IntersectionNumbersMatchClosedForm) {
  for (const SchemeSpec& spec : SmallSpecs()) {
    const AssociationScheme s = build_from_spec(spec);
    const IntersectionTensor census = intersection_numbers(s, IntersectionMethod::kCensus);
    EXPECT_EQ(census, intersection_numbers(s, IntersectionMethod::kAlgebraic)) << spec.to_string();
    EXPECT_EQ(census, closed_form_intersection_numbers(spec)) << spec.to_string();
  }
}

TEST(SchemeTest, ValenciesOfWreath) {
  // k_i = (n_i - 1) n_1 ... n_{i-1}.
  EXPECT_EQ(valencies(build_from_spec(SchemeSpec({3, 2, 4}))),
            (std::vector<std::int64_t>{1, 2, 3, 18}));
}

TEST(SchemeTest, RelabelAndPermuteRoundTrip) {
  const AssociationScheme s = build_from_spec(SchemeSpec({2, 3}));
  EXPECT_THROW(relabel_relations(s, {1, 0, 2}), std::invalid_argument);
  const AssociationScheme swapped = relabel_relations(s, {0, 2, 1});
  EXPECT_EQ(relabel_relations(swapped, {0, 2, 1}).relations(), s.relations());
  EXPECT_TRUE(validate(swapped).passed);

  std::vector<Index> order(s.order());
  std::iota(order.begin(), order.end(), 0);
  std::reverse(order.begin(), order.end());
  const AssociationScheme flipped = permute_vertices(s, order);
  EXPECT_EQ(permute_vertices(flipped, order).relations(), s.relations());
  EXPECT_THROW(permute_vertices(s, {0, 1}), std::invalid_argument);
}

TEST(SchemeTest, ReverseOrderPutsLargestSubconstituentFirst) {
  const AssociationScheme r = reverse_relation_order(build_from_spec(SchemeSpec({2, 2, 2})));
  EXPECT_TRUE(validate(r).passed);
  EXPECT_EQ(valencies(r), (std::vector<std::int64_t>{1, 4, 2, 1}));
  // Vertices sorted by relation to base.
  for (Index y = 1; y < r.order(); ++y) EXPECT_LE(r.relation(0, y - 1), r.relation(0, y));
}

TEST(SchemeIoTest, JsonRoundTrip) {
  const AssociationScheme s = build_from_spec(SchemeSpec({3, 2}));
  const nlohmann::json doc = scheme_to_json(s);
  EXPECT_EQ(doc["order"], 6);
  EXPECT_EQ(doc["classes"], 2);
  EXPECT_EQ(scheme_from_json(doc).relations(), s.relations());
  EXPECT_EQ(scheme_to_json(scheme_from_json(doc)).dump(), doc.dump());
}

TEST(SchemeIoTest, CorruptJsonNamesAxiom) {
  nlohmann::json doc = scheme_to_json(build_from_spec(SchemeSpec({2, 3})));
  doc["relation_table"][0][1] = 2;
  try {
    scheme_from_json(doc);
    FAIL() << "accepted an asymmetric table";
  } catch (const InvalidSchemeError& e) {
    EXPECT_NE(std::string(e.what()).find("symmetry"), std::string::npos) << e.what();
  }
  doc = scheme_to_json(build_from_spec(SchemeSpec({2, 3})));
  doc["relation_table"].erase(0);
  EXPECT_THROW(scheme_from_json(doc), InvalidSchemeError);
  EXPECT_THROW(scheme_from_json(nlohmann::json::array()), InvalidSchemeError);
}

TEST(SchemeIoTest, CsvLayout) {
  const AssociationScheme s = build_from_spec(SchemeSpec({2}));
  EXPECT_EQ(relation_table_csv(s), "0,1\n1,0\n");
  EXPECT_EQ(relation_table_csv(s, true), "v0,v1\n0,1\n1,0\n");
}

// Property: a random vertex relabelling of a valid scheme stays valid and
// keeps its intersection numbers.
TEST(SchemePropertyTest, VertexRelabellingPreservesParameters) {
  std::mt19937_64 rng(29);
  for (const SchemeSpec& spec : SmallSpecs()) {
    const AssociationScheme s = build_from_spec(spec);
    std::vector<Index> order(s.order());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    const AssociationScheme p = permute_vertices(s, order);
    ASSERT_TRUE(validate(p).passed) << spec.to_string();
    ASSERT_EQ(intersection_numbers(p), intersection_numbers(s)) << spec.to_string();
  }
}

}  // namespace
}  // namespace twalg
