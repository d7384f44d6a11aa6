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

#include "twalg/acceptance.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "twalg/cli.hpp"
#include "twalg/scheme_io.hpp"

namespace twalg {
namespace {

// Outcome of one criterion body: failures collected as text.
class Tally {
 public:
  void Expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < kMaxReported) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  void Note(const std::string& text) { notes_.push_back(text); }

  bool passed() const { return failed_ == 0; }
  std::string Detail() const {
    std::ostringstream out;
    out << checks_ - failed_ << "/" << checks_ << " checks";
    for (const std::string& n : notes_) out << "; " << n;
    if (failed_ > 0) {
      out << "; failing:";
      for (const std::string& f : failures_) out << " [" << f << "]";
      if (failed_ > static_cast<int>(failures_.size())) out << " ...";
    }
    return out.str();
  }

 private:
  static constexpr std::size_t kMaxReported = 8;
  int checks_ = 0;
  int failed_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

std::vector<SchemeSpec> SmallFamily() {
  return enumerate_specs(1, 3, {2, 3, 4});
}

// Every factor sequence with n_i >= 2 and product at most max_order.
std::vector<SchemeSpec> SpecsUpToOrder(std::int64_t max_order) {
  std::vector<SchemeSpec> out;
  std::vector<int> current;
  std::function<void(std::int64_t)> extend = [&](std::int64_t order) {
    for (int n = 2; order * n <= max_order; ++n) {
      current.push_back(n);
      out.emplace_back(current);
      extend(order * n);
      current.pop_back();
    }
  };
  extend(1);
  return out;
}

// Cayley graph on Z_4 x Z_4 as a 2-class scheme (0, adjacent, other).
AssociationScheme CayleyZ4Squared(const std::vector<std::pair<int, int>>& connection) {
  IntMatrix table = IntMatrix::Constant(16, 16, 2);
  for (int a = 0; a < 16; ++a) {
    table(a, a) = 0;
    for (const auto& [dx, dy] : connection) {
      const int b = ((a / 4 + dx + 4) % 4) * 4 + (a % 4 + dy + 4) % 4;
      table(a, b) = 1;
    }
  }
  return AssociationScheme::from_relation_table(table);
}

std::string Summary(Index top, Index ones) {
  std::string s = "M" + std::to_string(top);
  if (ones == 1) s += "+M1";
  if (ones > 1) s += "+M1^" + std::to_string(ones);
  return s;
}

void RelationTable(Tally& t) {
  // Rows and columns ordered a_1 + 2 a_2 + 4 a_3.
  const int printed[12][12] = {
      {0, 1, 2, 2, 3, 3, 3, 3, 3, 3, 3, 3}, {1, 0, 2, 2, 3, 3, 3, 3, 3, 3, 3, 3},
      {2, 2, 0, 1, 3, 3, 3, 3, 3, 3, 3, 3}, {2, 2, 1, 0, 3, 3, 3, 3, 3, 3, 3, 3},
      {3, 3, 3, 3, 0, 1, 2, 2, 3, 3, 3, 3}, {3, 3, 3, 3, 1, 0, 2, 2, 3, 3, 3, 3},
      {3, 3, 3, 3, 2, 2, 0, 1, 3, 3, 3, 3}, {3, 3, 3, 3, 2, 2, 1, 0, 3, 3, 3, 3},
      {3, 3, 3, 3, 3, 3, 3, 3, 0, 1, 2, 2}, {3, 3, 3, 3, 3, 3, 3, 3, 1, 0, 2, 2},
      {3, 3, 3, 3, 3, 3, 3, 3, 2, 2, 0, 1}, {3, 3, 3, 3, 3, 3, 3, 3, 2, 2, 1, 0}};
  const AssociationScheme s = build_from_spec(SchemeSpec({2, 2, 3}));
  t.Expect(s.order() == 12, "order 12");
  const IntMatrix& r = s.relations();
  int mismatches = 0;
  for (int x = 0; x < 12; ++x) {
    for (int y = 0; y < 12; ++y) mismatches += r(x, y) != printed[x][y];
  }
  t.Expect(mismatches == 0, std::to_string(mismatches) + " entries differ");
  const AssociationScheme folded =
      wreath(wreath(complete_scheme(2), complete_scheme(2)), complete_scheme(3));
  t.Expect(folded.relations() == r, "wreath fold differs from build_from_spec");
  t.Expect(validate(s).passed, "table is a valid scheme");
}

void IntersectionNumbers(Tally& t) {
  int specs = 0;
  for (const SchemeSpec& spec : SmallFamily()) {
    const AssociationScheme s = build_from_spec(spec);
    const IntersectionTensor census = intersection_numbers(s, IntersectionMethod::kCensus);
    t.Expect(census == closed_form_intersection_numbers(spec),
             spec.to_string() + " census != closed form");
    t.Expect(census == intersection_numbers(s, IntersectionMethod::kAlgebraic),
             spec.to_string() + " census != algebraic");
    ++specs;
  }
  t.Note(std::to_string(specs) + " specs");
}

void TripleVanishing(Tally& t) {
  for (const SchemeSpec& spec : SmallFamily()) {
    const TerwilligerContext ctx(build_from_spec(spec), 0);
    const IntersectionTensor p = intersection_numbers(ctx.scheme());
    const int d = spec.classes();
    bool exact = true;
    for (int i = 0; i <= d; ++i) {
      for (int j = 0; j <= d; ++j) {
        for (int h = 0; h <= d; ++h) {
          exact &= is_zero_matrix(ctx.triple(i, j, h)) == (p(h, i, j) == 0);
        }
      }
    }
    t.Expect(exact, spec.to_string() + " zero pattern != p^h_ij pattern");
    t.Expect(nonzero_triple_products(ctx) == predicted_nonzero_triples(spec),
             spec.to_string() + " nonzero set != five families");
  }
}

void DimFormula(Tally& t) {
  std::vector<SchemeSpec> specs = SmallFamily();
  for (int d = 4; d <= 5; ++d) specs.emplace_back(std::vector<int>(d, 2));
  specs.emplace_back(std::vector<int>(4, 3));
  for (const SchemeSpec& spec : specs) {
    const TerwilligerContext ctx(build_from_spec(spec), 0);
    const Index dim = full_algebra(ctx).dim();
    t.Expect(dim == predicted_dim(spec), spec.to_string() + " dim T " + std::to_string(dim) +
                                             " != predicted " +
                                             std::to_string(predicted_dim(spec)));
  }
  const std::pair<std::vector<int>, Index> headline[] = {
      {{3, 3}, 12}, {{4, 4}, 12}, {{3}, 5}, {{2}, 4}};
  for (const auto& [f, expected] : headline) {
    const TerwilligerContext ctx(build_from_spec(SchemeSpec(f)), 0);
    t.Expect(full_algebra(ctx).dim() == expected,
             SchemeSpec(f).to_string() + " dim T != " + std::to_string(expected));
  }
  t.Note(std::to_string(specs.size()) + " specs");
}

void TripleRegularity(Tally& t) {
  const std::vector<SchemeSpec> specs = SpecsUpToOrder(64);
  for (const SchemeSpec& spec : specs) {
    const AssociationScheme s = build_from_spec(spec);
    const TerwilligerContext ctx(s, 0);
    const TerwilligerAlgebra a = full_algebra(ctx);
    const std::string name = spec.to_string();
    t.Expect(a.triply_regular, name + " dim T != dim T0");
    t.Expect(munemasa_check(ctx, a.t0), name + " A_i E*_j A_h outside T0");
    t.Expect(combinatorial_triple_regularity(s), name + " census not triply regular");
  }
  t.Note(std::to_string(specs.size()) + " specs of order <= 64");

  // Same parameters, opposite answers: the detector is not vacuous.
  const AssociationScheme shrikhande =
      CayleyZ4Squared({{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}});
  const AssociationScheme rook = CayleyZ4Squared(
      {{1, 0}, {2, 0}, {3, 0}, {0, 1}, {0, 2}, {0, 3}});
  const TerwilligerContext sctx(shrikhande, 0);
  const TerwilligerAlgebra sa = full_algebra(sctx);
  t.Expect(!combinatorial_triple_regularity(shrikhande), "Shrikhande census regular");
  t.Expect(!sa.triply_regular && !munemasa_check(sctx, sa.t0),
           "Shrikhande algebra reported triply regular");
  const TerwilligerContext rctx(rook, 0);
  const TerwilligerAlgebra ra = full_algebra(rctx);
  t.Expect(combinatorial_triple_regularity(rook) && ra.triply_regular &&
               munemasa_check(rctx, ra.t0),
           "4x4 rook graph not triply regular");
  t.Note("Shrikhande dim T0/T = " + std::to_string(sa.t0.dim()) + "/" +
         std::to_string(sa.dim()));
}

void Wedderburn(Tally& t, std::uint64_t seed) {
  std::vector<std::pair<SchemeSpec, std::string>> cases = {
      {SchemeSpec({3}), "M2+M1"},        {SchemeSpec({4}), "M2+M1"},
      {SchemeSpec({3, 3}), "M3+M1^3"},   {SchemeSpec({4, 4}), "M3+M1^3"},
      {SchemeSpec({3, 3, 3}), "M4+M1^6"}, {SchemeSpec({4, 4, 4}), "M4+M1^6"}};
  for (int d = 1; d <= 5; ++d) {
    cases.emplace_back(SchemeSpec(std::vector<int>(d, 2)), Summary(d + 1, d * (d - 1) / 2));
  }
  for (const auto& [spec, expected] : cases) {
    const TerwilligerContext ctx(build_from_spec(spec), 0);
    const AlgebraDecomposition dec = decompose(ctx, seed);
    Index squares = 0, weighted = 0;
    for (const WedderburnBlock& b : dec.profile.blocks) {
      squares += b.dim * b.dim;
      weighted += b.dim * b.mult;
    }
    const std::string name = spec.to_string();
    t.Expect(dec.profile.summary() == expected,
             name + " profile " + dec.profile.summary() + " != " + expected);
    t.Expect(squares == dec.algebra.dim(), name + " sum d^2 != dim T");
    t.Expect(weighted == ctx.order(), name + " sum d mult != n");
  }
}

void K2Family(Tally& t) {
  for (int d = 2; d <= 5; ++d) {
    const std::string name = "d=" + std::to_string(d);
    try {
      const K2VectorFamily probe = k2_vector_family(d);
      const TerwilligerContext ctx(probe.scheme, 0);
      const MatrixAlgebraSpan algebra = full_algebra(ctx).t;
      const auto classes = k2_isomorphism_classes(probe, algebra);
      t.Expect(static_cast<int>(classes.size()) == d * (d - 1) / 2,
               name + " " + std::to_string(classes.size()) + " classes");
      t.Expect(static_cast<Index>(probe.vectors.size()) == (Index{1} << d) - d - 1,
               name + " family size");
    } catch (const VerificationError& e) {
      t.Expect(false, name + " deviation: " + e.what());
    }
  }
}

void WreathSquare(Tally& t) {
  for (int m = 2; m <= 4; ++m) {
    const WreathSquareReport r = wreath_square_analysis(m);
    const std::string name = "m=" + std::to_string(m);
    t.Expect(r.blocks_match, name + " block forms");
    t.Expect(r.eigenmatrix_matches, name + " P, Q");
    t.Expect(r.b2_spectrum_matches, name + " B_2 spectrum");
    t.Expect(r.restricted_mapping_ok, name + " restricted eigenvector mapping");
    t.Expect(r.primary_dim == 3 && r.primary_irreducible, name + " primary module");
    t.Expect(r.lines_invariant && r.spans_v && r.ok(), name + " module count");
  }
}

void ProductIdentities(Tally& t) {
  int instances = 0;
  int corrected_failures = 0;
  for (const SchemeSpec& spec :
       {SchemeSpec({2, 2, 3}), SchemeSpec({3, 2, 2}), SchemeSpec({3, 3, 3})}) {
    const TerwilligerContext ctx(build_from_spec(spec), 0);
    const IdentityReport report = verify_product_identities(ctx, spec);
    for (const IdentityInstance& r : report.instances) {
      t.Expect(r.holds, spec.to_string() + ": " + r.identity + " " + r.instance);
      if (!r.corrected_holds.value_or(r.holds)) ++corrected_failures;
    }
    instances += static_cast<int>(report.instances.size());
  }
  t.Note(std::to_string(instances) + " instances; corrected right-hand sides " +
         (corrected_failures == 0 ? "hold everywhere"
                                  : "fail " + std::to_string(corrected_failures) + " times"));
}

void Robustness(Tally& t) {
  const AssociationScheme base = build_from_spec(SchemeSpec({2, 3}));
  auto expect_axiom = [&](const AssociationScheme& s, Axiom axiom, const std::string& label) {
    const ValidationReport r = validate(s);
    t.Expect(!r.passed && r.failed_axiom == axiom,
             label + " reported " + (r.passed ? "valid" : r.message()));
  };
  auto corrupt = [&](std::initializer_list<std::tuple<int, int, int>> edits) {
    IntMatrix table = base.relations();
    for (const auto& [x, y, v] : edits) table(x, y) = v;
    return AssociationScheme::from_relation_table(table);
  };
  expect_axiom(corrupt({{0, 0, 1}}), Axiom::kIdentity, "nonzero diagonal");
  expect_axiom(corrupt({{0, 1, 2}}), Axiom::kSymmetry, "asymmetric entry");
  expect_axiom(corrupt({{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 0, 1}}), Axiom::kProductClosure,
               "irregular relation");
  {
    std::vector<RationalMatrix> a = base.adjacency();
    a[2](0, 1) = a[2](1, 0) = Rational(1);
    expect_axiom(AssociationScheme(a), Axiom::kPartition, "overlapping relations");
    a = base.adjacency();
    a[1](0, 1) = Rational(2);
    expect_axiom(AssociationScheme(a), Axiom::kShape, "non 0/1 entry");
  }
  {
    nlohmann::json doc = scheme_to_json(base);
    doc["relation_table"][3][4] = 1;
    try {
      scheme_from_json(doc);
      t.Expect(false, "corrupted JSON accepted");
    } catch (const InvalidSchemeError& e) {
      t.Expect(std::string(e.what()).find("symmetry") != std::string::npos,
               std::string("JSON error does not name the axiom: ") + e.what());
    }
  }
  for (const char* text : {"K(1)", "K(2) wr K(1)", "K(0)^2"}) {
    bool rejected = false;
    try {
      parse_spec(text);
    } catch (const ParseError&) {
      rejected = true;
    }
    t.Expect(rejected, std::string(text) + " accepted by the parser");
  }
  {
    // Span of E11, E12, E21: a 3-dimensional ideal under the identity.
    MatrixAlgebraSpan truncated(2);
    for (const auto& [r, c] : {std::pair{0, 0}, std::pair{0, 1}, std::pair{1, 0}}) {
      RationalMatrix e = RationalMatrix::Zero(2, 2);
      e(r, c) = Rational(1);
      truncated.insert(e);
    }
    bool raised = false;
    try {
      wedderburn_profile(truncated, {RationalMatrix::Identity(2, 2)});
    } catch (const WedderburnError&) {
      raised = true;
    }
    t.Expect(raised, "truncated span accepted by wedderburn_profile");
  }
}

using Body = std::function<void(Tally&, std::uint64_t)>;

const std::map<std::string, Body>& Bodies() {
  static const std::map<std::string, Body> bodies = {
      {"relation-table", [](Tally& t, std::uint64_t) { RelationTable(t); }},
      {"intersection-numbers", [](Tally& t, std::uint64_t) { IntersectionNumbers(t); }},
      {"triple-vanishing", [](Tally& t, std::uint64_t) { TripleVanishing(t); }},
      {"dim-formula", [](Tally& t, std::uint64_t) { DimFormula(t); }},
      {"triple-regularity", [](Tally& t, std::uint64_t) { TripleRegularity(t); }},
      {"wedderburn", Wedderburn},
      {"k2-family", [](Tally& t, std::uint64_t) { K2Family(t); }},
      {"wreath-square", [](Tally& t, std::uint64_t) { WreathSquare(t); }},
      {"product-identities", [](Tally& t, std::uint64_t) { ProductIdentities(t); }},
      {"robustness", [](Tally& t, std::uint64_t) { Robustness(t); }},
  };
  return bodies;
}

}  // namespace

const std::vector<std::string>& criterion_names() {
  static const std::vector<std::string> names = {
      "relation-table",    "intersection-numbers", "triple-vanishing", "dim-formula",
      "triple-regularity", "wedderburn",           "k2-family",        "wreath-square",
      "product-identities", "robustness"};
  return names;
}

CriterionResult run_criterion(const std::string& name, std::uint64_t seed) {
  const auto it = Bodies().find(name);
  if (it == Bodies().end()) throw std::invalid_argument("unknown criterion '" + name + "'");
  CriterionResult r{name, false, "", 0};
  const auto start = std::chrono::steady_clock::now();
  try {
    Tally tally;
    it->second(tally, seed);
    r.passed = tally.passed();
    r.detail = tally.Detail();
  } catch (const std::exception& e) {
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream out;
  out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << " ("
      << std::fixed << std::setprecision(2) << r.seconds << "s)";
  return out.str();
}

std::vector<CriterionResult> run_suite(const std::vector<std::string>& only,
                                       std::ostream& out, std::uint64_t seed) {
  const std::vector<std::string>& names = only.empty() ? criterion_names() : only;
  for (const std::string& n : names) {
    if (!Bodies().contains(n)) throw std::invalid_argument("unknown criterion '" + n + "'");
  }
  std::vector<CriterionResult> results;
  for (const std::string& n : names) {
    results.push_back(run_criterion(n, seed));
    out << format_result(results.back()) << std::endl;
  }
  return results;
}

}  // namespace twalg
