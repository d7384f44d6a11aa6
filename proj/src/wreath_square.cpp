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

// Subconstituent blocks of (K_m)^{wr 2} with R_1(x) the m(m-1) vertices in
// other copies and R_2(x) the m-1 vertices in the base copy.

#include <map>
#include <stdexcept>

#include "twalg/polynomial.hpp"
#include "twalg/repdecomp.hpp"

namespace twalg {
namespace {

RationalMatrix Block(const RationalMatrix& a, Index r0, Index rows, Index c0, Index cols) {
  return a.block(r0, c0, rows, cols);
}

RationalMatrix Ones(Index rows, Index cols) {
  return RationalMatrix::Constant(rows, cols, Rational(1));
}

RationalMatrix Eye(Index n) { return RationalMatrix::Identity(n, n); }

std::vector<EigenspaceData> Eigenspaces(const RationalMatrix& b) {
  const Index n = b.rows();
  std::vector<EigenspaceData> out;
  for (const Rational& theta : rational_eigenvalues(b)) {
    const RationalMatrix shifted = b - theta * Eye(n);
    RationalMatrix system(n + 1, n);
    system.topRows(n) = shifted;
    system.row(n) = Ones(1, n);
    out.push_back({theta, n - rank(shifted), nullspace(system)});
  }
  return out;
}

// Pads a block vector into V at the given offset.
RationalVector Embed(const RationalMatrix& col, Index offset, Index n) {
  RationalVector v = RationalVector::Zero(n);
  for (Index k = 0; k < col.rows(); ++k) v(offset + k) = col(k, 0);
  return v;
}

}  // namespace

bool WreathSquareReport::ok() const {
  const Index mm = m;
  return blocks_match && eigenmatrix_matches && b2_spectrum_matches &&
         restricted_mapping_ok && lines_invariant && primary_dim == 3 &&
         primary_irreducible && e1_lines == mm * (mm - 1) - 1 && e2_lines == mm - 2 &&
         spans_v && total_dim() == mm * mm;
}

WreathSquareReport wreath_square_analysis(int m) {
  if (m < 2) throw std::invalid_argument("wreath square needs m >= 2");
  const Index mm = m;
  const Index big = mm * (mm - 1);
  const Index small = mm - 1;
  const Index n = mm * mm;
  const AssociationScheme s =
      reverse_relation_order(build_from_spec(SchemeSpec(std::vector<int>{m, m})));
  const TerwilligerContext ctx(s, 0);

  WreathSquareReport out;
  out.m = m;
  SubconstituentBlocks& blk = out.blocks;
  const RationalMatrix& a1 = s.adjacency(1);
  const RationalMatrix& a2 = s.adjacency(2);
  blk.b2 = Block(a1, 1, big, 1, big);
  blk.l = Block(a1, 1, big, 1 + big, small);
  blk.b1 = Block(a1, 1 + big, small, 1 + big, small);
  blk.c2 = Block(a2, 1, big, 1, big);
  blk.n = Block(a2, 1, big, 1 + big, small);
  blk.c1 = Block(a2, 1 + big, small, 1 + big, small);

  const RationalMatrix jm = Ones(mm, mm);
  out.blocks_match =
      blk.b2 == RationalMatrix(Ones(big, big) - kron(Eye(small), jm)) &&
      blk.c2 == kron(Eye(small), RationalMatrix(jm - Eye(mm))) &&
      blk.c1 == RationalMatrix(Ones(small, small) - Eye(small)) &&
      blk.l == Ones(big, small) && is_zero_matrix(blk.n) && is_zero_matrix(blk.b1) &&
      Block(a1, 0, 1, 1, big) == Ones(1, big) && is_zero_matrix(Block(a1, 0, 1, 1 + big, small)) &&
      Block(a2, 0, 1, 1 + big, small) == Ones(1, small) && is_zero_matrix(Block(a2, 0, 1, 1, big));

  const Rational r(m);
  RationalMatrix p(3, 3);
  p << Rational(1), r * (r - Rational(1)), r - Rational(1),  //
      Rational(1), Rational(0), Rational(-1),                //
      Rational(1), -r, r - Rational(1);
  out.eigenmatrix_matches = ctx.eigen().first == p && ctx.eigen().second == p;

  blk.b2_eigen = Eigenspaces(blk.b2);
  blk.b1_eigen = Eigenspaces(blk.b1);
  std::map<Rational, Index> expected;
  const std::pair<Rational, Index> spectrum[] = {
      {r * (r - Rational(2)), 1}, {-r, mm - 2}, {Rational(0), (mm - 1) * (mm - 1)}};
  for (const auto& [value, mult] : spectrum) {
    if (mult > 0) expected[value] += mult;
  }
  std::map<Rational, Index> computed;
  for (const EigenspaceData& e : blk.b2_eigen) computed[e.value] = e.multiplicity;
  out.b2_spectrum_matches = expected == computed;

  // L^T y = 0 iff theta in {0, -m}; L L^T y = -theta (theta + m) y.
  out.restricted_mapping_ok = true;
  const RationalMatrix lt = blk.l.transpose();
  const RationalMatrix llt = multiply(blk.l, lt);
  for (const EigenspaceData& e : blk.b2_eigen) {
    const bool special = e.value.is_zero() || e.value == -r;
    for (Index k = 0; k < e.restricted.cols(); ++k) {
      const RationalMatrix y = e.restricted.col(k);
      const bool kills = is_zero_matrix(multiply(lt, y));
      const RationalMatrix expect = -e.value * (e.value + r) * y;
      if (kills != special || multiply(llt, y) != expect) out.restricted_mapping_ok = false;
    }
  }

  const AlgebraDecomposition dec = decompose(ctx);
  const PrimaryModuleReport primary = verify_primary_module(ctx, dec.profile);
  out.primary_dim = primary.dim;
  out.primary_irreducible = primary.irreducible();

  // Every restricted vector spans a T-invariant line.
  const std::vector<RationalMatrix> basis = dec.algebra.t.basis();
  RowEchelon<Rational> span(n);
  for (int i = 0; i <= 2; ++i) {
    RationalVector v = RationalVector::Zero(n);
    for (Index y : s.subconstituent(0, i)) v(y) = Rational(1);
    span.insert(std::span<const Rational>(v.data(), n));
  }
  out.lines_invariant = true;
  auto add_lines = [&](const std::vector<EigenspaceData>& eigen, Index offset, Index& count) {
    for (const EigenspaceData& e : eigen) {
      for (Index k = 0; k < e.restricted.cols(); ++k) {
        const RationalVector v = Embed(e.restricted.col(k), offset, n);
        for (const RationalMatrix& b : basis) {
          if (!line_scalar(b, v)) out.lines_invariant = false;
        }
        span.insert(std::span<const Rational>(v.data(), n));
        ++count;
      }
    }
  };
  add_lines(blk.b2_eigen, 1, out.e1_lines);
  add_lines(blk.b1_eigen, 1 + big, out.e2_lines);
  out.spans_v = span.rank() == n;
  return out;
}

}  // namespace twalg
