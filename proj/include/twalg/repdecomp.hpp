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

// Wedderburn decomposition of a split semisimple matrix algebra given as a
// span, and the explicit module constructions for wreath powers.

#ifndef TWALG_REPDECOMP_HPP_
#define TWALG_REPDECOMP_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twalg/exactla.hpp"
#include "twalg/scheme.hpp"
#include "twalg/terwilliger.hpp"

namespace twalg {

struct CenterData {
  MatrixAlgebraSpan center_basis;
  // Empty until central_idempotents() runs.
  std::vector<RationalMatrix> central_idempotents;
};

// Elements of t commuting with every generator. The generators must
// generate t as an algebra, so this is the center of t.
CenterData center(const MatrixAlgebraSpan& t,
                  const std::vector<RationalMatrix>& generators);
CenterData center(const TerwilligerAlgebra& t);

inline constexpr int kCentralElementRetries = 8;

// Splits the center by a generic element z with coefficients drawn from
// {1, ..., 2 dim Z}; retries with the next seed while deg minpoly(z) falls
// short of dim Z. Throws NonSplitCenterError if z has a non-rational
// eigenvalue or every retry is deficient. Result idempotents are sorted by
// their row-major entries and verified: sum I, pairwise orthogonal, in t,
// commuting with the generators.
CenterData central_idempotents(CenterData c, const MatrixAlgebraSpan& t,
                               const std::vector<RationalMatrix>& generators,
                               std::uint64_t seed = 0);

struct WedderburnBlock {
  Index dim = 0;   // d_lambda; e_lambda T is isomorphic to M_d
  Index mult = 0;  // multiplicity in the standard module
  RationalMatrix idempotent;

  Index module_dim() const { return dim * mult; }
};

struct WedderburnProfile {
  // Sorted by dim descending, then mult descending, then idempotent entries.
  std::vector<WedderburnBlock> blocks;
  Index algebra_dim = 0;
  bool triply_regular = false;
  std::optional<std::string> conjecture_status;

  std::vector<Index> module_dims() const;
  // "M3+M1^3": one term per block dimension, exponent = block count.
  std::string summary() const;
};

// Throws WedderburnError if some dim(e T) is not a perfect square or
// rank(e) / d is not an integer, and VerificationError if the block
// dimensions do not account for dim t or the order.
WedderburnProfile wedderburn_profile(const MatrixAlgebraSpan& t,
                                     const std::vector<RationalMatrix>& idempotents);

// The whole pipeline for one base point.
struct AlgebraDecomposition {
  TerwilligerAlgebra algebra;
  CenterData center;
  WedderburnProfile profile;
};

AlgebraDecomposition decompose(const TerwilligerContext& ctx, std::uint64_t seed = 0);

struct PrimaryModuleReport {
  Index dim = 0;  // dim span{E_i* 1}
  bool invariant = false;
  // Block whose idempotent fixes 1; zero when none does.
  Index block_dim = 0;
  Index block_mult = 0;

  bool irreducible() const { return invariant && block_dim == dim && block_mult == 1; }
};

PrimaryModuleReport verify_primary_module(const TerwilligerContext& ctx,
                                          const WedderburnProfile& profile);

struct IsotypicComponent {
  Index dim = 0;
  Index mult = 0;
  RationalMatrix basis;  // column basis of e V
};

// Asserts e symmetric, rank e = d mult and pairwise orthogonal components;
// throws VerificationError otherwise.
std::vector<IsotypicComponent> decompose_standard_module(
    const WedderburnProfile& profile);

struct ConjectureReport {
  SchemeSpec spec;
  WedderburnProfile profile;
  bool primary_block_ok = false;      // block fixing 1 has dim d + 1
  bool nonprimary_all_one = false;    // every other block has dim 1

  bool consistent() const { return primary_block_ok && nonprimary_all_one; }
  // "CONJECTURE consistent" or "CONJECTURE violated".
  std::string status() const;
};

// Reads the conjecture off an already computed profile.
ConjectureReport evaluate_module_conjecture(const SchemeSpec& spec,
                                            WedderburnProfile profile);

// Checks, without asserting it, that every non-primary irreducible module
// of a wreath product of complete schemes is one-dimensional.
ConjectureReport general_wreath_module_conjecture(const SchemeSpec& spec,
                                                  std::uint64_t seed = 0);

// Vectors for (K_2)^{wr d} in the reversed relation order, where R_1(x) is
// the largest subconstituent. With 1-based vertex labels, d_i^l is +1 on
// the 2^{l-1} vertices from 2 + (i - 1) 2^l and -1 on the next 2^{l-1}.
struct K2Vector {
  int level = 0;
  int position = 0;
  RationalVector vector;
};

struct K2VectorFamily {
  int classes = 0;
  AssociationScheme scheme;  // reversed order, base vertex 0
  std::vector<K2Vector> vectors;
  std::vector<RationalVector> primary_vectors;  // E_i* 1
};

inline constexpr int kK2MaxClasses = 12;  // 2^d <= 4096

// Validates every vector: each spans a T-invariant line and the family plus
// the primary vectors is an orthogonal basis of V. Throws VerificationError
// naming (l, i) on the first violation, std::invalid_argument for d < 2
// and GuardError above kK2MaxClasses.
K2VectorFamily k2_vector_family(int d, const MatrixAlgebraSpan& t);
K2VectorFamily k2_vector_family(int d);

// Classes of T-isomorphic lines, by equality of the scalars that each
// basis element of t acts by. Classes hold indices into fam.vectors.
std::vector<std::vector<std::size_t>> k2_isomorphism_classes(
    const K2VectorFamily& fam, const MatrixAlgebraSpan& t);

// Scalar by which m acts on the line spanned by v; nullopt if v is not an
// eigenvector of m.
std::optional<Rational> line_scalar(const RationalMatrix& m, const RationalVector& v);

struct EigenspaceData {
  Rational value;
  Index multiplicity = 0;
  RationalMatrix restricted;  // columns: eigenspace intersected with 1-perp
};

struct SubconstituentBlocks {
  // A_1 = [[0, 1^T, 0], [1, B_2, L], [0, L^T, B_1]] and
  // A_2 = [[0, 0, 1^T], [0, C_2, N], [1, N^T, C_1]].
  RationalMatrix b2, b1, l, n, c2, c1;
  std::vector<EigenspaceData> b2_eigen;
  std::vector<EigenspaceData> b1_eigen;
};

struct WreathSquareReport {
  int m = 0;
  SubconstituentBlocks blocks;
  bool blocks_match = false;        // closed forms of all six blocks
  bool eigenmatrix_matches = false; // P = Q = [[1,m(m-1),m-1],[1,0,-1],[1,-m,m-1]]
  bool b2_spectrum_matches = false; // m(m-2), -m, 0 with 1, m-2, (m-1)^2
  bool restricted_mapping_ok = false;
  bool lines_invariant = false;
  Index primary_dim = 0;
  bool primary_irreducible = false;
  Index e1_lines = 0;  // one-dimensional modules inside E_1* V
  Index e2_lines = 0;  // one-dimensional modules inside E_2* V
  bool spans_v = false;

  Index total_dim() const { return primary_dim + e1_lines + e2_lines; }
  bool ok() const;
};

// (K_m)^{wr 2} in the reversed relation order. Throws std::invalid_argument
// for m < 2.
WreathSquareReport wreath_square_analysis(int m);

}  // namespace twalg

#endif  // TWALG_REPDECOMP_HPP_
