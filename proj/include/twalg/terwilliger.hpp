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

// Dual idempotents, triple products E_i* A_j E_h*, the span T0 of the
// triple products, and the Terwilliger algebra T generated by the A_i and
// the E_i* at a base vertex.

#ifndef TWALG_TERWILLIGER_HPP_
#define TWALG_TERWILLIGER_HPP_

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "twalg/exactla.hpp"
#include "twalg/scheme.hpp"

namespace twalg {

struct Triple {
  int i = 0;
  int j = 0;
  int h = 0;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

std::string to_string(const Triple& t);

class TerwilligerContext {
 public:
  // Throws std::out_of_range for a bad base point and VerificationError if
  // a dual-basis identity fails.
  TerwilligerContext(AssociationScheme scheme, Index base_point);

  const AssociationScheme& scheme() const { return scheme_; }
  Index base_point() const { return base_; }
  Index order() const { return scheme_.order(); }
  int classes() const { return scheme_.classes(); }
  const Eigenstructure& eigen() const { return eigen_; }

  // Diagonal indicator of R_i(x).
  const RationalMatrix& dual_idempotent(int i) const { return dual_idempotents_[i]; }
  // Diagonal with (A_i*)_yy = n (E_i)_yx.
  const RationalMatrix& dual_adjacency(int i) const { return dual_adjacencies_[i]; }
  // E_i* A_j E_h*, obtained by masking A_j to rows R_i(x), columns R_h(x).
  const RationalMatrix& triple(int i, int j, int h) const;
  const std::vector<Index>& subconstituent(int i) const { return subconstituents_[i]; }
  // {A_0..A_d, E_0*..E_d*}.
  std::vector<RationalMatrix> generators() const;

 private:
  AssociationScheme scheme_;
  Index base_;
  Eigenstructure eigen_;
  std::vector<std::vector<Index>> subconstituents_;
  std::vector<RationalMatrix> dual_idempotents_;
  std::vector<RationalMatrix> dual_adjacencies_;
  std::vector<RationalMatrix> triples_;
};

TerwilligerContext make_context(const AssociationScheme& s, Index x);

std::set<Triple> nonzero_triple_products(const TerwilligerContext& ctx);

// Union of the five nonzero families for K(n_1) wr ... wr K(n_d):
// (i, i, 0); (h, h, h) iff n_h >= 3; (j, j, h) for 1 <= h < j;
// (j, h, h) for 0 <= j < h; (h, j, h) for 0 <= j < h.
std::set<Triple> predicted_nonzero_triples(const SchemeSpec& spec);

// Throws VerificationError if the nonzero triple products are dependent.
MatrixAlgebraSpan t0_span(const TerwilligerContext& ctx);

struct TerwilligerAlgebra {
  MatrixAlgebraSpan t0;
  MatrixAlgebraSpan t;
  std::vector<RationalMatrix> generators;
  bool triply_regular = false;

  Index dim() const { return t.dim(); }
};

// Closure of {A_i} and {E_i*}; verifies t0 inside t.
TerwilligerAlgebra full_algebra(const TerwilligerContext& ctx);

// (d+1)^2 + d(d+1)/2 - b with b the number of K(2) factors.
Index predicted_dim(const SchemeSpec& spec);

// A_i E_j* A_h in t0 for every (i, j, h).
bool munemasa_check(const TerwilligerContext& ctx, const MatrixAlgebraSpan& t0);

inline constexpr Index kCensusOrderGuard = 256;

// |R_i(x) n R_j(y) n R_h(z)| depends only on (i, j, h) and the relations
// among x, y, z. Throws GuardError above kCensusOrderGuard vertices.
bool combinatorial_triple_regularity(const AssociationScheme& s);

struct IdentityInstance {
  std::string identity;  // formula shape, e.g. "A_h E*_h A_h"
  std::string instance;  // bound indices, e.g. "i=1 h=3"
  bool holds = false;
  // Set when a corrected right-hand side is also evaluated.
  std::optional<bool> corrected_holds;
};

struct IdentityReport {
  std::vector<IdentityInstance> instances;

  bool all_hold() const;
  bool all_corrected_hold() const;
  std::vector<IdentityInstance> failures() const;
};

// Evaluates both sides of each product identity of the wreath-product
// family (restriction of A_i E_h* to subconstituents, and the expansions
// of A_i E_h* A_j in triple products) for every admissible (i, j, h).
// ctx must be build_from_spec(spec) at base point 0.
IdentityReport verify_product_identities(const TerwilligerContext& ctx,
                                         const SchemeSpec& spec);

}  // namespace twalg

#endif  // TWALG_TERWILLIGER_HPP_
