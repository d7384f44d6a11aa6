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

#include <stdexcept>

namespace twalg {
namespace {

void Check(bool ok, const std::string& what) {
  if (!ok) throw VerificationError("terwilliger: " + what);
}

std::size_t GridOffset(int d, int i, int j, int h) {
  const auto w = static_cast<std::size_t>(d + 1);
  return (static_cast<std::size_t>(i) * w + j) * w + h;
}

}  // namespace

std::string to_string(const Triple& t) {
  return "(" + std::to_string(t.i) + "," + std::to_string(t.j) + "," +
         std::to_string(t.h) + ")";
}

TerwilligerContext::TerwilligerContext(AssociationScheme scheme, Index base_point)
    : scheme_(std::move(scheme)), base_(base_point) {
  const Index n = scheme_.order();
  const int d = scheme_.classes();
  if (base_ < 0 || base_ >= n) {
    throw std::out_of_range("base point " + std::to_string(base_) +
                            " outside [0, " + std::to_string(n) + ")");
  }
  eigen_ = eigenstructure(scheme_);
  const IntMatrix& rel = scheme_.relations();

  for (int i = 0; i <= d; ++i) subconstituents_.push_back(scheme_.subconstituent(base_, i));

  const Rational nr(static_cast<std::int64_t>(n));
  for (int i = 0; i <= d; ++i) {
    RationalMatrix e = RationalMatrix::Zero(n, n);
    for (Index y : subconstituents_[i]) e(y, y) = Rational(1);
    dual_idempotents_.push_back(std::move(e));
    RationalMatrix a = RationalMatrix::Zero(n, n);
    for (Index y = 0; y < n; ++y) a(y, y) = nr * eigen_.coefficients(i, rel(y, base_));
    dual_adjacencies_.push_back(std::move(a));
  }

  // Entry (y, z) of A_j lands in exactly one triple, the one indexed by
  // (R(x, y), R(y, z), R(x, z)).
  const std::size_t cells = static_cast<std::size_t>(d + 1) * (d + 1) * (d + 1);
  triples_.assign(cells, RationalMatrix::Zero(n, n));
  for (Index y = 0; y < n; ++y) {
    for (Index z = 0; z < n; ++z) {
      triples_[GridOffset(d, rel(base_, y), rel(y, z), rel(base_, z))](y, z) = Rational(1);
    }
  }

  // Dual-basis identities, compared on diagonals.
  for (Index y = 0; y < n; ++y) {
    Rational e_sum, a_sum;
    for (int i = 0; i <= d; ++i) {
      e_sum += dual_idempotents_[i](y, y);
      a_sum += dual_adjacencies_[i](y, y);
    }
    Check(e_sum.is_one(), "sum of E_i* is not I");
    Check(dual_adjacencies_[0](y, y).is_one(), "A_0* is not I");
    Check(a_sum == nr * dual_idempotents_[0](y, y), "sum of A_i* is not n E_0*");
    for (int i = 0; i <= d; ++i) {
      for (int j = 0; j <= d; ++j) {
        Rational rhs;
        for (int h = 0; h <= d; ++h) {
          rhs += eigen_.krein_parameter(h, i, j) * dual_adjacencies_[h](y, y);
        }
        Check(dual_adjacencies_[i](y, y) * dual_adjacencies_[j](y, y) == rhs,
              "A_i* A_j* != sum q^h_ij A_h*");
      }
    }
  }
}

const RationalMatrix& TerwilligerContext::triple(int i, int j, int h) const {
  const int d = classes();
  if (i < 0 || j < 0 || h < 0 || i > d || j > d || h > d) {
    throw std::out_of_range("triple index " + to_string(Triple{i, j, h}));
  }
  return triples_[GridOffset(d, i, j, h)];
}

std::vector<RationalMatrix> TerwilligerContext::generators() const {
  std::vector<RationalMatrix> out = scheme_.adjacency();
  out.insert(out.end(), dual_idempotents_.begin(), dual_idempotents_.end());
  return out;
}

TerwilligerContext make_context(const AssociationScheme& s, Index x) {
  return TerwilligerContext(s, x);
}

std::set<Triple> nonzero_triple_products(const TerwilligerContext& ctx) {
  std::set<Triple> out;
  const int d = ctx.classes();
  for (int i = 0; i <= d; ++i) {
    for (int j = 0; j <= d; ++j) {
      for (int h = 0; h <= d; ++h) {
        if (!is_zero_matrix(ctx.triple(i, j, h))) out.insert({i, j, h});
      }
    }
  }
  return out;
}

std::set<Triple> predicted_nonzero_triples(const SchemeSpec& spec) {
  const int d = spec.classes();
  std::set<Triple> out;
  for (int i = 0; i <= d; ++i) out.insert({i, i, 0});
  for (int h = 1; h <= d; ++h) {
    if (spec.factor(h) >= 3) out.insert({h, h, h});
  }
  for (int h = 1; h <= d; ++h) {
    for (int j = h + 1; j <= d; ++j) out.insert({j, j, h});
  }
  for (int h = 0; h <= d; ++h) {
    for (int j = 0; j < h; ++j) {
      out.insert({j, h, h});
      out.insert({h, j, h});
    }
  }
  return out;
}

MatrixAlgebraSpan t0_span(const TerwilligerContext& ctx) {
  MatrixAlgebraSpan span(ctx.order());
  for (const Triple& t : nonzero_triple_products(ctx)) {
    Check(span.insert(ctx.triple(t.i, t.j, t.h)),
          "triple product " + to_string(t) + " depends on earlier ones");
  }
  return span;
}

TerwilligerAlgebra full_algebra(const TerwilligerContext& ctx) {
  TerwilligerAlgebra out;
  out.generators = ctx.generators();
  out.t0 = t0_span(ctx);
  out.t = multiplicative_closure(out.generators);
  for (const RationalMatrix& b : out.t0.basis()) {
    Check(out.t.contains(b), "T0 is not contained in T");
  }
  out.triply_regular = out.t0.dim() == out.t.dim();
  return out;
}

Index predicted_dim(const SchemeSpec& spec) {
  const Index d = spec.classes();
  return (d + 1) * (d + 1) + d * (d + 1) / 2 - spec.k2_count();
}

bool munemasa_check(const TerwilligerContext& ctx, const MatrixAlgebraSpan& t0) {
  const int d = ctx.classes();
  const AssociationScheme& s = ctx.scheme();
  for (int i = 0; i <= d; ++i) {
    for (int j = 0; j <= d; ++j) {
      const RationalMatrix left = multiply(s.adjacency(i), ctx.dual_idempotent(j));
      for (int h = 0; h <= d; ++h) {
        if (!t0.contains(multiply(left, s.adjacency(h)))) return false;
      }
    }
  }
  return true;
}

bool combinatorial_triple_regularity(const AssociationScheme& s) {
  const Index n = s.order();
  if (n > kCensusOrderGuard) {
    throw GuardError("triple census: order " + std::to_string(n) + " exceeds " +
                     std::to_string(kCensusOrderGuard));
  }
  const int d = s.classes();
  const IntMatrix& rel = s.relations();
  const std::size_t w = static_cast<std::size_t>(d + 1);
  const std::size_t cube = w * w * w;
  // reference[key] holds the count table first seen for that key.
  std::vector<std::vector<Index>> reference(cube);
  std::vector<Index> counts(cube);
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      for (Index z = 0; z < n; ++z) {
        std::fill(counts.begin(), counts.end(), Index{0});
        for (Index u = 0; u < n; ++u) {
          ++counts[(rel(x, u) * w + rel(y, u)) * w + rel(z, u)];
        }
        std::vector<Index>& ref = reference[(rel(x, y) * w + rel(x, z)) * w + rel(y, z)];
        if (ref.empty()) {
          ref = counts;
        } else if (ref != counts) {
          return false;
        }
      }
    }
  }
  return true;
}

bool IdentityReport::all_hold() const {
  for (const IdentityInstance& r : instances) {
    if (!r.holds) return false;
  }
  return true;
}

bool IdentityReport::all_corrected_hold() const {
  for (const IdentityInstance& r : instances) {
    if (!r.corrected_holds.value_or(r.holds)) return false;
  }
  return true;
}

std::vector<IdentityInstance> IdentityReport::failures() const {
  std::vector<IdentityInstance> out;
  for (const IdentityInstance& r : instances) {
    if (!r.holds) out.push_back(r);
  }
  return out;
}

}  // namespace twalg
