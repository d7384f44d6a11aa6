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

#include <algorithm>
#include <map>
#include <random>

#include "twalg/polynomial.hpp"

namespace twalg {
namespace {

void Check(bool ok, const std::string& what) {
  if (!ok) throw VerificationError("repdecomp: " + what);
}

RationalMatrix Commutator(const RationalMatrix& a, const RationalMatrix& b) {
  return multiply(a, b) - multiply(b, a);
}

bool EntriesLess(const RationalMatrix& a, const RationalMatrix& b) {
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(),
                                      b.data() + b.size());
}

Index IntegerSqrt(Index v) {
  Index r = 0;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

RationalVector Ones(Index n) { return RationalVector::Constant(n, Rational(1)); }

RationalVector Apply(const RationalMatrix& m, const RationalVector& v) {
  RationalVector out = RationalVector::Zero(m.rows());
  for (Index i = 0; i < m.rows(); ++i) {
    Rational acc;
    for (Index j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_zero() && !v(j).is_zero()) acc += m(i, j) * v(j);
    }
    out(i) = acc;
  }
  return out;
}

// Index of the block whose idempotent fixes the all-ones vector.
std::optional<std::size_t> PrimaryBlock(const WedderburnProfile& profile) {
  for (std::size_t k = 0; k < profile.blocks.size(); ++k) {
    const RationalMatrix& e = profile.blocks[k].idempotent;
    const RationalVector one = Ones(e.rows());
    if (Apply(e, one) == one) return k;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Rational> line_scalar(const RationalMatrix& m, const RationalVector& v) {
  const RationalVector w = Apply(m, v);
  Index lead = 0;
  while (lead < v.size() && v(lead).is_zero()) ++lead;
  if (lead == v.size()) return std::nullopt;
  const Rational c = w(lead) / v(lead);
  for (Index k = 0; k < v.size(); ++k) {
    if (w(k) != c * v(k)) return std::nullopt;
  }
  return c;
}

CenterData center(const MatrixAlgebraSpan& t,
                  const std::vector<RationalMatrix>& generators) {
  const std::vector<RationalMatrix> basis = t.basis();
  const Index dim = t.dim();
  // Row r of the system: coordinate r of [sum_k c_k B_k, g] vanishes.
  RowEchelon<Rational> equations(dim);
  for (const RationalMatrix& g : generators) {
    std::vector<std::vector<Rational>> coords;
    coords.reserve(dim);
    for (const RationalMatrix& b : basis) {
      auto c = t.coordinates(Commutator(b, g));
      Check(c.has_value(), "commutator with a generator leaves the algebra");
      coords.push_back(std::move(*c));
    }
    for (Index r = 0; r < dim; ++r) {
      std::vector<Rational> row(dim);
      for (Index k = 0; k < dim; ++k) row[k] = coords[k][r];
      equations.insert(std::move(row));
    }
  }
  CenterData out{MatrixAlgebraSpan(t.order()), {}};
  for (const std::vector<Rational>& x : equations.kernel()) {
    RationalMatrix z = RationalMatrix::Zero(t.order(), t.order());
    for (Index k = 0; k < dim; ++k) {
      if (!x[k].is_zero()) z += x[k] * basis[k];
    }
    out.center_basis.insert(z);
  }
  return out;
}

CenterData center(const TerwilligerAlgebra& t) { return center(t.t, t.generators); }

CenterData central_idempotents(CenterData c, const MatrixAlgebraSpan& t,
                               const std::vector<RationalMatrix>& generators,
                               std::uint64_t seed) {
  const Index n = t.order();
  const Index cdim = c.center_basis.dim();
  Check(cdim > 0, "empty center");
  const std::vector<RationalMatrix> zb = c.center_basis.basis();
  const RationalMatrix id = RationalMatrix::Identity(n, n);

  std::vector<RationalMatrix> idempotents;
  if (cdim == 1) {
    idempotents.push_back(id);
  } else {
    for (int attempt = 0; attempt < kCentralElementRetries && idempotents.empty();
         ++attempt) {
      std::mt19937_64 rng(seed + static_cast<std::uint64_t>(attempt));
      RationalMatrix z = RationalMatrix::Zero(n, n);
      for (const RationalMatrix& b : zb) {
        const auto r = static_cast<std::int64_t>(1 + rng() % (2 * cdim));
        z += Rational(r) * b;
      }
      std::vector<Rational> theta;
      try {
        theta = rational_eigenvalues(z);
      } catch (const IrrationalEigenvalueError& e) {
        throw NonSplitCenterError(std::string("central element: ") + e.what());
      } catch (const VerificationError& e) {
        throw NonSplitCenterError(std::string("central element: ") + e.what());
      }
      if (static_cast<Index>(theta.size()) < cdim) continue;
      for (std::size_t a = 0; a < theta.size(); ++a) {
        RationalMatrix e = id;
        for (std::size_t b = 0; b < theta.size(); ++b) {
          if (a == b) continue;
          RationalMatrix shifted = z - theta[b] * id;
          e = multiply(e, shifted) * (theta[a] - theta[b]).inverse();
        }
        idempotents.push_back(std::move(e));
      }
    }
    if (idempotents.empty()) {
      throw NonSplitCenterError("no central element with " + std::to_string(cdim) +
                                " distinct eigenvalues after " +
                                std::to_string(kCentralElementRetries) + " draws");
    }
  }
  std::sort(idempotents.begin(), idempotents.end(), EntriesLess);

  RationalMatrix total = RationalMatrix::Zero(n, n);
  for (std::size_t a = 0; a < idempotents.size(); ++a) {
    const RationalMatrix& e = idempotents[a];
    total += e;
    Check(t.contains(e), "central idempotent outside the algebra");
    for (const RationalMatrix& g : generators) {
      Check(is_zero_matrix(Commutator(e, g)), "central idempotent is not central");
    }
    for (std::size_t b = a; b < idempotents.size(); ++b) {
      const RationalMatrix p = multiply(e, idempotents[b]);
      Check(a == b ? p == e : is_zero_matrix(p), "e_a e_b != delta_ab e_a");
    }
  }
  Check(total == id, "central idempotents do not sum to I");
  c.central_idempotents = std::move(idempotents);
  return c;
}

std::vector<Index> WedderburnProfile::module_dims() const {
  std::vector<Index> out;
  for (const WedderburnBlock& b : blocks) out.push_back(b.module_dim());
  return out;
}

std::string WedderburnProfile::summary() const {
  std::string out;
  for (std::size_t k = 0; k < blocks.size();) {
    std::size_t e = k;
    while (e < blocks.size() && blocks[e].dim == blocks[k].dim) ++e;
    if (!out.empty()) out += '+';
    out += "M" + std::to_string(blocks[k].dim);
    if (e - k > 1) out += "^" + std::to_string(e - k);
    k = e;
  }
  return out;
}

WedderburnProfile wedderburn_profile(const MatrixAlgebraSpan& t,
                                     const std::vector<RationalMatrix>& idempotents) {
  const std::vector<RationalMatrix> basis = t.basis();
  WedderburnProfile out;
  Index rank_total = 0;
  for (const RationalMatrix& e : idempotents) {
    MatrixAlgebraSpan ideal(t.order());
    for (const RationalMatrix& b : basis) ideal.insert(multiply(e, b));
    const Index d = IntegerSqrt(ideal.dim());
    if (d * d != ideal.dim()) {
      throw WedderburnError("ideal e T has dimension " + std::to_string(ideal.dim()) +
                            ", not a perfect square");
    }
    const Index r = rank(e);
    if (d == 0 || r % d != 0) {
      throw WedderburnError("rank(e) = " + std::to_string(r) +
                            " is not a multiple of block dimension " + std::to_string(d));
    }
    out.blocks.push_back({d, r / d, e});
    out.algebra_dim += d * d;
    rank_total += r;
  }
  Check(out.algebra_dim == t.dim(), "sum of d^2 = " + std::to_string(out.algebra_dim) +
                                        " != dim T = " + std::to_string(t.dim()));
  Check(rank_total == t.order(), "sum of d mult != order");
  std::sort(out.blocks.begin(), out.blocks.end(),
            [](const WedderburnBlock& a, const WedderburnBlock& b) {
              if (a.dim != b.dim) return a.dim > b.dim;
              if (a.mult != b.mult) return a.mult > b.mult;
              return EntriesLess(a.idempotent, b.idempotent);
            });
  return out;
}

AlgebraDecomposition decompose(const TerwilligerContext& ctx, std::uint64_t seed) {
  AlgebraDecomposition out;
  out.algebra = full_algebra(ctx);
  out.center = central_idempotents(center(out.algebra), out.algebra.t,
                                   out.algebra.generators, seed);
  out.profile = wedderburn_profile(out.algebra.t, out.center.central_idempotents);
  out.profile.triply_regular = out.algebra.triply_regular;
  return out;
}

PrimaryModuleReport verify_primary_module(const TerwilligerContext& ctx,
                                          const WedderburnProfile& profile) {
  const Index n = ctx.order();
  const int d = ctx.classes();
  RowEchelon<Rational> span(n);
  std::vector<RationalVector> vectors;
  for (int i = 0; i <= d; ++i) {
    vectors.push_back(Apply(ctx.dual_idempotent(i), Ones(n)));
    span.insert(std::span<const Rational>(vectors.back().data(), n));
  }
  PrimaryModuleReport out;
  out.dim = span.rank();
  out.invariant = true;
  for (const RationalMatrix& g : ctx.generators()) {
    for (const RationalVector& v : vectors) {
      const RationalVector w = Apply(g, v);
      if (!span.contains(std::span<const Rational>(w.data(), n))) out.invariant = false;
    }
  }
  if (const auto k = PrimaryBlock(profile)) {
    out.block_dim = profile.blocks[*k].dim;
    out.block_mult = profile.blocks[*k].mult;
  }
  return out;
}

std::vector<IsotypicComponent> decompose_standard_module(
    const WedderburnProfile& profile) {
  std::vector<IsotypicComponent> out;
  for (const WedderburnBlock& b : profile.blocks) {
    const RationalMatrix& e = b.idempotent;
    Check(e == RationalMatrix(e.transpose()), "central idempotent is not symmetric");
    const RrefResult<Rational> r = rref(e);
    IsotypicComponent c{b.dim, b.mult, RationalMatrix(e.rows(), r.rank)};
    for (Index k = 0; k < r.rank; ++k) c.basis.col(k) = e.col(r.pivots[k]);
    Check(r.rank == b.module_dim(), "rank(e) != d mult");
    out.push_back(std::move(c));
  }
  for (std::size_t a = 0; a < out.size(); ++a) {
    for (std::size_t b = a + 1; b < out.size(); ++b) {
      Check(is_zero_matrix(multiply(RationalMatrix(out[a].basis.transpose()),
                                    out[b].basis)),
            "isotypic components are not orthogonal");
    }
  }
  return out;
}

std::string ConjectureReport::status() const {
  return consistent() ? "CONJECTURE consistent" : "CONJECTURE violated";
}

ConjectureReport evaluate_module_conjecture(const SchemeSpec& spec,
                                            WedderburnProfile profile) {
  ConjectureReport out{spec, std::move(profile), false, true};
  const auto primary = PrimaryBlock(out.profile);
  for (std::size_t k = 0; k < out.profile.blocks.size(); ++k) {
    const Index dim = out.profile.blocks[k].dim;
    if (primary && k == *primary) {
      out.primary_block_ok = dim == spec.classes() + 1;
    } else if (dim != 1) {
      out.nonprimary_all_one = false;
    }
  }
  out.profile.conjecture_status = out.status();
  return out;
}

ConjectureReport general_wreath_module_conjecture(const SchemeSpec& spec,
                                                  std::uint64_t seed) {
  const TerwilligerContext ctx(build_from_spec(spec), 0);
  return evaluate_module_conjecture(spec, decompose(ctx, seed).profile);
}

}  // namespace twalg
