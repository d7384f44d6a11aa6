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

// One-dimensional modules of the Terwilliger algebra of (K_2)^{wr d}.
//
// In the reversed order R_1(x), R_2(x), ... follow the base vertex with
// sizes 2^{d-1}, 2^{d-2}, ..., 1. Every level-l window below has width 2^l
// and lies inside a single subconstituent, so it is orthogonal to E_i* 1.

#include <map>
#include <stdexcept>

#include "twalg/repdecomp.hpp"

namespace twalg {
namespace {

[[noreturn]] void Fail(int l, int i, const std::string& what) {
  throw VerificationError("k2 family: d^" + std::to_string(l) + "_" +
                          std::to_string(i) + " " + what);
}

Rational Dot(const RationalVector& a, const RationalVector& b) {
  Rational acc;
  for (Index k = 0; k < a.size(); ++k) {
    if (!a(k).is_zero() && !b(k).is_zero()) acc += a(k) * b(k);
  }
  return acc;
}

AssociationScheme ReversedK2Power(int d) {
  return reverse_relation_order(build_from_spec(SchemeSpec(std::vector<int>(d, 2))));
}

}  // namespace

K2VectorFamily k2_vector_family(int d, const MatrixAlgebraSpan& t) {
  if (d < 2) throw std::invalid_argument("k2 family needs d >= 2");
  if (d > kK2MaxClasses) {
    throw GuardError("k2 family: 2^" + std::to_string(d) + " vertices exceeds guard");
  }
  K2VectorFamily fam;
  fam.classes = d;
  fam.scheme = ReversedK2Power(d);
  const Index n = fam.scheme.order();
  if (t.order() != n) {
    throw DimensionError("k2 family: algebra order " + std::to_string(t.order()) +
                         " != " + std::to_string(n));
  }
  for (int i = 0; i <= d; ++i) {
    RationalVector v = RationalVector::Zero(n);
    for (Index y : fam.scheme.subconstituent(0, i)) v(y) = Rational(1);
    fam.primary_vectors.push_back(std::move(v));
  }

  const std::vector<RationalMatrix> basis = t.basis();
  for (int l = 1; l <= d - 1; ++l) {
    const Index width = Index{1} << l;
    const Index count = (Index{1} << (d - l)) - 1;
    for (Index i = 1; i <= count; ++i) {
      // 1-based label 2 + (i - 1) width is 0-based index 1 + (i - 1) width.
      const Index start = 1 + (i - 1) * width;
      RationalVector v = RationalVector::Zero(n);
      for (Index k = 0; k < width; ++k) {
        v(start + k) = Rational(k < width / 2 ? 1 : -1);
      }
      for (const RationalMatrix& b : basis) {
        if (!line_scalar(b, v)) Fail(l, static_cast<int>(i), "does not span a T-invariant line");
      }
      for (const RationalVector& p : fam.primary_vectors) {
        if (!Dot(v, p).is_zero()) Fail(l, static_cast<int>(i), "is not orthogonal to E_i* 1");
      }
      for (const K2Vector& u : fam.vectors) {
        if (!Dot(v, u.vector).is_zero()) {
          Fail(l, static_cast<int>(i),
               "is not orthogonal to d^" + std::to_string(u.level) + "_" +
                   std::to_string(u.position));
        }
      }
      fam.vectors.push_back({l, static_cast<int>(i), std::move(v)});
    }
  }
  // Pairwise orthogonal nonzero vectors; a basis iff there are n of them.
  const Index total = static_cast<Index>(fam.vectors.size() + fam.primary_vectors.size());
  if (total != n) {
    throw VerificationError("k2 family: " + std::to_string(total) +
                            " vectors do not span V of dimension " + std::to_string(n));
  }
  return fam;
}

K2VectorFamily k2_vector_family(int d) {
  if (d < 2) throw std::invalid_argument("k2 family needs d >= 2");
  if (d > kK2MaxClasses) {
    throw GuardError("k2 family: 2^" + std::to_string(d) + " vertices exceeds guard");
  }
  const TerwilligerContext ctx(ReversedK2Power(d), 0);
  return k2_vector_family(d, full_algebra(ctx).t);
}

std::vector<std::vector<std::size_t>> k2_isomorphism_classes(
    const K2VectorFamily& fam, const MatrixAlgebraSpan& t) {
  const std::vector<RationalMatrix> basis = t.basis();
  std::map<std::vector<Rational>, std::size_t> index;
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t k = 0; k < fam.vectors.size(); ++k) {
    std::vector<Rational> signature;
    signature.reserve(basis.size());
    for (const RationalMatrix& b : basis) {
      const auto c = line_scalar(b, fam.vectors[k].vector);
      if (!c) Fail(fam.vectors[k].level, fam.vectors[k].position, "is not an eigenvector");
      signature.push_back(*c);
    }
    const auto [it, fresh] = index.emplace(std::move(signature), classes.size());
    if (fresh) classes.emplace_back();
    classes[it->second].push_back(k);
  }
  return classes;
}

}  // namespace twalg
