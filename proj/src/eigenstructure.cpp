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

// Primitive idempotents of the Bose-Mesner algebra, computed in coefficient
// space: an element sum_h c_h A_h is the vector c, and products use p^h_ij.

#include <algorithm>
#include <numeric>

#include "twalg/polynomial.hpp"
#include "twalg/scheme.hpp"

namespace twalg {
namespace {

using Coeffs = std::vector<Rational>;

class BoseMesner {
 public:
  explicit BoseMesner(IntersectionTensor p) : p_(std::move(p)), d_(p_.classes()) {}

  int classes() const { return d_; }

  Coeffs unit(int j) const {
    Coeffs c(d_ + 1);
    c[j] = Rational(1);
    return c;
  }

  Coeffs product(const Coeffs& a, const Coeffs& b) const {
    Coeffs out(d_ + 1);
    for (int i = 0; i <= d_; ++i) {
      if (a[i].is_zero()) continue;
      for (int j = 0; j <= d_; ++j) {
        if (b[j].is_zero()) continue;
        const Rational ab = a[i] * b[j];
        for (int h = 0; h <= d_; ++h) {
          const std::int64_t c = p_(h, i, j);
          if (c != 0) out[h] += ab * Rational(c);
        }
      }
    }
    return out;
  }

  // Matrix of left multiplication by A_j: column i holds A_j A_i.
  RationalMatrix regular(int j) const {
    RationalMatrix m(d_ + 1, d_ + 1);
    for (int h = 0; h <= d_; ++h) {
      for (int i = 0; i <= d_; ++i) m(h, i) = Rational(p_(h, j, i));
    }
    return m;
  }

 private:
  IntersectionTensor p_;
  int d_;
};

bool IsZero(const Coeffs& c) {
  return std::all_of(c.begin(), c.end(), [](const Rational& r) { return r.is_zero(); });
}

Coeffs Sub(Coeffs a, const Coeffs& b, const Rational& scale) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] -= scale * b[k];
  return a;
}

void Check(bool ok, const std::string& what) {
  if (!ok) throw VerificationError("eigenstructure: " + what);
}

}  // namespace

Eigenstructure eigenstructure(const AssociationScheme& s) {
  const int d = s.classes();
  const Index n = s.order();
  const BoseMesner bm(intersection_numbers(s));

  // Refine {I} by the spectral projectors of each A_j.
  std::vector<Coeffs> parts{bm.unit(0)};
  for (int j = 1; j <= d; ++j) {
    const std::vector<Rational> theta = rational_eigenvalues(bm.regular(j));
    std::vector<Coeffs> projectors;
    for (std::size_t a = 0; a < theta.size(); ++a) {
      Coeffs e = bm.unit(0);
      for (std::size_t b = 0; b < theta.size(); ++b) {
        if (a == b) continue;
        // e <- e (A_j - theta_b I) / (theta_a - theta_b)
        e = Sub(bm.product(e, bm.unit(j)), e, theta[b]);
        const Rational inv = (theta[a] - theta[b]).inverse();
        for (Rational& c : e) c *= inv;
      }
      projectors.push_back(std::move(e));
    }
    std::vector<Coeffs> refined;
    for (const Coeffs& e : parts) {
      for (const Coeffs& f : projectors) {
        Coeffs g = bm.product(e, f);
        if (!IsZero(g)) refined.push_back(std::move(g));
      }
    }
    parts = std::move(refined);
  }
  Check(static_cast<int>(parts.size()) == d + 1,
        "found " + std::to_string(parts.size()) + " idempotents, expected " +
            std::to_string(d + 1));

  // Eigenvalue rows p_j(e) from A_j e = p_j e.
  std::vector<std::vector<Rational>> rows(parts.size());
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const Coeffs& e = parts[k];
    const auto lead = std::find_if(e.begin(), e.end(),
                                   [](const Rational& r) { return !r.is_zero(); }) -
                      e.begin();
    rows[k].push_back(Rational(1));
    for (int j = 1; j <= d; ++j) {
      const Coeffs g = bm.product(bm.unit(j), e);
      const Rational theta = g[lead] / e[lead];
      Check(IsZero(Sub(g, e, theta)), "A_j E_i is not a multiple of E_i");
      rows[k].push_back(theta);
    }
  }
  std::vector<std::size_t> order(parts.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(rows[b].begin() + 1, rows[b].end(),
                                        rows[a].begin() + 1, rows[a].end());
  });

  Eigenstructure out;
  out.coefficients = RationalMatrix(d + 1, d + 1);
  out.first = RationalMatrix(d + 1, d + 1);
  for (int i = 0; i <= d; ++i) {
    const std::size_t k = order[i];
    for (int h = 0; h <= d; ++h) {
      out.coefficients(i, h) = parts[k][h];
      out.first(i, h) = rows[k][h];
    }
  }
  const Rational nr(static_cast<std::int64_t>(n));
  out.second = RationalMatrix(d + 1, d + 1);
  for (int i = 0; i <= d; ++i) {
    for (int j = 0; j <= d; ++j) out.second(i, j) = nr * out.coefficients(j, i);
  }

  // Exact identities, in coefficient space where the A_h are a basis.
  Coeffs total(d + 1);
  for (int i = 0; i <= d; ++i) {
    for (int h = 0; h <= d; ++h) total[h] += out.coefficients(i, h);
  }
  Check(total == bm.unit(0), "sum of E_i is not I");
  for (int i = 0; i <= d; ++i) {
    const Coeffs ei(out.coefficients.row(i).begin(), out.coefficients.row(i).end());
    for (int j = 0; j <= d; ++j) {
      const Coeffs ej(out.coefficients.row(j).begin(), out.coefficients.row(j).end());
      const Coeffs prod = bm.product(ei, ej);
      Check(i == j ? prod == ei : IsZero(prod), "E_i E_j != delta_ij E_i");
    }
  }
  Check(multiply(out.first, out.second) == nr * RationalMatrix::Identity(d + 1, d + 1),
        "P Q != n I");

  for (int i = 0; i <= d; ++i) {
    const Rational m = nr * out.coefficients(i, 0);
    Check(m.is_integer() && m.sign() > 0, "multiplicity " + m.to_string());
    out.multiplicities.push_back(m.to_int64());
  }
  Check(std::accumulate(out.multiplicities.begin(), out.multiplicities.end(),
                        Index{0}) == n,
        "multiplicities do not sum to n");

  // E_i o E_j = sum_a c_ia c_ja A_a and A_a = sum_h P(h, a) E_h.
  out.krein.assign(static_cast<std::size_t>(d + 1) * (d + 1) * (d + 1), Rational());
  for (int h = 0; h <= d; ++h) {
    for (int i = 0; i <= d; ++i) {
      for (int j = 0; j <= d; ++j) {
        Rational q;
        for (int a = 0; a <= d; ++a) {
          q += out.coefficients(i, a) * out.coefficients(j, a) * out.first(h, a);
        }
        q *= nr;
        Check(q.sign() >= 0, "negative Krein parameter " + q.to_string());
        out.krein[(static_cast<std::size_t>(h) * (d + 1) + i) * (d + 1) + j] = q;
      }
    }
  }

  out.idempotents.reserve(d + 1);
  for (int i = 0; i <= d; ++i) {
    RationalMatrix e = RationalMatrix::Zero(n, n);
    for (int h = 0; h <= d; ++h) {
      if (!out.coefficients(i, h).is_zero()) e += out.coefficients(i, h) * s.adjacency(h);
    }
    out.idempotents.push_back(std::move(e));
  }
  return out;
}

}  // namespace twalg
