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

// Product identities for A_i E_h* and A_i E_h* A_j in a wreath product of
// complete schemes, each checked by evaluating both sides exactly.
//
// Notation: k_i is the valency (k_0 = 1), N_h = n_1 ... n_h, and
// Block(L, H) = sum_{l in L, m, n in H} E_l* A_m E_n*, the 0/1 mask with
// rows in the union of R_l(x) and columns in the union of R_n(x).
//
// Several of the stated expansions of A_i E_h* A_j omit terms supported on
// E_h* V x E_h* V. Each such instance is reported as failing, and a
// corrected right-hand side derived from the block structure is evaluated
// alongside it in corrected_holds.

#include <functional>

#include "twalg/terwilliger.hpp"

namespace twalg {
namespace {

class Evaluator {
 public:
  Evaluator(const TerwilligerContext& ctx, const SchemeSpec& spec)
      : ctx_(ctx), spec_(spec), d_(spec.classes()), n_(ctx.order()) {}

  int classes() const { return d_; }

  const RationalMatrix& A(int i) const { return ctx_.scheme().adjacency(i); }
  const RationalMatrix& Es(int h) const { return ctx_.dual_idempotent(h); }
  const RationalMatrix& T(int i, int j, int h) const { return ctx_.triple(i, j, h); }

  Rational k(int i) const {
    if (i == 0) return Rational(1);
    return Rational((spec_.factor(i) - 1) * spec_.prefix_order(i));
  }
  // N_{h-1}.
  Rational prefix(int h) const { return Rational(spec_.prefix_order(h)); }
  Rational n(int h) const { return Rational(spec_.factor(h)); }

  // Block over relation index ranges [l_lo, l_hi] x [h_lo, h_hi].
  RationalMatrix Block(int l_lo, int l_hi, int h_lo, int h_hi) const {
    const IntMatrix& rel = ctx_.scheme().relations();
    const Index x = ctx_.base_point();
    RationalMatrix out = RationalMatrix::Zero(n_, n_);
    for (Index y = 0; y < n_; ++y) {
      const int ry = rel(x, y);
      if (ry < l_lo || ry > l_hi) continue;
      for (Index z = 0; z < n_; ++z) {
        const int rz = rel(x, z);
        if (rz >= h_lo && rz <= h_hi) out(y, z) = Rational(1);
      }
    }
    return out;
  }

  RationalMatrix Product(int i, int h, int j) const {
    return multiply(multiply(A(i), Es(h)), A(j));
  }

 private:
  const TerwilligerContext& ctx_;
  const SchemeSpec& spec_;
  int d_;
  Index n_;
};

std::string Bind(std::initializer_list<std::pair<const char*, int>> values) {
  std::string out;
  for (const auto& [name, v] : values) {
    if (!out.empty()) out += ' ';
    out += std::string(name) + "=" + std::to_string(v);
  }
  return out;
}

}  // namespace

IdentityReport verify_product_identities(const TerwilligerContext& ctx,
                                         const SchemeSpec& spec) {
  if (ctx.classes() != spec.classes() || ctx.order() != spec.order()) {
    throw DimensionError("verify_product_identities: context does not match " +
                         spec.to_string());
  }
  const Evaluator ev(ctx, spec);
  const int d = ev.classes();
  IdentityReport report;
  auto record = [&](std::string name, std::string instance, const RationalMatrix& lhs,
                    const RationalMatrix& rhs,
                    const std::optional<RationalMatrix>& corrected = std::nullopt) {
    IdentityInstance r{std::move(name), std::move(instance), lhs == rhs, std::nullopt};
    if (corrected) r.corrected_holds = lhs == *corrected;
    report.instances.push_back(std::move(r));
  };

  // Restrictions of A_i E_h* and E_h* A_i.
  for (int h = 0; h <= d; ++h) {
    record("A_h E*_h = sum_{j<=h} E*_j A_h E*_h", Bind({{"h", h}}),
           multiply(ev.A(h), ev.Es(h)), [&] {
             RationalMatrix s = RationalMatrix::Zero(ctx.order(), ctx.order());
             for (int j = 0; j <= h; ++j) s += ev.T(j, h, h);
             return s;
           }());
    record("E*_h A_h = sum_{j<=h} E*_h A_h E*_j", Bind({{"h", h}}),
           multiply(ev.Es(h), ev.A(h)), [&] {
             RationalMatrix s = RationalMatrix::Zero(ctx.order(), ctx.order());
             for (int j = 0; j <= h; ++j) s += ev.T(h, h, j);
             return s;
           }());
    for (int i = 0; i <= d; ++i) {
      if (i == h) continue;
      const auto at = Bind({{"i", i}, {"h", h}});
      if (i < h) {
        record("A_i E*_h = E*_h A_i E*_h (i<h)", at, multiply(ev.A(i), ev.Es(h)),
               ev.T(h, i, h));
        record("E*_h A_i = E*_h A_i E*_h (i<h)", at, multiply(ev.Es(h), ev.A(i)),
               ev.T(h, i, h));
      } else {
        record("A_i E*_h = E*_i A_i E*_h (i>h)", at, multiply(ev.A(i), ev.Es(h)),
               ev.T(i, i, h));
        record("E*_h A_i = E*_h A_i E*_i (i>h)", at, multiply(ev.Es(h), ev.A(i)),
               ev.T(h, i, i));
      }
    }
  }
  for (int i = 0; i <= d; ++i) {
    for (int h = 0; h <= d; ++h) {
      const RationalMatrix ae = multiply(ev.A(i), ev.Es(h));
      for (int j = 0; j <= d; ++j) {
        record("A_i E*_h A_j = (A_i E*_h)(E*_h A_j)",
               Bind({{"i", i}, {"j", j}, {"h", h}}), multiply(ae, ev.A(j)),
               multiply(ae, multiply(ev.Es(h), ev.A(j))));
      }
    }
  }

  // Expansions with a repeated index; the middle index is at least 2.
  for (int h = 2; h <= d; ++h) {
    const Rational nh = ev.n(h);
    const Rational big = (nh - Rational(2)) * ev.prefix(h);
    {
      const RationalMatrix literal =
          ev.k(h) * ev.Block(0, h - 1, 0, h - 1) +
          big * (ev.Block(h, h, 0, h - 1) + ev.Block(0, h, h, h));
      record("A_h E*_h A_h", Bind({{"h", h}}), ev.Product(h, h, h), literal,
             RationalMatrix(literal - ev.prefix(h) * ev.T(h, h, h)));
    }
    for (int j = h + 1; j <= d; ++j) {
      record("A_h E*_h A_j (j>h)", Bind({{"j", j}, {"h", h}}), ev.Product(h, h, j),
             ev.k(h) * ev.Block(0, h - 1, j, j) + big * ev.Block(h, h, j, j));
      record("A_i E*_h A_h (i>h)", Bind({{"i", j}, {"h", h}}), ev.Product(j, h, h),
             ev.k(h) * ev.Block(j, j, 0, h - 1) + big * ev.Block(j, j, h, h));
      record("A_i E*_h A_i (i>h)", Bind({{"i", j}, {"h", h}}), ev.Product(j, h, j),
             ev.k(h) * ev.Block(j, j, j, j));
    }
    for (int j = 0; j < h; ++j) {
      // Coefficient k_j; at j = 0 the stated product formula is read as k_0 = 1.
      const RationalMatrix lower = ev.Block(0, h - 1, h, h);
      const RationalMatrix upper = ev.Block(h, h, 0, h - 1);
      if (j >= 2) {
        record("A_h E*_h A_j (j<h)", Bind({{"j", j}, {"h", h}}), ev.Product(h, h, j),
               ev.k(j) * lower, RationalMatrix(ev.k(j) * (lower + ev.T(h, h, h))));
      }
      record("A_i E*_h A_h (i<h)", Bind({{"i", j}, {"h", h}}), ev.Product(j, h, h),
             ev.k(j) * upper, RationalMatrix(ev.k(j) * (upper + ev.T(h, h, h))));
      if (j >= 2) {
        RationalMatrix corrected =
            (ev.n(j) - Rational(2)) * ev.prefix(j) * ev.T(h, j, h);
        for (int g = 0; g < j; ++g) corrected += ev.k(j) * ev.T(h, g, h);
        record("A_i E*_h A_i (i<h)", Bind({{"i", j}, {"h", h}}), ev.Product(j, h, j),
               ev.k(j) * ev.Block(h, h, h, h), corrected);
      }
    }
  }

  // Pairwise distinct indices.
  for (int i = 0; i <= d; ++i) {
    for (int j = 0; j <= d; ++j) {
      for (int h = 0; h <= d; ++h) {
        if (i == j || j == h || i == h) continue;
        const auto at = Bind({{"i", i}, {"j", j}, {"h", h}});
        const RationalMatrix lhs = ev.Product(i, h, j);
        if (i > h && j > h) {
          record("A_i E*_h A_j (h<i, h<j)", at, lhs, ev.k(h) * ev.Block(i, i, j, j));
        } else if (i < h && h < j) {
          record("A_i E*_h A_j (i<h<j)", at, lhs, ev.k(i) * ev.Block(h, h, j, j));
        } else if (i > h && h > j) {
          record("A_i E*_h A_j (j<h<i)", at, lhs, ev.k(j) * ev.Block(i, i, h, h));
        } else if (i < j) {
          record("A_i E*_h A_j (i<j<h)", at, lhs, ev.k(i) * ev.T(h, j, h));
        } else {
          record("A_i E*_h A_j (j<i<h)", at, lhs, ev.k(j) * ev.T(h, i, h));
        }
      }
    }
  }
  return report;
}

}  // namespace twalg
