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

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace twalg {
namespace {

std::string Entry(int i, Index x, Index y) {
  std::ostringstream os;
  os << "A_" << i << "(" << x << "," << y << ")";
  return os.str();
}

ValidationReport Fail(Axiom axiom, std::string witness) {
  ValidationReport r;
  r.passed = false;
  r.failed_axiom = axiom;
  r.witness = std::move(witness);
  return r;
}

// Relation table implied by 0/1 adjacency matrices that partition J, or an
// empty matrix if they do not.
IntMatrix DeriveRelations(const std::vector<RationalMatrix>& adjacency,
                          Index n) {
  IntMatrix table = IntMatrix::Constant(n, n, -1);
  for (std::size_t i = 0; i < adjacency.size(); ++i) {
    const RationalMatrix& a = adjacency[i];
    if (a.rows() != n || a.cols() != n) return IntMatrix();
    for (Index x = 0; x < n; ++x) {
      for (Index y = 0; y < n; ++y) {
        const Rational& v = a(x, y);
        if (v.is_zero()) continue;
        if (!v.is_one() || table(x, y) != -1) return IntMatrix();
        table(x, y) = static_cast<int>(i);
      }
    }
  }
  if ((table.array() < 0).any()) return IntMatrix();
  return table;
}

// For each relation h, the (d+1)^2 table of counts #{z : R(x,z) = i,
// R(z,y) = j} at the first pair (x, y) in R_h. Returns the first pair
// whose table disagrees with the reference of its relation.
struct Census {
  std::vector<std::vector<std::int64_t>> reference;
  std::optional<std::pair<Index, Index>> mismatch;
  int mismatch_i = 0;
  int mismatch_j = 0;
};

Census RunCensus(const IntMatrix& table, int d) {
  const Index n = table.rows();
  const int w = d + 1;
  Census c;
  c.reference.assign(w, {});
  std::vector<std::int64_t> counts(static_cast<std::size_t>(w) * w);
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      std::fill(counts.begin(), counts.end(), 0);
      for (Index z = 0; z < n; ++z) {
        ++counts[static_cast<std::size_t>(table(x, z)) * w + table(z, y)];
      }
      auto& ref = c.reference[table(x, y)];
      if (ref.empty()) {
        ref = counts;
        continue;
      }
      if (ref != counts) {
        const auto k = std::mismatch(ref.begin(), ref.end(), counts.begin())
                           .first - ref.begin();
        c.mismatch = {x, y};
        c.mismatch_i = static_cast<int>(k / w);
        c.mismatch_j = static_cast<int>(k % w);
        return c;
      }
    }
  }
  return c;
}

std::int64_t SaturatingProduct(const std::vector<int>& f, std::size_t count) {
  std::int64_t out = 1;
  for (std::size_t k = 0; k < count; ++k) {
    if (__builtin_mul_overflow(out, static_cast<std::int64_t>(f[k]), &out)) {
      return std::numeric_limits<std::int64_t>::max();
    }
  }
  return out;
}

}  // namespace

SchemeSpec::SchemeSpec(std::vector<int> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) {
    throw std::invalid_argument("SchemeSpec: empty factor list");
  }
  for (int n : factors_) {
    if (n < 2) {
      throw std::invalid_argument("SchemeSpec: factor K(" + std::to_string(n) +
                                  ") has fewer than 2 points");
    }
  }
}

std::int64_t SchemeSpec::order() const {
  return SaturatingProduct(factors_, factors_.size());
}

std::int64_t SchemeSpec::prefix_order(int i) const {
  return SaturatingProduct(factors_, static_cast<std::size_t>(i - 1));
}

int SchemeSpec::k2_count() const {
  return static_cast<int>(std::count(factors_.begin(), factors_.end(), 2));
}

std::string SchemeSpec::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    if (k > 0) out += " wr ";
    out += "K(" + std::to_string(factors_[k]) + ")";
  }
  return out;
}

std::string_view axiom_name(Axiom axiom) {
  switch (axiom) {
    case Axiom::kShape:
      return "shape";
    case Axiom::kIdentity:
      return "identity";
    case Axiom::kPartition:
      return "partition";
    case Axiom::kSymmetry:
      return "symmetry";
    case Axiom::kProductClosure:
      return "product-closure";
    case Axiom::kCommutativity:
      return "commutativity";
  }
  return "unknown";
}

std::string ValidationReport::message() const {
  if (passed) return "valid";
  return "axiom " + std::string(axiom_name(*failed_axiom)) + " fails at " +
         witness;
}

AssociationScheme::AssociationScheme(std::vector<RationalMatrix> adjacency,
                                     std::vector<std::string> labels)
    : adjacency_(std::move(adjacency)), labels_(std::move(labels)) {
  order_ = adjacency_.empty() ? 0 : adjacency_.front().rows();
  if (!labels_.empty() && static_cast<Index>(labels_.size()) != order_) {
    throw InvalidSchemeError("AssociationScheme: label count mismatch");
  }
  relations_ = DeriveRelations(adjacency_, order_);
}

AssociationScheme AssociationScheme::from_relation_table(
    const IntMatrix& table, std::vector<std::string> labels) {
  if (table.rows() != table.cols() || table.rows() == 0) {
    throw InvalidSchemeError("relation table must be square and nonempty");
  }
  if ((table.array() < 0).any()) {
    throw InvalidSchemeError("relation table has a negative entry");
  }
  const int d = table.maxCoeff();
  const Index n = table.rows();
  std::vector<RationalMatrix> adjacency(d + 1, RationalMatrix::Zero(n, n));
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) adjacency[table(x, y)](x, y) = 1;
  }
  return AssociationScheme(std::move(adjacency), std::move(labels));
}

const IntMatrix& AssociationScheme::relations() const {
  if (!has_relations()) {
    throw InvalidSchemeError("adjacency matrices do not partition J");
  }
  return relations_;
}

std::vector<Index> AssociationScheme::subconstituent(Index x, int i) const {
  const IntMatrix& r = relations();
  std::vector<Index> out;
  for (Index y = 0; y < order_; ++y) {
    if (r(x, y) == i) out.push_back(y);
  }
  return out;
}

AssociationScheme complete_scheme(int n) {
  if (n < 2) {
    throw std::invalid_argument("complete_scheme: n = " + std::to_string(n) +
                                " < 2");
  }
  RationalMatrix i = RationalMatrix::Identity(n, n);
  RationalMatrix a = RationalMatrix::Ones(n, n) - i;
  return AssociationScheme({std::move(i), std::move(a)});
}

ValidationReport validate(const AssociationScheme& s) {
  const std::vector<RationalMatrix>& a = s.adjacency();
  if (a.empty()) return Fail(Axiom::kShape, "no adjacency matrices");
  const Index n = a.front().rows();
  if (n == 0) return Fail(Axiom::kShape, "order 0");
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int ii = static_cast<int>(i);
    if (a[i].rows() != n || a[i].cols() != n) {
      return Fail(Axiom::kShape, "A_" + std::to_string(i) + " is " +
                                     std::to_string(a[i].rows()) + "x" +
                                     std::to_string(a[i].cols()));
    }
    bool empty = true;
    for (Index x = 0; x < n; ++x) {
      for (Index y = 0; y < n; ++y) {
        const Rational& v = a[i](x, y);
        if (!v.is_zero() && !v.is_one()) {
          return Fail(Axiom::kShape, Entry(ii, x, y) + " = " + v.to_string());
        }
        if (v.is_one()) empty = false;
      }
    }
    if (empty) return Fail(Axiom::kShape, "A_" + std::to_string(i) + " = 0");
  }
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      if (a[0](x, y) != Rational(x == y ? 1 : 0)) {
        return Fail(Axiom::kIdentity, Entry(0, x, y) + " = " +
                                          a[0](x, y).to_string());
      }
    }
  }
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      int total = 0;
      for (const RationalMatrix& m : a) total += m(x, y).is_one() ? 1 : 0;
      if (total != 1) {
        std::ostringstream os;
        os << "entry (" << x << "," << y << ") covered " << total << " times";
        return Fail(Axiom::kPartition, os.str());
      }
    }
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (Index x = 0; x < n; ++x) {
      for (Index y = x + 1; y < n; ++y) {
        if (a[i](x, y) != a[i](y, x)) {
          return Fail(Axiom::kSymmetry, Entry(static_cast<int>(i), x, y) +
                                            " != " +
                                            Entry(static_cast<int>(i), y, x));
        }
      }
    }
  }
  const IntMatrix& table = s.relations();
  const int d = s.classes();
  const Census census = RunCensus(table, d);
  if (census.mismatch) {
    std::ostringstream os;
    os << "(i,j) = (" << census.mismatch_i << "," << census.mismatch_j
       << "): entry (" << census.mismatch->first << ","
       << census.mismatch->second << ") of A_" << census.mismatch_i << " A_"
       << census.mismatch_j << " differs from other pairs in R_"
       << table(census.mismatch->first, census.mismatch->second);
    return Fail(Axiom::kProductClosure, os.str());
  }
  for (int h = 0; h <= d; ++h) {
    const auto& ref = census.reference[h];
    for (int i = 0; i <= d; ++i) {
      for (int j = i + 1; j <= d; ++j) {
        if (ref[i * (d + 1) + j] != ref[j * (d + 1) + i]) {
          std::ostringstream os;
          os << "(i,j) = (" << i << "," << j << ") on relation " << h;
          return Fail(Axiom::kCommutativity, os.str());
        }
      }
    }
  }
  return ValidationReport{};
}

void require_valid(const AssociationScheme& s) {
  const ValidationReport r = validate(s);
  if (!r.passed) throw InvalidSchemeError(r.message());
}

AssociationScheme wreath(const AssociationScheme& x,
                         const AssociationScheme& y) {
  require_valid(x);
  require_valid(y);
  const Index m = x.order();
  const Index n = y.order();
  const RationalMatrix jm = RationalMatrix::Ones(m, m);
  const RationalMatrix& c0 = y.adjacency(0);
  std::vector<RationalMatrix> w;
  w.reserve(x.classes() + y.classes() + 1);
  for (const RationalMatrix& a : x.adjacency()) w.push_back(kron(c0, a));
  for (int k = 1; k <= y.classes(); ++k) w.push_back(kron(y.adjacency(k), jm));
  std::vector<std::string> labels;
  if (!x.labels().empty() && !y.labels().empty()) {
    for (Index b = 0; b < n; ++b) {
      for (Index a = 0; a < m; ++a) {
        labels.push_back(x.labels()[a] + "." + y.labels()[b]);
      }
    }
  }
  return AssociationScheme(std::move(w), std::move(labels));
}

AssociationScheme build_from_spec(const SchemeSpec& spec) {
  if (spec.factors().empty()) {
    throw std::invalid_argument("build_from_spec: empty spec");
  }
  AssociationScheme s = complete_scheme(spec.factor(1));
  for (int i = 2; i <= spec.classes(); ++i) {
    s = wreath(s, complete_scheme(spec.factor(i)));
  }
  return s;
}

RationalMatrix relation_table(const AssociationScheme& s) {
  RationalMatrix out = RationalMatrix::Zero(s.order(), s.order());
  for (int k = 1; k <= s.classes(); ++k) out += Rational(k) * s.adjacency(k);
  return out;
}

std::vector<std::int64_t> valencies(const AssociationScheme& s) {
  std::vector<std::int64_t> out(s.classes() + 1, 0);
  const IntMatrix& r = s.relations();
  for (Index y = 0; y < s.order(); ++y) ++out[r(0, y)];
  return out;
}

IntersectionTensor::IntersectionTensor(int classes)
    : d_(classes),
      p_(static_cast<std::size_t>(classes + 1) * (classes + 1) * (classes + 1),
         0) {}

std::vector<std::int64_t> IntersectionTensor::valencies() const {
  std::vector<std::int64_t> out(d_ + 1);
  for (int i = 0; i <= d_; ++i) out[i] = (*this)(0, i, i);
  return out;
}

IntersectionTensor intersection_numbers(const AssociationScheme& s,
                                        IntersectionMethod method) {
  const int d = s.classes();
  const IntMatrix& table = s.relations();
  IntersectionTensor p(d);
  if (method == IntersectionMethod::kCensus) {
    const Census c = RunCensus(table, d);
    if (c.mismatch) {
      throw InvalidSchemeError("intersection_numbers: counts at pair (" +
                               std::to_string(c.mismatch->first) + "," +
                               std::to_string(c.mismatch->second) +
                               ") differ within one relation");
    }
    for (int h = 0; h <= d; ++h) {
      for (int i = 0; i <= d; ++i) {
        for (int j = 0; j <= d; ++j) p.at(h, i, j) = c.reference[h][i * (d + 1) + j];
      }
    }
    return p;
  }
  // Solve vec(A_i A_j) = sum_h c_h vec(A_h) by row reduction of the
  // augmented system [vec(A_0) ... vec(A_d) | vec(A_i A_j)].
  const Index n = s.order();
  RationalMatrix system(n * n, d + 2);
  for (int h = 0; h <= d; ++h) {
    const RationalMatrix& a = s.adjacency(h);
    for (Index k = 0; k < n * n; ++k) system(k, h) = a.data()[k];
  }
  for (int i = 0; i <= d; ++i) {
    for (int j = 0; j <= d; ++j) {
      const RationalMatrix prod = multiply(s.adjacency(i), s.adjacency(j));
      for (Index k = 0; k < n * n; ++k) system(k, d + 1) = prod.data()[k];
      const RrefResult<Rational> r = rref(system);
      if (r.rank != d + 1) {
        throw InvalidSchemeError("intersection_numbers: A_" +
                                 std::to_string(i) + " A_" + std::to_string(j) +
                                 " is outside the adjacency span");
      }
      for (int h = 0; h <= d; ++h) {
        const Rational& c = r.reduced(h, d + 1);
        if (!c.is_integer() || c.sign() < 0) {
          throw InvalidSchemeError("intersection_numbers: coefficient " +
                                   c.to_string() + " is not a nonnegative integer");
        }
        p.at(h, i, j) = c.to_int64();
      }
    }
  }
  return p;
}

IntersectionTensor closed_form_intersection_numbers(const SchemeSpec& spec) {
  const int d = spec.classes();
  IntersectionTensor p(d);
  auto k = [&](int j) {
    return j == 0 ? std::int64_t{1}
                  : (spec.factor(j) - 1) * spec.prefix_order(j);
  };
  for (int j = 0; j <= d; ++j) p.at(0, j, j) = k(j);
  for (int h = 1; h <= d; ++h) {
    p.at(h, h, h) = (spec.factor(h) - 2) * spec.prefix_order(h);
    for (int j = h + 1; j <= d; ++j) p.at(h, j, j) = k(j);
    for (int j = 1; j < h; ++j) {
      p.at(h, j, h) = k(j);
      p.at(h, h, j) = k(j);
    }
    p.at(h, 0, h) = 1;
    p.at(h, h, 0) = 1;
  }
  return p;
}

AssociationScheme relabel_relations(const AssociationScheme& s,
                                    const std::vector<int>& perm) {
  const int d = s.classes();
  if (static_cast<int>(perm.size()) != d + 1 || perm[0] != 0) {
    throw std::invalid_argument("relabel_relations: perm must fix 0");
  }
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i <= d; ++i) {
    if (sorted[i] != i) {
      throw std::invalid_argument("relabel_relations: not a permutation");
    }
  }
  std::vector<RationalMatrix> adjacency(d + 1);
  for (int i = 0; i <= d; ++i) adjacency[perm[i]] = s.adjacency(i);
  return AssociationScheme(std::move(adjacency), s.labels());
}

AssociationScheme permute_vertices(const AssociationScheme& s,
                                   const std::vector<Index>& order) {
  const Index n = s.order();
  if (static_cast<Index>(order.size()) != n) {
    throw std::invalid_argument("permute_vertices: wrong length");
  }
  std::vector<bool> seen(n, false);
  for (Index v : order) {
    if (v < 0 || v >= n || seen[v]) {
      throw std::invalid_argument("permute_vertices: not a permutation");
    }
    seen[v] = true;
  }
  std::vector<RationalMatrix> adjacency;
  adjacency.reserve(s.classes() + 1);
  for (const RationalMatrix& a : s.adjacency()) {
    RationalMatrix b(n, n);
    for (Index k = 0; k < n; ++k) {
      for (Index l = 0; l < n; ++l) b(k, l) = a(order[k], order[l]);
    }
    adjacency.push_back(std::move(b));
  }
  std::vector<std::string> labels;
  if (!s.labels().empty()) {
    for (Index k = 0; k < n; ++k) labels.push_back(s.labels()[order[k]]);
  }
  return AssociationScheme(std::move(adjacency), std::move(labels));
}

AssociationScheme reverse_relation_order(const AssociationScheme& s,
                                         Index base) {
  const int d = s.classes();
  std::vector<int> perm(d + 1);
  perm[0] = 0;
  for (int i = 1; i <= d; ++i) perm[i] = d + 1 - i;
  const AssociationScheme relabeled = relabel_relations(s, perm);
  const IntMatrix& r = relabeled.relations();
  std::vector<Index> order(s.order());
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
    return r(base, a) < r(base, b);
  });
  return permute_vertices(relabeled, order);
}

}  // namespace twalg
