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

// Symmetric association schemes, wreath products of complete schemes, and
// their intersection numbers and eigenmatrices.

#ifndef TWALG_SCHEME_HPP_
#define TWALG_SCHEME_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twalg/exactla.hpp"

namespace twalg {

using IntMatrix =
    Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Factor list [n_1, ..., n_d] of K(n_1) wr ... wr K(n_d).
class SchemeSpec {
 public:
  SchemeSpec() = default;
  // Throws std::invalid_argument if empty or some n_i < 2.
  explicit SchemeSpec(std::vector<int> factors);

  const std::vector<int>& factors() const { return factors_; }
  int classes() const { return static_cast<int>(factors_.size()); }
  // 1-based, matching relation indices.
  int factor(int i) const { return factors_[i - 1]; }
  // Product of n_1..n_d; saturates at INT64_MAX.
  std::int64_t order() const;
  // Product of n_1..n_{i-1}; 1 for i = 1.
  std::int64_t prefix_order(int i) const;
  // Number of factors equal to 2.
  int k2_count() const;
  std::string to_string() const;

  friend bool operator==(const SchemeSpec&, const SchemeSpec&) = default;

 private:
  std::vector<int> factors_;
};

enum class Axiom {
  kShape,          // square 0/1 matrices of one size, no empty relation
  kIdentity,       // A_0 = I
  kPartition,      // sum of A_i = J
  kSymmetry,       // A_i^T = A_i
  kProductClosure, // A_i A_j in the nonnegative integer span of the A_h
  kCommutativity,  // A_i A_j = A_j A_i
};

std::string_view axiom_name(Axiom axiom);

struct ValidationReport {
  bool passed = true;
  std::optional<Axiom> failed_axiom;
  std::string witness;

  std::string message() const;
};

// Adjacency matrices A_0..A_d on n points.
//
// Construction performs no axiom checks; call validate(). The relation
// table is available whenever the matrices are 0/1 and partition J.
class AssociationScheme {
 public:
  AssociationScheme() = default;
  explicit AssociationScheme(std::vector<RationalMatrix> adjacency,
                             std::vector<std::string> labels = {});
  // Throws InvalidSchemeError for a non-square table or negative entries.
  static AssociationScheme from_relation_table(
      const IntMatrix& table, std::vector<std::string> labels = {});

  Index order() const { return order_; }
  int classes() const { return static_cast<int>(adjacency_.size()) - 1; }
  const std::vector<RationalMatrix>& adjacency() const { return adjacency_; }
  const RationalMatrix& adjacency(int i) const { return adjacency_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool has_relations() const { return relations_.size() > 0; }
  // Throws InvalidSchemeError unless has_relations().
  const IntMatrix& relations() const;
  int relation(Index x, Index y) const { return relations()(x, y); }
  // R_i(x) in ascending vertex order.
  std::vector<Index> subconstituent(Index x, int i) const;

 private:
  Index order_ = 0;
  std::vector<RationalMatrix> adjacency_;
  std::vector<std::string> labels_;
  IntMatrix relations_;
};

AssociationScheme complete_scheme(int n);

ValidationReport validate(const AssociationScheme& s);

// Throws InvalidSchemeError carrying the report unless validate() passes.
void require_valid(const AssociationScheme& s);

// Vertex (y, x) of Y x X has index y * |X| + x. Relations of X keep their
// indices; relation k of Y becomes d + k.
AssociationScheme wreath(const AssociationScheme& x, const AssociationScheme& y);

// Left fold of wreath over the factors. Vertex (a_1, ..., a_d) with
// 0-based a_i has index a_1 + n_1 a_2 + n_1 n_2 a_3 + ...; the base vertex
// is 0 and R_i(0) is the index range [N_{i-1}, N_i) with N_i = n_1...n_i.
AssociationScheme build_from_spec(const SchemeSpec& spec);

// Sum of k A_k.
RationalMatrix relation_table(const AssociationScheme& s);

std::vector<std::int64_t> valencies(const AssociationScheme& s);

// p^h_ij stored densely, (d+1)^3 entries.
class IntersectionTensor {
 public:
  explicit IntersectionTensor(int classes = 0);

  int classes() const { return d_; }
  std::int64_t operator()(int h, int i, int j) const { return p_[Offset(h, i, j)]; }
  std::int64_t& at(int h, int i, int j) { return p_[Offset(h, i, j)]; }
  // k_i = p^0_ii.
  std::vector<std::int64_t> valencies() const;

  friend bool operator==(const IntersectionTensor&,
                         const IntersectionTensor&) = default;

 private:
  std::size_t Offset(int h, int i, int j) const {
    const auto w = static_cast<std::size_t>(d_ + 1);
    return (static_cast<std::size_t>(h) * w + i) * w + j;
  }

  int d_;
  std::vector<std::int64_t> p_;
};

enum class IntersectionMethod {
  kCensus,     // count z with R(x,z) = i, R(z,y) = j over every pair (x,y)
  kAlgebraic,  // expand A_i A_j in the adjacency basis
};

// Throws InvalidSchemeError if the counts depend on more than R(x, y).
IntersectionTensor intersection_numbers(
    const AssociationScheme& s,
    IntersectionMethod method = IntersectionMethod::kCensus);

// Closed form for K(n_1) wr ... wr K(n_d) in build_from_spec ordering:
// p^0_jj = k_j; p^h_hh = (n_h - 2) N_{h-1}; p^h_jj = k_j for j > h;
// p^h_jh = p^h_hj = k_j for 1 <= j < h; p^h_0h = p^h_h0 = 1; all else 0.
IntersectionTensor closed_form_intersection_numbers(const SchemeSpec& spec);

struct Eigenstructure {
  // E_0..E_d, ordered by descending eigenvalue row (p_1(i), ..., p_d(i)),
  // which puts the trivial idempotent J/n first.
  std::vector<RationalMatrix> idempotents;
  // E_i = sum_h coefficients(i, h) A_h.
  RationalMatrix coefficients;
  // first(i, j) = p_j(i): A_j E_i = p_j(i) E_i.
  RationalMatrix first;
  // second(i, j) = q_j(i): E_j = n^{-1} sum_i q_j(i) A_i.
  RationalMatrix second;
  std::vector<Index> multiplicities;
  // krein[(h * (d+1) + i) * (d+1) + j] = q^h_ij.
  std::vector<Rational> krein;

  int classes() const { return static_cast<int>(idempotents.size()) - 1; }
  const Rational& krein_parameter(int h, int i, int j) const {
    const auto w = static_cast<std::size_t>(classes() + 1);
    return krein[(static_cast<std::size_t>(h) * w + i) * w + j];
  }
};

// Idempotents by refining the spectral projectors of each A_j inside the
// Bose-Mesner algebra. All stated identities are verified exactly; a
// failure throws VerificationError. An irrational eigenvalue throws
// IrrationalEigenvalueError.
Eigenstructure eigenstructure(const AssociationScheme& s);

// perm[old] = new; perm[0] must be 0.
AssociationScheme relabel_relations(const AssociationScheme& s,
                                    const std::vector<int>& perm);

// Vertex k of the result is vertex order[k] of s.
AssociationScheme permute_vertices(const AssociationScheme& s,
                                   const std::vector<Index>& order);

// Relation i >= 1 becomes d + 1 - i, so R_1 is the largest subconstituent
// of a wreath power; vertices are then sorted stably by their new relation
// to base, which moves base to index 0.
AssociationScheme reverse_relation_order(const AssociationScheme& s,
                                         Index base = 0);

}  // namespace twalg

#endif  // TWALG_SCHEME_HPP_
