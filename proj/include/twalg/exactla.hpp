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

// Exact dense linear algebra over any field-like scalar (in practice
// twalg::Rational). Matrices are row-major so that flattening an n x n
// matrix to a vector of length n^2 is the storage order itself.

#ifndef TWALG_EXACTLA_HPP_
#define TWALG_EXACTLA_HPP_

#include <algorithm>
#include <deque>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "twalg/errors.hpp"
#include "twalg/rational.hpp"

namespace twalg {

using Index = Eigen::Index;

template <typename Scalar>
using Matrix =
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <typename Scalar>
using ColumnVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = Matrix<Rational>;
using RationalVector = ColumnVector<Rational>;

template <typename Scalar>
inline bool is_zero_scalar(const Scalar& s) {
  if constexpr (requires { s.is_zero(); }) {
    return s.is_zero();
  } else {
    return s == Scalar(0);
  }
}

template <typename Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& m) {
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (!is_zero_scalar(m(i, j))) return false;
    }
  }
  return true;
}

// Block (i, j) of the result is a(i, j) * b.
template <typename DA, typename DB>
Matrix<typename DA::Scalar> kron(const Eigen::MatrixBase<DA>& a,
                                 const Eigen::MatrixBase<DB>& b) {
  using Scalar = typename DA::Scalar;
  static_assert(std::is_same_v<Scalar, typename DB::Scalar>);
  const Index br = b.rows();
  const Index bc = b.cols();
  Matrix<Scalar> out = Matrix<Scalar>::Zero(a.rows() * br, a.cols() * bc);
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      const Scalar& aij = a(i, j);
      if (is_zero_scalar(aij)) continue;
      out.block(i * br, j * bc, br, bc) = aij * b;
    }
  }
  return out;
}

template <typename DA, typename DB>
Matrix<typename DA::Scalar> hadamard(const Eigen::MatrixBase<DA>& a,
                                     const Eigen::MatrixBase<DB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("hadamard: shape mismatch");
  }
  return a.cwiseProduct(b);
}

// Product that skips zero entries of both factors. Adjacency-type operands
// are mostly zero, which dense GEMM cannot exploit over an exact scalar.
template <typename DA, typename DB>
Matrix<typename DA::Scalar> multiply(const Eigen::MatrixBase<DA>& a,
                                     const Eigen::MatrixBase<DB>& b) {
  using Scalar = typename DA::Scalar;
  if (a.cols() != b.rows()) throw DimensionError("multiply: shape mismatch");
  std::vector<std::vector<Index>> support(b.rows());
  for (Index k = 0; k < b.rows(); ++k) {
    for (Index j = 0; j < b.cols(); ++j) {
      if (!is_zero_scalar(b(k, j))) support[k].push_back(j);
    }
  }
  Matrix<Scalar> out = Matrix<Scalar>::Zero(a.rows(), b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (is_zero_scalar(aik)) continue;
      if (aik == Scalar(1)) {
        for (Index j : support[k]) out(i, j) += b(k, j);
      } else {
        for (Index j : support[k]) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

template <typename Scalar>
struct RrefResult {
  Matrix<Scalar> reduced;  // same shape as the input; zero rows last
  Index rank = 0;
  std::vector<Index> pivots;  // pivot column of each nonzero row
};

template <typename Derived>
RrefResult<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  RrefResult<Scalar> out;
  out.reduced = m;
  Matrix<Scalar>& r = out.reduced;
  Index row = 0;
  for (Index col = 0; col < r.cols() && row < r.rows(); ++col) {
    Index p = row;
    while (p < r.rows() && is_zero_scalar(r(p, col))) ++p;
    if (p == r.rows()) continue;
    if (p != row) r.row(p).swap(r.row(row));
    const Scalar inv = Scalar(1) / r(row, col);
    for (Index j = col; j < r.cols(); ++j) r(row, j) *= inv;
    for (Index i = 0; i < r.rows(); ++i) {
      if (i == row || is_zero_scalar(r(i, col))) continue;
      const Scalar f = r(i, col);
      for (Index j = col; j < r.cols(); ++j) {
        if (!is_zero_scalar(r(row, j))) r(i, j) -= f * r(row, j);
      }
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.rank = row;
  return out;
}

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  return rref(m).rank;
}

// Columns form a basis of {v : m v = 0}, one per free column, with a 1 in
// that column's position.
template <typename Derived>
Matrix<typename Derived::Scalar> nullspace(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const RrefResult<Scalar> r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (Index p : r.pivots) is_pivot[p] = true;
  std::vector<Index> free_cols;
  for (Index j = 0; j < m.cols(); ++j) {
    if (!is_pivot[j]) free_cols.push_back(j);
  }
  Matrix<Scalar> out =
      Matrix<Scalar>::Zero(m.cols(), static_cast<Index>(free_cols.size()));
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    const Index fc = free_cols[f];
    out(fc, static_cast<Index>(f)) = Scalar(1);
    for (Index k = 0; k < r.rank; ++k) {
      out(r.pivots[k], static_cast<Index>(f)) = -r.reduced(k, fc);
    }
  }
  return out;
}

// Throws DimensionError on a singular or non-square input.
template <typename Derived>
Matrix<typename Derived::Scalar> inverse(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const Index n = m.rows();
  if (m.cols() != n) throw DimensionError("inverse: matrix is not square");
  Matrix<Scalar> aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = Matrix<Scalar>::Identity(n, n);
  const RrefResult<Scalar> r = rref(aug);
  if (r.rank < n || r.pivots[n - 1] != n - 1) {
    throw DimensionError("inverse: matrix is singular");
  }
  return r.reduced.rightCols(n);
}

// Incremental reduced row-echelon basis of a subspace of Scalar^width.
//
// Invariant: rows are sorted by pivot, each pivot entry is 1, and every
// other row is zero in every pivot column.
template <typename Scalar>
class RowEchelon {
 public:
  explicit RowEchelon(Index width = 0) : width_(width) {}

  Index width() const { return width_; }
  Index rank() const { return static_cast<Index>(rows_.size()); }
  const std::vector<Index>& pivots() const { return pivots_; }
  const std::vector<Scalar>& row(Index k) const { return rows_[k].values; }

  // Subtracts the projection onto stored rows. One pass suffices because
  // each pivot column is nonzero in exactly one stored row.
  void reduce(std::vector<Scalar>& v) const {
    for (const Row& r : rows_) {
      const Scalar c = v[r.pivot];
      if (is_zero_scalar(c)) continue;
      for (Index j : r.support) v[j] -= c * r.values[j];
    }
  }

  bool contains(std::span<const Scalar> v) const {
    CheckWidth(v.size());
    std::vector<Scalar> w(v.begin(), v.end());
    reduce(w);
    return std::all_of(w.begin(), w.end(),
                       [](const Scalar& s) { return is_zero_scalar(s); });
  }

  // Returns true iff the rank grew.
  bool insert(std::span<const Scalar> v) {
    CheckWidth(v.size());
    return insert(std::vector<Scalar>(v.begin(), v.end()));
  }

  bool insert(std::vector<Scalar>&& v) {
    CheckWidth(v.size());
    reduce(v);
    Index p = 0;
    while (p < width_ && is_zero_scalar(v[p])) ++p;
    if (p == width_) return false;
    Row fresh;
    fresh.pivot = p;
    const Scalar inv = Scalar(1) / v[p];
    for (Index j = p; j < width_; ++j) {
      if (is_zero_scalar(v[j])) continue;
      if (!(inv == Scalar(1))) v[j] *= inv;
      fresh.support.push_back(j);
    }
    fresh.values = std::move(v);
    for (Row& r : rows_) {
      const Scalar c = r.values[p];
      if (is_zero_scalar(c)) continue;
      for (Index j : fresh.support) r.values[j] -= c * fresh.values[j];
      std::vector<Index> merged;
      merged.reserve(r.support.size() + fresh.support.size());
      std::set_union(r.support.begin(), r.support.end(),
                     fresh.support.begin(), fresh.support.end(),
                     std::back_inserter(merged));
      r.support.clear();
      for (Index j : merged) {
        if (!is_zero_scalar(r.values[j])) r.support.push_back(j);
      }
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
    const auto offset = pos - pivots_.begin();
    pivots_.insert(pos, p);
    rows_.insert(rows_.begin() + offset, std::move(fresh));
    return true;
  }

  // Coefficients of v in the stored row basis, or nullopt if v is outside
  // the span. In RREF these are just the entries of v at the pivots.
  std::optional<std::vector<Scalar>> coordinates(
      std::span<const Scalar> v) const {
    if (!contains(v)) return std::nullopt;
    std::vector<Scalar> out;
    out.reserve(rows_.size());
    for (Index p : pivots_) out.push_back(v[p]);
    return out;
  }

  // Basis of {x : r . x = 0 for every stored row r}.
  std::vector<std::vector<Scalar>> kernel() const {
    std::vector<bool> is_pivot(width_, false);
    for (Index p : pivots_) is_pivot[p] = true;
    std::vector<std::vector<Scalar>> out;
    for (Index f = 0; f < width_; ++f) {
      if (is_pivot[f]) continue;
      std::vector<Scalar> x(width_, Scalar(0));
      x[f] = Scalar(1);
      for (const Row& r : rows_) x[r.pivot] = -r.values[f];
      out.push_back(std::move(x));
    }
    return out;
  }

  friend bool operator==(const RowEchelon& a, const RowEchelon& b) {
    if (a.width_ != b.width_ || a.pivots_ != b.pivots_) return false;
    for (std::size_t k = 0; k < a.rows_.size(); ++k) {
      if (a.rows_[k].values != b.rows_[k].values) return false;
    }
    return true;
  }

 private:
  struct Row {
    std::vector<Scalar> values;
    std::vector<Index> support;  // sorted nonzero positions
    Index pivot = 0;
  };

  void CheckWidth(std::size_t n) const {
    if (static_cast<Index>(n) != width_) {
      throw DimensionError("RowEchelon: vector length " + std::to_string(n) +
                           " != width " + std::to_string(width_));
    }
  }

  Index width_;
  std::vector<Row> rows_;
  std::vector<Index> pivots_;
};

// Subspace of the n x n matrices, stored as an RREF basis of the row-major
// flattenings. Two spans are equal iff their canonical bases are equal.
template <typename Scalar>
class BasicMatrixSpan {
 public:
  explicit BasicMatrixSpan(Index order = 0)
      : order_(order), echelon_(order * order) {}

  Index order() const { return order_; }
  Index dim() const { return echelon_.rank(); }
  const std::vector<Index>& pivot_columns() const { return echelon_.pivots(); }
  const RowEchelon<Scalar>& echelon() const { return echelon_; }

  // Returns true iff the dimension grew. Throws DimensionError on shape.
  bool insert(const Matrix<Scalar>& m) {
    CheckShape(m);
    return echelon_.insert(std::span<const Scalar>(m.data(), m.size()));
  }

  bool contains(const Matrix<Scalar>& m) const {
    CheckShape(m);
    return echelon_.contains(std::span<const Scalar>(m.data(), m.size()));
  }

  std::optional<std::vector<Scalar>> coordinates(const Matrix<Scalar>& m) const {
    CheckShape(m);
    return echelon_.coordinates(std::span<const Scalar>(m.data(), m.size()));
  }

  Matrix<Scalar> basis(Index k) const {
    const std::vector<Scalar>& v = echelon_.row(k);
    Matrix<Scalar> out(order_, order_);
    std::copy(v.begin(), v.end(), out.data());
    return out;
  }

  std::vector<Matrix<Scalar>> basis() const {
    std::vector<Matrix<Scalar>> out;
    out.reserve(dim());
    for (Index k = 0; k < dim(); ++k) out.push_back(basis(k));
    return out;
  }

  friend bool operator==(const BasicMatrixSpan& a, const BasicMatrixSpan& b) {
    return a.order_ == b.order_ && a.echelon_ == b.echelon_;
  }

 private:
  void CheckShape(const Matrix<Scalar>& m) const {
    if (m.rows() != order_ || m.cols() != order_) {
      throw DimensionError("MatrixSpan: expected " + std::to_string(order_) +
                           "x" + std::to_string(order_) + " matrix, got " +
                           std::to_string(m.rows()) + "x" +
                           std::to_string(m.cols()));
    }
  }

  Index order_;
  RowEchelon<Scalar> echelon_;
};

using MatrixAlgebraSpan = BasicMatrixSpan<Rational>;

// Smallest subspace containing the generators and closed under products.
//
// Every element added to the span is queued once and left-multiplied by each
// independent generator; a span closed under left multiplication by the
// generators contains every word in them.
template <typename Scalar>
BasicMatrixSpan<Scalar> multiplicative_closure(
    const std::vector<Matrix<Scalar>>& generators) {
  if (generators.empty()) {
    throw DimensionError("multiplicative_closure: no generators");
  }
  const Index n = generators.front().rows();
  for (const Matrix<Scalar>& g : generators) {
    if (g.rows() != n || g.cols() != n) {
      throw DimensionError("multiplicative_closure: generator size mismatch");
    }
  }
  BasicMatrixSpan<Scalar> span(n);
  std::vector<const Matrix<Scalar>*> multipliers;
  std::deque<Matrix<Scalar>> queue;
  for (const Matrix<Scalar>& g : generators) {
    if (span.insert(g)) {
      multipliers.push_back(&g);
      queue.push_back(g);
    }
  }
  while (!queue.empty()) {
    Matrix<Scalar> w = std::move(queue.front());
    queue.pop_front();
    for (const Matrix<Scalar>* g : multipliers) {
      Matrix<Scalar> product = multiply(*g, w);
      if (span.insert(product)) queue.push_back(std::move(product));
    }
  }
  return span;
}

}  // namespace twalg

#endif  // TWALG_EXACTLA_HPP_
