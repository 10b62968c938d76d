// Copyright 2026 The socodes Authors.
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

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "socodes/error.hpp"
#include "socodes/field.hpp"

namespace socodes {

using Vector = std::vector<Elem>;

/// Dense row-major matrix over one finite field.
class Matrix {
 public:
  Matrix(FiniteField field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix from_rows(const FiniteField& field, const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      require(rows[r].size() == cols, ErrorCode::RaggedRows,
              "row " + std::to_string(r) + " has length " + std::to_string(rows[r].size()) + ", expected " +
                  std::to_string(cols));
      for (std::size_t c = 0; c < cols; ++c) {
        field.check(rows[r][c]);
        m(r, c) = rows[r][c];
      }
    }
    return m;
  }

  static Matrix identity(const FiniteField& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  const FiniteField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  std::vector<Vector> to_rows() const {
    std::vector<Vector> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.emplace_back(row(r).begin(), row(r).end());
    return out;
  }

  bool is_zero() const {
    for (Elem e : data_)
      if (e != 0) return false;
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_ && a.field_ == b.field_;
  }

 private:
  FiniteField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

inline Matrix transpose(const Matrix& m) {
  Matrix t(m.field(), m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) t(c, r) = m(r, c);
  return t;
}

inline Matrix multiply(const Matrix& a, const Matrix& b) {
  require(a.field() == b.field(), ErrorCode::FieldMismatch, "matrix fields differ");
  require(a.cols() == b.rows(), ErrorCode::DimensionMismatch, "inner dimensions differ");
  const FiniteField& f = a.field();
  Matrix out(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const Elem x = a(i, l);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = f.add(out(i, j), f.mul(x, b(l, j)));
    }
  return out;
}

/// Σ a_i b_i.
inline Elem dot(const FiniteField& f, std::span<const Elem> a, std::span<const Elem> b) {
  require(a.size() == b.size(), ErrorCode::LengthMismatch, "dot product of vectors of different length");
  Elem s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = f.add(s, f.mul(a[i], b[i]));
  return s;
}

struct RowReduction {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Gauss-Jordan elimination to reduced row echelon form (pivots are 1, zero above and below).
inline RowReduction rref(Matrix m) {
  const FiniteField f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t sel = r;
    while (sel < m.rows() && m(sel, c) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(r, j));
    const Elem scale = f.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), scale);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Elem factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), r, std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank; }

/// Basis of {x : M x = 0}, itself in reduced row echelon form (each vector has a leading 1).
/// Vectors come from the free columns in increasing order before the final normalization.
inline std::vector<Vector> kernel_basis(const Matrix& m) {
  const FiniteField& f = m.field();
  const RowReduction red = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : red.pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector x(m.cols(), 0);
    x[free] = 1;
    for (std::size_t i = 0; i < red.rank; ++i) x[red.pivots[i]] = f.neg(red.reduced(i, free));
    basis.push_back(std::move(x));
  }
  if (basis.empty()) return basis;
  return rref(Matrix::from_rows(f, basis, m.cols())).reduced.to_rows();
}

struct SolveResult {
  Matrix reduced;
  std::size_t rank = 0;
  std::optional<Vector> solution;  // free variables set to zero; empty if inconsistent
};

/// RREF and rank of M; with a right-hand side also a particular solution of M x = rhs.
inline SolveResult rref_rank_solve(const Matrix& m, std::optional<std::span<const Elem>> rhs = std::nullopt) {
  if (!rhs) {
    RowReduction red = rref(m);
    return {std::move(red.reduced), red.rank, std::nullopt};
  }
  require(rhs->size() == m.rows(), ErrorCode::DimensionMismatch,
          "rhs has length " + std::to_string(rhs->size()) + ", matrix has " + std::to_string(m.rows()) + " rows");
  const FiniteField& f = m.field();
  Matrix aug(f, m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    f.check((*rhs)[r]);
    aug(r, m.cols()) = (*rhs)[r];
  }
  RowReduction red = rref(std::move(aug));
  Matrix reduced(f, m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) reduced(r, c) = red.reduced(r, c);
  const bool inconsistent = !red.pivots.empty() && red.pivots.back() == m.cols();
  const std::size_t rank_m = inconsistent ? red.rank - 1 : red.rank;
  if (inconsistent) return {std::move(reduced), rank_m, std::nullopt};
  Vector x(m.cols(), 0);
  for (std::size_t i = 0; i < red.rank; ++i) x[red.pivots[i]] = red.reduced(i, m.cols());
  return {std::move(reduced), rank_m, std::move(x)};
}

}  // namespace socodes
