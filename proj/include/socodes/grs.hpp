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

/**
 * @file grs.hpp
 * @brief Generalized Reed-Solomon codes and their twists into self-orthogonal codes.
 *
 * GRS_k(a, v) is the image of polynomials of degree < k under f -> (v_1 f(a_1), ..., v_n f(a_n)).
 * Its Euclidean dual is GRS_{n-k}(a, v') with v'_i proportional to 1 / (v_i Π_{j≠i} (a_i - a_j)).
 *
 * The self-orthogonal pipelines need a codeword u of GRS_{2k-1}(a, 1)^⊥ with no zero entry. One is
 * u_i = v'_i f(a_i) for a monic irreducible quadratic f, which lies in the dual as long as
 * n - 2k >= 2. Twisting GRS_k(a, 1) by v with v_i^2 = u_i (characteristic 2) gives a Euclidean
 * self-orthogonal code; twisting its lift to GF(q^2) by v with v_i^(q+1) = u_i gives a Hermitian
 * self-orthogonal code in any characteristic.
 */

#pragma once

#include <array>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "socodes/error.hpp"
#include "socodes/field.hpp"
#include "socodes/linear_code.hpp"
#include "socodes/matrix.hpp"

namespace socodes {

struct GrsSpec {
  FiniteField field;
  Vector points;
  std::optional<TwistVector> twist;  // all-ones when empty
  std::size_t k = 1;

  std::size_t length() const { return points.size(); }
  TwistVector twist_or_ones() const { return twist ? *twist : TwistVector::ones(field, points.size()); }

  void validate() const {
    require(!points.empty(), ErrorCode::LengthMismatch, "GRS code needs at least one evaluation point");
    std::set<Elem> seen;
    for (Elem a : points) {
      field.check(a);
      require(seen.insert(a).second, ErrorCode::RepeatedPoints, "evaluation points must be pairwise distinct");
    }
    require(k >= 1 && k <= points.size(), ErrorCode::InvalidDimension,
            "need 1 <= k <= n, got k=" + std::to_string(k) + ", n=" + std::to_string(points.size()));
    if (twist) {
      require(twist->size() == points.size(), ErrorCode::LengthMismatch, "twist length differs from point count");
      require(twist->field() == field, ErrorCode::FieldMismatch, "twist over a different field");
    }
  }
};

/// All field elements in index order.
inline Vector all_elements(const FiniteField& field) {
  Vector out(field.order());
  for (Elem a = 0; a < field.order(); ++a) out[a] = a;
  return out;
}

inline Vector evaluation_row(const FiniteField& f, const Vector& points, const TwistVector& v, std::size_t power) {
  Vector row(points.size());
  for (std::size_t i = 0; i < points.size(); ++i)
    row[i] = f.mul(v[i], f.pow(points[i], static_cast<std::int64_t>(power)));
  return row;
}

/// Generator rows (v_i a_i^j)_i for j = 0..k-1, canonicalized.
inline LinearCode grs_code(const GrsSpec& spec) {
  spec.validate();
  const TwistVector v = spec.twist_or_ones();
  std::vector<Vector> rows;
  for (std::size_t j = 0; j < spec.k; ++j) rows.push_back(evaluation_row(spec.field, spec.points, v, j));
  return LinearCode::from_generator(spec.field, rows, spec.length());
}

inline LinearCode grs_code(const FiniteField& field, const Vector& points, std::size_t k) {
  return grs_code(GrsSpec{field, points, std::nullopt, k});
}

/// Coefficient matrix of the system whose nonzero solutions are the dual twist:
/// rows (v_i a_i^j)_i for j = 0..n-2.
inline Matrix dual_twist_system(const FiniteField& field, const Vector& points, const TwistVector& v) {
  std::vector<Vector> rows;
  for (std::size_t j = 0; j + 1 < points.size(); ++j) rows.push_back(evaluation_row(field, points, v, j));
  return Matrix::from_rows(field, rows, points.size());
}

/// v' with GRS_k(a, v)^⊥ = GRS_{n-k}(a, v'), scaled so v'_1 = 1. The closed form
/// v'_i ∝ 1 / (v_i Π_{j≠i}(a_i - a_j)) is cross-checked against the kernel of dual_twist_system.
inline TwistVector dual_twist_vector(const FiniteField& field, const Vector& points, const TwistVector& v) {
  GrsSpec{field, points, v, 1}.validate();
  const std::size_t n = points.size();
  Vector w(n);
  for (std::size_t i = 0; i < n; ++i) {
    Elem denom = v[i];
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) denom = field.mul(denom, field.sub(points[i], points[j]));
    w[i] = field.inv(denom);
  }
  const Elem scale = field.inv(w[0]);
  for (auto& x : w) x = field.mul(x, scale);

  const auto kernel = kernel_basis(dual_twist_system(field, points, v));
  if (kernel.size() != 1 || kernel.front() != w)
    throw std::logic_error("dual twist closed form disagrees with the kernel of the dual system");
  return {field, std::move(w)};
}

inline TwistVector dual_twist_vector(const FiniteField& field, const Vector& points) {
  return dual_twist_vector(field, points, TwistVector::ones(field, points.size()));
}

/// Monic irreducible x^2 + b x + c with (b, c) lexicographically smallest, returned as {c, b, 1}.
inline std::array<Elem, 3> smallest_irreducible_quadratic(const FiniteField& field) {
  for (Elem b = 0; b < field.order(); ++b) {
    for (Elem c = 0; c < field.order(); ++c) {
      bool has_root = false;
      for (Elem x = 0; x < field.order() && !has_root; ++x)
        has_root = field.add(field.mul(x, field.add(x, b)), c) == 0;
      if (!has_root) return {c, b, 1};
    }
  }
  throw std::logic_error("every finite field has an irreducible quadratic");
}

inline Elem eval_quadratic(const FiniteField& field, const std::array<Elem, 3>& f, Elem x) {
  return field.add(field.mul(x, field.add(x, f[1])), f[0]);
}

/// u_i = v'_i f(a_i) for the smallest monic irreducible quadratic f. Every entry is nonzero and
/// u ∈ GRS_{n-2k+1}(a, v'), the dual of GRS_{2k-1}(a, v).
inline Vector quadratic_full_weight(const FiniteField& field, const Vector& points, const TwistVector& dual_twist,
                                    std::size_t k) {
  const std::size_t n = points.size();
  require(n >= 2 * k + 2, ErrorCode::DimensionTooLarge,
          "need n - 2k >= 2, got n=" + std::to_string(n) + ", k=" + std::to_string(k));
  require(dual_twist.size() == n, ErrorCode::LengthMismatch, "dual twist length differs from point count");
  const auto f = smallest_irreducible_quadratic(field);
  Vector u(n);
  for (std::size_t i = 0; i < n; ++i) u[i] = field.mul(dual_twist[i], eval_quadratic(field, f, points[i]));
  return u;
}

/// A code together with the twist that produced it and the full-weight dual codeword the twist
/// was derived from (over the base field).
struct SelfOrthogonalCode {
  TwistVector twist;
  LinearCode code;
  Vector full_weight_word;
  InnerProduct mode;
};

namespace detail {

inline void check_pipeline_input(const FiniteField& field, const Vector& points, std::size_t k) {
  require(points.size() >= 2 * k + 2, ErrorCode::DimensionTooLarge,
          "need n - 2k >= 2, got n=" + std::to_string(points.size()) + ", k=" + std::to_string(k));
  GrsSpec{field, points, std::nullopt, k}.validate();
}

}  // namespace detail

/// Euclidean square-root twist of a full-weight dual codeword; characteristic 2 only.
inline SelfOrthogonalCode euclidean_twist(const LinearCode& code, const Vector& u) {
  const FiniteField& f = code.field();
  require(f.characteristic() == 2, ErrorCode::OddCharacteristic,
          "Euclidean twisting needs characteristic 2, got " + f.name());
  Vector v(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) v[i] = sqrt_char2(f, u[i]);
  TwistVector tv(f, std::move(v));
  LinearCode twisted = twist(code, tv);
  if (!is_self_orthogonal(twisted, InnerProduct::euclidean))
    throw std::logic_error("square-root twist is not Euclidean self-orthogonal");
  return {std::move(tv), std::move(twisted), u, InnerProduct::euclidean};
}

/// Hermitian norm-root twist: lift to GF(q^2) and twist by v with v_i^(q+1) = u_i.
inline SelfOrthogonalCode hermitian_twist(const LinearCode& code, const Vector& u, const FiniteField& ext) {
  Vector v(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) v[i] = norm_root(ext, embed(code.field(), u[i], ext));
  TwistVector tv(ext, std::move(v));
  LinearCode twisted = twist(lift_to_extension(code, ext), tv);
  if (!is_self_orthogonal(twisted, InnerProduct::hermitian))
    throw std::logic_error("norm-root twist is not Hermitian self-orthogonal");
  return {std::move(tv), std::move(twisted), u, InnerProduct::hermitian};
}

/// GRS_k(a, 1) twisted into a Euclidean self-orthogonal [n, k, n-k+1] code.
inline SelfOrthogonalCode euclidean_so_grs(const FiniteField& field, const Vector& points, std::size_t k) {
  require(field.characteristic() == 2, ErrorCode::OddCharacteristic,
          "Euclidean self-orthogonal twist needs characteristic 2, got " + field.name());
  detail::check_pipeline_input(field, points, k);
  const Vector u = quadratic_full_weight(field, points, dual_twist_vector(field, points), k);
  return euclidean_twist(grs_code(field, points, k), u);
}

/// GRS_k(a, 1) lifted to GF(q^2) and twisted into a Hermitian self-orthogonal code.
/// Without `ext` the default quadratic extension of `field` is built.
inline SelfOrthogonalCode hermitian_so_grs(const FiniteField& field, const Vector& points, std::size_t k,
                                           std::optional<FiniteField> ext = std::nullopt) {
  detail::check_pipeline_input(field, points, k);
  const FiniteField big = ext ? *ext : make_extension(field, 2);
  const Vector u = quadratic_full_weight(field, points, dual_twist_vector(field, points), k);
  return hermitian_twist(grs_code(field, points, k), u, big);
}

}  // namespace socodes
