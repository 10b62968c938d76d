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


#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "socodes/grs.hpp"

namespace socodes {
namespace {

template <class F>
void expect_code(ErrorCode code, F&& f) {
  try {
    f();
    FAIL() << "expected " << to_string(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

Vector first_points(std::size_t n) {
  Vector a(n);
  for (std::size_t i = 0; i < n; ++i) a[i] = static_cast<Elem>(i);
  return a;
}

// Monomial evaluation rows built directly, without grs_code.
std::vector<Vector> vandermonde(const FiniteField& f, const Vector& a, const Vector& v, std::size_t k) {
  std::vector<Vector> rows(k, Vector(a.size()));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < a.size(); ++i) {
      Elem p = 1;
      for (std::size_t e = 0; e < j; ++e) p = f.mul(p, a[i]);
      rows[j][i] = f.mul(v[i], p);
    }
  return rows;
}

TEST(Grs, ReedSolomonExample) {
  const FiniteField f = make_field(5, 1);
  const auto c = grs_code(f, {0, 1, 2, 3}, 2);
  EXPECT_EQ(c.dimension(), 2u);
  EXPECT_EQ(min_distance(c), 3u);
  EXPECT_EQ(oracle::min_weight(oracle::combinations(f, vandermonde(f, {0, 1, 2, 3}, {1, 1, 1, 1}, 2), 4)), 3u);
}

TEST(Grs, DualTwistExample) {
  const FiniteField f = make_field(5, 1);
  EXPECT_EQ(dual_twist_vector(f, {0, 1, 2, 3}).entries(), (Vector{1, 2, 3, 4}));
  // The unnormalized closed form gives (2, 4, 1, 3); both span the kernel of the dual system.
  const auto kernel = kernel_basis(dual_twist_system(f, {0, 1, 2, 3}, TwistVector::ones(f, 4)));
  ASSERT_EQ(kernel.size(), 1u);
  EXPECT_EQ(oracle::dot(f, kernel[0], {1, 1, 1, 1}), 0u);
  const auto line = LinearCode::from_generator(f, {{2, 4, 1, 3}});
  EXPECT_TRUE(line.contains(kernel[0]));
}

TEST(Grs, DualTwistOfFullLengthRs) {
  // Over all of GF(q), Π_{j≠i}(a_i - a_j) = -1, so v' is constant.
  for (std::uint32_t q : {5u, 7u, 8u, 9u}) {
    const FiniteField f = field_of_order(q);
    EXPECT_EQ(dual_twist_vector(f, all_elements(f)).entries(), Vector(q, 1));
  }
}

TEST(Grs, QuadraticSelection) {
  const FiniteField f5 = make_field(5, 1);
  EXPECT_EQ(smallest_irreducible_quadratic(f5), (std::array<Elem, 3>{2, 0, 1}));
  const FiniteField f4 = make_field(2, 2);
  EXPECT_EQ(smallest_irreducible_quadratic(f4), (std::array<Elem, 3>{2, 1, 1}));
  EXPECT_EQ(smallest_irreducible_quadratic(make_field(2, 1)), (std::array<Elem, 3>{1, 1, 1}));
}

TEST(Grs, QuadraticFullWeightExample) {
  const FiniteField f = make_field(5, 1);
  const Vector u = quadratic_full_weight(f, {0, 1, 2, 3}, TwistVector(f, {2, 4, 1, 3}), 1);
  EXPECT_EQ(u, (Vector{4, 2, 1, 3}));
  expect_code(ErrorCode::DimensionTooLarge,
              [&] { quadratic_full_weight(f, {0, 1, 2, 3}, TwistVector(f, {2, 4, 1, 3}), 2); });
}

TEST(Grs, EuclideanPipelineGf4) {
  const FiniteField f = make_field(2, 2);
  const auto so = euclidean_so_grs(f, all_elements(f), 1);
  EXPECT_TRUE(is_self_orthogonal(so.code, InnerProduct::euclidean));
  EXPECT_EQ(so.code.dimension(), 1u);
  EXPECT_EQ(min_distance(so.code), 4u);
  EXPECT_EQ(min_distance(dual_euclidean(so.code)), 2u);
}

TEST(Grs, EuclideanPipelineGf8) {
  const FiniteField f = make_field(2, 3);
  const auto so = euclidean_so_grs(f, all_elements(f), 3);
  EXPECT_TRUE(is_self_orthogonal(so.code, InnerProduct::euclidean));
  EXPECT_EQ(so.code.dimension(), 3u);
  EXPECT_EQ(min_distance(so.code), 6u);
  EXPECT_EQ(min_distance(dual_euclidean(so.code)), 4u);
}

TEST(Grs, HermitianPipelineGf5) {
  const FiniteField f = make_field(5, 1);
  const auto so = hermitian_so_grs(f, {0, 1, 2, 3}, 1);
  EXPECT_EQ(so.full_weight_word, (Vector{2, 1, 3, 4}));
  EXPECT_EQ(so.code.field().order(), 25u);
  EXPECT_TRUE(is_self_orthogonal(so.code, InnerProduct::hermitian));
  EXPECT_EQ(min_distance(so.code), 4u);
  EXPECT_EQ(min_distance(dual_hermitian(so.code)), 2u);
  // The quoted witness (4, 2, 1, 3) also lies in the dual of GRS_1 and yields a valid twist.
  const FiniteField f25 = make_extension(f, 2);
  const auto alt = hermitian_twist(grs_code(f, {0, 1, 2, 3}, 1), {4, 2, 1, 3}, f25);
  EXPECT_TRUE(is_self_orthogonal(alt.code, InnerProduct::hermitian));
}

TEST(Grs, HermitianPipelineGf4) {
  const FiniteField f = make_field(2, 2);
  const auto so = hermitian_so_grs(f, all_elements(f), 1);
  EXPECT_EQ(so.code.field().order(), 16u);
  EXPECT_TRUE(is_self_orthogonal(so.code, InnerProduct::hermitian));
  EXPECT_EQ(min_distance(so.code), 4u);
}

TEST(Grs, PipelineErrors) {
  expect_code(ErrorCode::OddCharacteristic, [] { euclidean_so_grs(make_field(5, 1), {0, 1, 2, 3}, 1); });
  expect_code(ErrorCode::DimensionTooLarge, [] { hermitian_so_grs(make_field(3, 1), {0, 1, 2}, 1); });
  expect_code(ErrorCode::RepeatedPoints, [] { grs_code(make_field(5, 1), {0, 1, 1}, 1); });
  expect_code(ErrorCode::InvalidDimension, [] { grs_code(make_field(5, 1), {0, 1, 2}, 4); });
  expect_code(ErrorCode::InvalidDimension, [] { grs_code(make_field(5, 1), {0, 1, 2}, 0); });
}

TEST(Grs, MdsAndDualProperty) {
  std::mt19937 rng(99);
  for (std::uint32_t q : {3u, 4u, 5u, 7u, 8u}) {
    const FiniteField f = field_of_order(q);
    for (int trial = 0; trial < 8; ++trial) {
      Vector a = all_elements(f);
      std::shuffle(a.begin(), a.end(), rng);
      a.resize(2 + rng() % (q - 1));
      const std::size_t n = a.size();
      Vector v(n);
      for (auto& e : v) e = 1 + rng() % (q - 1);
      const TwistVector tv(f, v);
      for (std::size_t k = 1; k <= n; ++k) {
        const auto c = grs_code(GrsSpec{f, a, tv, k});
        EXPECT_EQ(c, LinearCode::from_generator(f, vandermonde(f, a, v, k), n));
        if (oracle::ipow(q, k) <= 100000) {
          EXPECT_EQ(min_distance(c), n - k + 1);
        }
        if (k < n) {
          EXPECT_EQ(dual_euclidean(c), grs_code(GrsSpec{f, a, dual_twist_vector(f, a, tv), n - k}));
        }
      }
    }
  }
}

TEST(Grs, PipelinesProperty) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    const FiniteField f = field_of_order(q);
    for (std::size_t n = 4; n <= q; ++n) {
      const Vector a = first_points(n);
      for (std::size_t k = 1; n >= 2 * k + 2; ++k) {
        const Vector vp = dual_twist_vector(f, a).entries();
        const Vector u = quadratic_full_weight(f, a, TwistVector(f, vp), k);
        EXPECT_EQ(oracle::weight(u), n);
        for (const auto& row : vandermonde(f, a, Vector(n, 1), 2 * k - 1)) EXPECT_EQ(oracle::dot(f, row, u), 0u);

        const auto h = hermitian_so_grs(f, a, k);
        EXPECT_TRUE(is_self_orthogonal(h.code, InnerProduct::hermitian));
        EXPECT_EQ(h.code.dimension(), k);
        for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(h.code.field().pow(h.twist[i], q + 1), u[i]);
        if (f.characteristic() == 2) {
          const auto e = euclidean_so_grs(f, a, k);
          EXPECT_TRUE(is_self_orthogonal(e.code, InnerProduct::euclidean));
          for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(f.mul(e.twist[i], e.twist[i]), u[i]);
          EXPECT_EQ(min_distance(e.code), n - k + 1);
        }
      }
    }
  }
}

}  // namespace
}  // namespace socodes
