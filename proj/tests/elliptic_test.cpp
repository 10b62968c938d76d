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

#include <cmath>
#include <random>

#include "oracle.hpp"
#include "socodes/elliptic.hpp"

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

const FiniteField& gf5() {
  static const FiniteField f = make_field(5, 1);
  return f;
}

EllipticCurve e5() { return {gf5(), {0, 0, 0, 1, 1}}; }

std::vector<CurvePoint> affine8() { return affine_points(e5()); }

TEST(Elliptic, ShortWeierstrassDiscriminant) {
  // -16 (4 a4^3 + 27 a6^2) = -16 * 31 = 4 mod 5.
  EXPECT_EQ(e5().discriminant(), gf5().from_int(-16 * 31));
  expect_code(ErrorCode::SingularCurve, [] { EllipticCurve(gf5(), {0, 0, 0, 0, 0}); });
  EXPECT_NE(EllipticCurve(make_field(2, 1), {0, 0, 1, 0, 0}).discriminant(), 0u);
  expect_code(ErrorCode::SingularCurve, [] { EllipticCurve(make_field(2, 1), {0, 0, 0, 0, 1}); });
}

TEST(Elliptic, PointCounts) {
  const auto pts = points(e5());
  EXPECT_EQ(pts.size(), 9u);
  EXPECT_TRUE(pts.front().infinity);
  // Squares mod 5 are {0, 1, 4}: count y with y^2 = x^3 + x + 1 for every x.
  std::size_t affine = 0;
  for (int x = 0; x < 5; ++x)
    for (int y = 0; y < 5; ++y) affine += (y * y - (x * x * x + x + 1)) % 5 == 0;
  EXPECT_EQ(affine + 1, pts.size());
  const auto binary = points(EllipticCurve(make_field(2, 1), {0, 0, 1, 0, 0}));
  EXPECT_EQ(binary.size(), 3u);
  EXPECT_EQ(binary[1], CurvePoint::affine(0, 0));
  EXPECT_EQ(binary[2], CurvePoint::affine(0, 1));
}

TEST(Elliptic, CurvesOverSmallFieldsProperty) {
  std::mt19937 rng(1234);
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u}) {
    const FiniteField f = field_of_order(q);
    int built = 0;
    for (int trial = 0; trial < 40 && built < 6; ++trial) {
      std::array<Elem, 5> a{};
      for (auto& c : a) c = rng() % q;
      if (f.characteristic() != 2) a[0] = a[2] = 0;
      std::optional<EllipticCurve> e;
      try {
        e.emplace(f, a);
      } catch (const Error& err) {
        EXPECT_EQ(err.code(), ErrorCode::SingularCurve);
        continue;
      }
      ++built;
      const auto pts = points(*e);
      for (const auto& p : pts) EXPECT_TRUE(e->on_curve(p));
      const double t = static_cast<double>(pts.size()) - (q + 1.0);
      EXPECT_LE(std::abs(t), 2 * std::sqrt(static_cast<double>(q)));
      EXPECT_TRUE(std::is_sorted(pts.begin() + 1, pts.end()));
    }
    EXPECT_GT(built, 0) << "q=" << q;
  }
}

TEST(Elliptic, RiemannRochBasis) {
  EXPECT_EQ(rr_basis(e5(), 1).functions, (std::vector<Monomial>{{0, 0}}));
  EXPECT_EQ(rr_basis(e5(), 3).functions, (std::vector<Monomial>{{0, 0}, {1, 0}, {0, 1}}));
  EXPECT_EQ(rr_basis(e5(), 5).functions, (std::vector<Monomial>{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}}));
  for (std::size_t m = 1; m <= 12; ++m) {
    const auto b = rr_basis(e5(), m).functions;
    EXPECT_EQ(b.size(), m);
    for (std::size_t i = 0; i + 1 < b.size(); ++i) EXPECT_LT(b[i].pole_order(), b[i + 1].pole_order());
    for (const auto& mono : b) {
      EXPECT_LE(mono.y_power, 1u);
      EXPECT_LE(mono.pole_order(), m);
    }
  }
}

TEST(Elliptic, CodeOnAllAffinePoints) {
  const auto c = elliptic_code(e5(), affine8(), 3);
  EXPECT_EQ(c.length(), 8u);
  EXPECT_EQ(c.dimension(), 3u);
  EXPECT_EQ(min_distance(c), 5u);
  // Oracle: all 125 combinations of the evaluations of 1, x, y.
  std::vector<Vector> rows(3, Vector(8));
  const auto s = affine8();
  for (std::size_t i = 0; i < 8; ++i) {
    rows[0][i] = 1;
    rows[1][i] = s[i].x;
    rows[2][i] = s[i].y;
  }
  EXPECT_EQ(oracle::min_weight(oracle::combinations(gf5(), rows, 8)), 5u);
  EXPECT_TRUE(elliptic_code(e5(), affine8(), 6).contains(schur_square(c)));
}

TEST(Elliptic, CodeBoundaries) {
  EXPECT_EQ(elliptic_code(e5(), affine8(), 1), LinearCode::from_generator(gf5(), {Vector(8, 1)}));
  expect_code(ErrorCode::DegreeOutOfRange, [] { elliptic_code(e5(), affine8(), 8); });
  auto with_o = affine8();
  with_o.push_back(CurvePoint::at_infinity());
  expect_code(ErrorCode::InfinityInSupport, [&] { elliptic_code(e5(), with_o, 2); });
  auto dup = affine8();
  dup[1] = dup[0];
  expect_code(ErrorCode::DuplicatePoints, [&] { elliptic_code(e5(), dup, 2); });
  expect_code(ErrorCode::PointNotOnCurve, [] { elliptic_code(e5(), {CurvePoint::affine(0, 0), CurvePoint::affine(0, 1)}, 1); });
}

TEST(Elliptic, HermitianTwistM2) {
  // Oracle: vectors of GF(5)^8 orthogonal to the evaluations of 1, x, x^2 (the Schur square of
  // span{1, x}). 5^5 of them, 580 without zero entries.
  const auto s = affine8();
  std::vector<Vector> rows(3, Vector(8));
  for (std::size_t i = 0; i < 8; ++i) {
    rows[0][i] = 1;
    rows[1][i] = s[i].x;
    rows[2][i] = gf5().mul(s[i].x, s[i].x);
  }
  const auto dual = oracle::orthogonal_vectors(gf5(), rows, 8);
  std::size_t full = 0;
  for (const auto& v : dual) full += oracle::weight(v) == 8;
  EXPECT_EQ(dual.size(), 3125u);
  EXPECT_EQ(full, 580u);

  const auto so = so_elliptic(e5(), s, 2, InnerProduct::hermitian);
  ASSERT_TRUE(so.has_value());
  EXPECT_EQ(count_full_weight(dual_euclidean(schur_square(elliptic_code(e5(), s, 2)))), 580u);
  EXPECT_NE(std::find(dual.begin(), dual.end(), so->full_weight_word), dual.end());
  EXPECT_EQ(oracle::weight(so->full_weight_word), 8u);
  EXPECT_TRUE(is_self_orthogonal(so->code, InnerProduct::hermitian));
  EXPECT_EQ(so->code.field().order(), 25u);
  EXPECT_EQ(weight_profile(so->code), weight_profile(lift_to_extension(elliptic_code(e5(), s, 2), so->code.field())));
}

TEST(Elliptic, SelfOrthogonalBoundaries) {
  expect_code(ErrorCode::OddCharacteristic, [] { so_elliptic(e5(), affine8(), 2, InnerProduct::euclidean); });
  // Schur square of C_L(D, 7 O) fills GF(5)^8, so the search space is the zero code.
  EXPECT_EQ(dual_euclidean(schur_square(elliptic_code(e5(), affine8(), 7))).dimension(), 0u);
  EXPECT_FALSE(so_elliptic(e5(), affine8(), 7, InnerProduct::hermitian));
}

TEST(Elliptic, EuclideanTwistInCharacteristicTwo) {
  // y^2 + y = x^3 over GF(4) and GF(8).
  for (std::uint32_t q : {4u, 8u}) {
    const FiniteField f = field_of_order(q);
    const EllipticCurve e(f, {0, 0, 1, 0, 0});
    const auto s = affine_points(e);
    for (std::size_t m = 1; 2 * m + 2 <= s.size(); ++m) {
      const auto so = so_elliptic(e, s, m, InnerProduct::euclidean);
      ASSERT_TRUE(so.has_value()) << "q=" << q << " m=" << m;
      EXPECT_TRUE(is_self_orthogonal(so->code, InnerProduct::euclidean));
      EXPECT_EQ(weight_profile(so->code), weight_profile(elliptic_code(e, s, m)));
      for (std::size_t i = 0; i < s.size(); ++i) EXPECT_EQ(f.mul(so->twist[i], so->twist[i]), so->full_weight_word[i]);
    }
  }
}

TEST(Elliptic, CodesOverSmallFieldsProperty) {
  std::mt19937 rng(77);
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u}) {
    const FiniteField f = field_of_order(q);
    int built = 0;
    for (int trial = 0; trial < 30 && built < 3; ++trial) {
      std::array<Elem, 5> a{};
      for (auto& c : a) c = rng() % q;
      std::optional<EllipticCurve> e;
      try {
        e.emplace(f, a);
      } catch (const Error&) {
        continue;
      }
      const auto s = affine_points(*e);
      if (s.size() < 3) continue;
      ++built;
      for (std::size_t m = 1; m <= 4 && m < s.size(); ++m) {
        const auto c = elliptic_code(*e, s, m);
        EXPECT_GE(c.dimension() + min_distance(c), s.size());
        if (2 * m < s.size()) {
          EXPECT_TRUE(elliptic_code(*e, s, 2 * m).contains(schur_square(c)));
        }
        if (oracle::ipow(q, s.size()) > 1'000'000) continue;
        const auto mode = f.characteristic() == 2 ? InnerProduct::euclidean : InnerProduct::hermitian;
        const auto so = so_elliptic(*e, s, m, mode);
        const bool any_full = count_full_weight(dual_euclidean(schur_square(c))) > 0;
        EXPECT_EQ(so.has_value(), any_full);
        if (so) {
          EXPECT_TRUE(is_self_orthogonal(so->code, mode));
          const LinearCode base = mode == InnerProduct::hermitian ? lift_to_extension(c, so->code.field()) : c;
          EXPECT_EQ(weight_profile(so->code), weight_profile(base));
        }
      }
    }
    EXPECT_GT(built, 0) << "q=" << q;
  }
}

}  // namespace
}  // namespace socodes
