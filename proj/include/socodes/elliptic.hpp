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
 * @file elliptic.hpp
 * @brief One-point algebraic geometry codes C_L(D, m·O) on elliptic curves.
 *
 * Curves are in general Weierstrass form y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 so that
 * characteristic 2 and 3 are covered. L(m·O) has the basis x^i y^j (j <= 1, 2i + 3j <= m), ordered by
 * pole order at O. The self-orthogonal twist takes a full-weight codeword of the Euclidean dual of the
 * Schur square, found by exhaustive search.
 */

#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "socodes/error.hpp"
#include "socodes/field.hpp"
#include "socodes/grs.hpp"
#include "socodes/linear_code.hpp"

namespace socodes {

struct CurvePoint {
  bool infinity = false;
  Elem x = 0;
  Elem y = 0;

  static CurvePoint at_infinity() { return {true, 0, 0}; }
  static CurvePoint affine(Elem x, Elem y) { return {false, x, y}; }

  friend auto operator<=>(const CurvePoint&, const CurvePoint&) = default;
};

class EllipticCurve {
 public:
  /// Validated nonsingular curve; coefficients are {a1, a2, a3, a4, a6}.
  EllipticCurve(FiniteField field, std::array<Elem, 5> a) : field_(std::move(field)), a_(a) {
    for (Elem c : a_) field_.check(c);
    require(discriminant() != 0, ErrorCode::SingularCurve, "curve has zero discriminant");
  }

  const FiniteField& field() const { return field_; }
  const std::array<Elem, 5>& coefficients() const { return a_; }

  Elem discriminant() const {
    const FiniteField& f = field_;
    const auto [a1, a2, a3, a4, a6] = a_;
    auto n = [&](std::int64_t k) { return f.from_int(k); };
    const Elem b2 = f.add(f.mul(a1, a1), f.mul(n(4), a2));
    const Elem b4 = f.add(f.mul(n(2), a4), f.mul(a1, a3));
    const Elem b6 = f.add(f.mul(a3, a3), f.mul(n(4), a6));
    Elem b8 = f.mul(f.mul(a1, a1), a6);
    b8 = f.add(b8, f.mul(n(4), f.mul(a2, a6)));
    b8 = f.sub(b8, f.mul(a1, f.mul(a3, a4)));
    b8 = f.add(b8, f.mul(a2, f.mul(a3, a3)));
    b8 = f.sub(b8, f.mul(a4, a4));
    // Δ = -b2^2 b8 - 8 b4^3 - 27 b6^2 + 9 b2 b4 b6
    Elem d = f.neg(f.mul(f.mul(b2, b2), b8));
    d = f.sub(d, f.mul(n(8), f.pow(b4, 3)));
    d = f.sub(d, f.mul(n(27), f.mul(b6, b6)));
    d = f.add(d, f.mul(n(9), f.mul(b2, f.mul(b4, b6))));
    return d;
  }

  /// lhs - rhs of the Weierstrass equation at (x, y).
  Elem equation(Elem x, Elem y) const {
    const FiniteField& f = field_;
    const auto [a1, a2, a3, a4, a6] = a_;
    const Elem lhs = f.add(f.mul(y, y), f.add(f.mul(a1, f.mul(x, y)), f.mul(a3, y)));
    Elem rhs = f.mul(x, f.mul(x, x));
    rhs = f.add(rhs, f.mul(a2, f.mul(x, x)));
    rhs = f.add(rhs, f.mul(a4, x));
    rhs = f.add(rhs, a6);
    return f.sub(lhs, rhs);
  }

  bool on_curve(const CurvePoint& p) const { return p.infinity || equation(p.x, p.y) == 0; }

  friend bool operator==(const EllipticCurve& a, const EllipticCurve& b) { return a.a_ == b.a_ && a.field_ == b.field_; }

 private:
  FiniteField field_;
  std::array<Elem, 5> a_;
};

/// Affine rational points in (x, y) index order.
inline std::vector<CurvePoint> affine_points(const EllipticCurve& e) {
  std::vector<CurvePoint> out;
  const Elem q = e.field().order();
  for (Elem x = 0; x < q; ++x)
    for (Elem y = 0; y < q; ++y)
      if (e.equation(x, y) == 0) out.push_back(CurvePoint::affine(x, y));
  return out;
}

/// All rational points: O first, then the affine points. The count lies in the Hasse-Weil window.
inline std::vector<CurvePoint> points(const EllipticCurve& e) {
  std::vector<CurvePoint> out{CurvePoint::at_infinity()};
  auto affine = affine_points(e);
  out.insert(out.end(), affine.begin(), affine.end());
  const std::int64_t q = e.field().order();
  const std::int64_t t = static_cast<std::int64_t>(out.size()) - (q + 1);
  if (t * t > 4 * q) throw std::logic_error("point count outside the Hasse-Weil window");
  return out;
}

/// x^x_power y^y_power, pole order 2 x_power + 3 y_power at O.
struct Monomial {
  unsigned x_power = 0;
  unsigned y_power = 0;

  unsigned pole_order() const { return 2 * x_power + 3 * y_power; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct RrBasis {
  std::size_t bound = 0;
  std::vector<Monomial> functions;
};

/// Basis of L(m·O): one monomial for every pole order in {0, 2, 3, ..., m}.
inline RrBasis rr_basis(const EllipticCurve&, std::size_t m) {
  require(m >= 1, ErrorCode::DegreeOutOfRange, "need m >= 1");
  RrBasis basis{m, {}};
  for (std::size_t order = 0; order <= m; ++order) {
    if (order == 1) continue;
    const unsigned y = order % 2 == 0 ? 0 : 1;
    basis.functions.push_back({static_cast<unsigned>((order - 3 * y) / 2), y});
  }
  return basis;
}

inline Elem evaluate(const FiniteField& f, const Monomial& mono, const CurvePoint& p) {
  return f.mul(f.pow(p.x, mono.x_power), f.pow(p.y, mono.y_power));
}

/// C_L(D, m·O) with D the sum of the affine points S; dimension m for 1 <= m < |S|.
inline LinearCode elliptic_code(const EllipticCurve& e, const std::vector<CurvePoint>& support, std::size_t m) {
  const std::size_t n = support.size();
  std::set<CurvePoint> seen;
  for (const auto& p : support) {
    require(!p.infinity, ErrorCode::InfinityInSupport, "the point at infinity carries the divisor G");
    e.field().check(p.x);
    e.field().check(p.y);
    require(e.on_curve(p), ErrorCode::PointNotOnCurve, "support point is not on the curve");
    require(seen.insert(p).second, ErrorCode::DuplicatePoints, "support points must be distinct");
  }
  require(m >= 1 && m < n, ErrorCode::DegreeOutOfRange,
          "need 1 <= m < n, got m=" + std::to_string(m) + ", n=" + std::to_string(n));
  std::vector<Vector> rows;
  for (const auto& mono : rr_basis(e, m).functions) {
    Vector row(n);
    for (std::size_t i = 0; i < n; ++i) row[i] = evaluate(e.field(), mono, support[i]);
    rows.push_back(std::move(row));
  }
  LinearCode code = LinearCode::from_generator(e.field(), rows, n);
  if (code.dimension() != m) throw std::logic_error("evaluation map is not injective on L(m·O)");
  return code;
}

/// Twists C_L(D, m·O) into a self-orthogonal code when the dual of its Schur square has a
/// full-weight codeword; returns nothing when the search finds none.
inline std::optional<SelfOrthogonalCode> so_elliptic(const EllipticCurve& e, const std::vector<CurvePoint>& support,
                                                     std::size_t m, InnerProduct mode,
                                                     std::uint64_t budget = kDefaultBudget,
                                                     std::optional<FiniteField> ext = std::nullopt) {
  if (mode == InnerProduct::euclidean)
    require(e.field().characteristic() == 2, ErrorCode::OddCharacteristic,
            "Euclidean self-orthogonal twist needs characteristic 2, got " + e.field().name());
  const LinearCode code = elliptic_code(e, support, m);
  const LinearCode dual_square = dual_euclidean(schur_square(code));
  const auto u = full_weight_search(dual_square, budget);
  if (!u) return std::nullopt;
  if (mode == InnerProduct::euclidean) return euclidean_twist(code, *u);
  return hermitian_twist(code, *u, ext ? *ext : make_extension(e.field(), 2));
}

}  // namespace socodes
