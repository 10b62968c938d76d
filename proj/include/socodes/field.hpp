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
 * @file field.hpp
 * @brief Finite fields GF(p^m) in polynomial basis, with explicit towers GF(q) ⊂ GF(q^2).
 *
 * A field is either the prime field GF(p) or an extension B[x]/(f) of a base field B by a monic
 * irreducible f. Elements are packed into a single integer index: for an extension of degree d over
 * a base of order Q, the element c_0 + c_1 x + ... + c_{d-1} x^{d-1} has index
 * idx(c_0) + idx(c_1) Q + ... + idx(c_{d-1}) Q^{d-1}. Unrolled down to GF(p), the index is the
 * base-p number whose digits are the flattened GF(p) coefficients, lowest degree first.
 *
 * Consequences of the packing used throughout the library:
 * - 0 and 1 have indices 0 and 1 in every field;
 * - the base field of an extension occupies indices [0, Q), so the embedding of the base is the
 *   identity on indices and base membership is a range check;
 * - addition is digit-wise addition mod p on the base-p digits (XOR in characteristic 2).
 *
 * Element order, wherever the library needs one (searches, enumeration), is index order.
 */

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "socodes/error.hpp"

namespace socodes {

/// Packed field element index; meaningful only together with its field.
using Elem = std::uint32_t;

/// Upper limit on field orders handled by the library.
inline constexpr std::uint32_t kMaxFieldOrder = 1u << 24;

namespace detail {

struct FieldData {
  std::uint32_t p = 0;
  std::uint32_t degree = 1;  // over GF(p)
  std::uint32_t order = 0;
  std::shared_ptr<const FieldData> base;  // null for GF(p)
  std::uint32_t ext_degree = 1;           // over base
  std::vector<Elem> modulus;              // monic, low degree first, over base
  // Lookup tables, present when order <= kTableLimit.
  std::vector<std::uint8_t> add_tab;
  std::vector<std::uint8_t> mul_tab;
  std::vector<Elem> inv_tab;
};

inline constexpr std::uint32_t kTableLimit = 256;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline Elem slow_add(const FieldData& f, Elem a, Elem b) {
  if (f.p == 2) return a ^ b;
  if (!f.base) {
    Elem s = a + b;
    return s >= f.p ? s - f.p : s;
  }
  Elem r = 0, scale = 1;
  while (a != 0 || b != 0) {
    r += ((a % f.p + b % f.p) % f.p) * scale;
    a /= f.p;
    b /= f.p;
    scale *= f.p;
  }
  return r;
}

inline Elem neg(const FieldData& f, Elem a) {
  if (f.p == 2) return a;
  if (!f.base) return a == 0 ? 0 : f.p - a;
  Elem r = 0, scale = 1;
  while (a != 0) {
    r += ((f.p - a % f.p) % f.p) * scale;
    a /= f.p;
    scale *= f.p;
  }
  return r;
}

inline Elem add(const FieldData& f, Elem a, Elem b) {
  if (!f.add_tab.empty()) return f.add_tab[static_cast<std::size_t>(a) * f.order + b];
  return slow_add(f, a, b);
}

inline Elem sub(const FieldData& f, Elem a, Elem b) { return add(f, a, neg(f, b)); }

Elem mul(const FieldData& f, Elem a, Elem b);

inline Elem slow_mul(const FieldData& f, Elem a, Elem b) {
  if (!f.base) return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % f.p);
  const FieldData& B = *f.base;
  const std::uint32_t d = f.ext_degree;
  const Elem Q = B.order;
  std::vector<Elem> x(d), y(d), prod(2 * d - 1, 0);
  for (std::uint32_t i = 0; i < d; ++i) {
    x[i] = a % Q;
    a /= Q;
    y[i] = b % Q;
    b /= Q;
  }
  for (std::uint32_t i = 0; i < d; ++i) {
    if (x[i] == 0) continue;
    for (std::uint32_t j = 0; j < d; ++j) prod[i + j] = add(B, prod[i + j], mul(B, x[i], y[j]));
  }
  for (std::uint32_t i = 2 * d - 2; i >= d; --i) {
    const Elem c = prod[i];
    if (c == 0) continue;
    for (std::uint32_t j = 0; j < d; ++j)
      prod[i - d + j] = sub(B, prod[i - d + j], mul(B, c, f.modulus[j]));
  }
  Elem r = 0;
  for (std::uint32_t i = d; i-- > 0;) r = r * Q + prod[i];
  return r;
}

inline Elem mul(const FieldData& f, Elem a, Elem b) {
  if (!f.mul_tab.empty()) return f.mul_tab[static_cast<std::size_t>(a) * f.order + b];
  return slow_mul(f, a, b);
}

inline Elem pow_unsigned(const FieldData& f, Elem a, std::uint64_t e) {
  Elem result = 1;
  while (e > 0) {
    if (e & 1) result = mul(f, result, a);
    a = mul(f, a, a);
    e >>= 1;
  }
  return result;
}

inline Elem inv(const FieldData& f, Elem a) {
  require(a != 0, ErrorCode::DivisionByZero, "inverse of zero");
  if (!f.inv_tab.empty()) return f.inv_tab[a];
  return pow_unsigned(f, a, f.order - 2);
}

// Polynomials over a field: coefficient vectors, low degree first, no trailing zeros
// except for the zero polynomial which is empty.
using Poly = std::vector<Elem>;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

/// Remainder of a modulo the monic polynomial m.
inline Poly poly_rem(const FieldData& f, Poly a, const Poly& m) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const Elem c = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t j = 0; j <= dm; ++j) a[shift + j] = sub(f, a[shift + j], mul(f, c, m[j]));
    trim(a);
  }
  return a;
}

/// Trial division by every monic polynomial of degree 1..deg/2.
inline bool is_irreducible(const FieldData& f, const Poly& poly) {
  const std::size_t deg = poly.size() - 1;
  if (deg <= 1) return deg == 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= f.order;
    Poly divisor(d + 1);
    divisor[d] = 1;
    for (std::uint64_t t = 0; t < count; ++t) {
      std::uint64_t rest = t;
      for (std::size_t i = 0; i < d; ++i) {
        divisor[i] = static_cast<Elem>(rest % f.order);
        rest /= f.order;
      }
      if (poly_rem(f, poly, divisor).empty()) return false;
    }
  }
  return true;
}

/// Lexicographically smallest monic irreducible of the given degree, comparing coefficients
/// from the constant term upwards and elements in index order.
inline Poly smallest_irreducible(const FieldData& f, std::uint32_t degree) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < degree; ++i) count *= f.order;
  Poly poly(degree + 1);
  poly[degree] = 1;
  for (std::uint64_t t = 0; t < count; ++t) {
    // Constant coefficient is the most significant digit of the counter.
    std::uint64_t rest = t;
    for (std::uint32_t i = degree; i-- > 0;) {
      poly[i] = static_cast<Elem>(rest % f.order);
      rest /= f.order;
    }
    if (is_irreducible(f, poly)) return poly;
  }
  fail(ErrorCode::ReducibleModulus, "no irreducible polynomial found");
}

inline std::shared_ptr<const FieldData> make_prime_data(std::uint32_t p) {
  require(is_prime(p), ErrorCode::NonPrimeCharacteristic, std::to_string(p) + " is not prime");
  require(p <= kMaxFieldOrder, ErrorCode::FieldTooLarge, "characteristic too large");
  auto data = std::make_shared<FieldData>();
  data->p = p;
  data->degree = 1;
  data->order = p;
  data->ext_degree = 1;
  data->modulus = {0, 1};
  return data;
}

inline std::shared_ptr<const FieldData> make_extension_data(std::shared_ptr<const FieldData> base,
                                                            std::uint32_t degree, std::optional<Poly> modulus) {
  require(degree >= 1, ErrorCode::InvalidModulus, "extension degree must be at least 1");
  std::uint64_t order = 1;
  for (std::uint32_t i = 0; i < degree; ++i) {
    order *= base->order;
    require(order <= kMaxFieldOrder, ErrorCode::FieldTooLarge, "field order exceeds library limit");
  }
  Poly mod;
  if (modulus) {
    mod = *modulus;
    require(mod.size() == degree + 1 && mod.back() == 1, ErrorCode::InvalidModulus,
            "modulus must be monic of degree " + std::to_string(degree));
    for (Elem c : mod) require(c < base->order, ErrorCode::InvalidElement, "modulus coefficient out of range");
    require(is_irreducible(*base, mod), ErrorCode::ReducibleModulus, "modulus is reducible");
  } else {
    mod = smallest_irreducible(*base, degree);
  }
  auto data = std::make_shared<FieldData>();
  data->p = base->p;
  data->degree = base->degree * degree;
  data->order = static_cast<std::uint32_t>(order);
  data->base = std::move(base);
  data->ext_degree = degree;
  data->modulus = std::move(mod);
  if (data->order <= kTableLimit) {
    const std::size_t q = data->order;
    data->add_tab.resize(q * q);
    data->mul_tab.resize(q * q);
    data->inv_tab.assign(q, 0);
    for (Elem a = 0; a < q; ++a) {
      for (Elem b = 0; b < q; ++b) {
        data->add_tab[a * q + b] = static_cast<std::uint8_t>(slow_add(*data, a, b));
        const Elem m = slow_mul(*data, a, b);
        data->mul_tab[a * q + b] = static_cast<std::uint8_t>(m);
        if (m == 1) data->inv_tab[a] = b;
      }
    }
  }
  return data;
}

inline bool same_field(const FieldData& a, const FieldData& b) {
  if (&a == &b) return true;
  if (a.p != b.p || a.order != b.order || a.ext_degree != b.ext_degree || a.modulus != b.modulus) return false;
  if (!a.base || !b.base) return !a.base && !b.base;
  return same_field(*a.base, *b.base);
}

}  // namespace detail

class FieldElement;

/// Immutable handle to a finite field. Copies share the same tables.
class FiniteField {
 public:
  std::uint32_t characteristic() const { return data_->p; }
  /// Degree over the prime field.
  std::uint32_t degree() const { return data_->degree; }
  std::uint32_t order() const { return data_->order; }
  bool is_prime_field() const { return !data_->base; }

  /// Field this one was built over; empty for GF(p).
  std::optional<FiniteField> base() const {
    if (!data_->base) return std::nullopt;
    return FiniteField(data_->base);
  }
  std::uint32_t extension_degree() const { return data_->ext_degree; }
  /// Monic modulus over base(), low degree first. GF(p) reports x.
  const std::vector<Elem>& modulus() const { return data_->modulus; }
  bool is_quadratic_extension() const { return data_->base != nullptr && data_->ext_degree == 2; }

  std::string name() const { return "GF(" + std::to_string(order()) + ")"; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool contains(Elem a) const { return a < data_->order; }
  void check(Elem a) const {
    require(contains(a), ErrorCode::InvalidElement, "index " + std::to_string(a) + " not in " + name());
  }

  Elem add(Elem a, Elem b) const { return detail::add(*data_, a, b); }
  Elem sub(Elem a, Elem b) const { return detail::sub(*data_, a, b); }
  Elem neg(Elem a) const { return detail::neg(*data_, a); }
  Elem mul(Elem a, Elem b) const { return detail::mul(*data_, a, b); }
  Elem inv(Elem a) const { return detail::inv(*data_, a); }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::int64_t e) const {
    if (e < 0) {
      a = inv(a);
      e = -e;
    }
    if (a != 0 && e > 0) e = (e - 1) % (order() - 1) + 1;
    return detail::pow_unsigned(*data_, a, static_cast<std::uint64_t>(e));
  }
  /// Image of an integer under Z -> GF(p) -> this field.
  Elem from_int(std::int64_t n) const {
    const std::int64_t p = characteristic();
    return static_cast<Elem>(((n % p) + p) % p);
  }

  /// Flattened GF(p) coefficients, lowest degree first, length degree().
  std::vector<std::uint32_t> coefficients(Elem a) const {
    check(a);
    std::vector<std::uint32_t> out(degree());
    for (auto& c : out) {
      c = a % characteristic();
      a /= characteristic();
    }
    return out;
  }
  Elem from_coefficients(std::span<const std::uint32_t> coeffs) const {
    require(coeffs.size() == degree(), ErrorCode::InvalidElement,
            "expected " + std::to_string(degree()) + " coefficients for " + name());
    Elem r = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
      require(coeffs[i] < characteristic(), ErrorCode::InvalidElement, "coefficient out of range");
      r = r * characteristic() + coeffs[i];
    }
    return r;
  }

  FieldElement element(Elem a) const;

  /// Structural equality: same characteristic, same tower, same moduli.
  friend bool operator==(const FiniteField& a, const FiniteField& b) {
    return detail::same_field(*a.data_, *b.data_);
  }

  const detail::FieldData& data() const { return *data_; }

 private:
  explicit FiniteField(std::shared_ptr<const detail::FieldData> data) : data_(std::move(data)) {}

  friend FiniteField make_field(std::uint32_t, std::uint32_t, std::optional<std::vector<std::uint32_t>>);
  friend FiniteField make_extension(const FiniteField&, std::uint32_t, std::optional<std::vector<Elem>>);

  std::shared_ptr<const detail::FieldData> data_;
};

/// GF(p^m) over GF(p). Without a modulus the lexicographically smallest monic irreducible is used
/// (coefficients compared from the constant term up). For m == 1 the result is GF(p).
inline FiniteField make_field(std::uint32_t p, std::uint32_t m,
                              std::optional<std::vector<std::uint32_t>> modulus = std::nullopt) {
  require(m >= 1, ErrorCode::InvalidModulus, "degree must be at least 1");
  auto prime = detail::make_prime_data(p);
  if (m == 1) {
    if (modulus) {
      require(modulus->size() == 2 && (*modulus)[1] == 1 && (*modulus)[0] < p, ErrorCode::InvalidModulus,
              "modulus must be monic of degree 1");
    }
    return FiniteField(prime);
  }
  return FiniteField(detail::make_extension_data(prime, m, std::move(modulus)));
}

/// Extension of `base` of the given degree. The result keeps `base` as an explicit subfield.
inline FiniteField make_extension(const FiniteField& base, std::uint32_t degree = 2,
                                  std::optional<std::vector<Elem>> modulus = std::nullopt) {
  return FiniteField(detail::make_extension_data(base.data_, degree, std::move(modulus)));
}

/// Splits q = p^m; empty if q is not a prime power.
inline std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q;
  std::uint32_t m = 0;
  while (q % p == 0) {
    q /= p;
    ++m;
  }
  if (q != 1) return std::nullopt;
  return std::make_pair(static_cast<std::uint32_t>(p), m);
}

/// Field of order q with the default modulus.
inline FiniteField field_of_order(std::uint64_t q) {
  auto pm = prime_power(q);
  require(pm.has_value(), ErrorCode::NonPrimeCharacteristic, std::to_string(q) + " is not a prime power");
  return make_field(pm->first, pm->second);
}

/// Value type pairing an index with its field. Mixed-field arithmetic throws FieldMismatch.
class FieldElement {
 public:
  FieldElement(FiniteField field, Elem value) : field_(std::move(field)), value_(value) { field_.check(value_); }

  const FiniteField& field() const { return field_; }
  Elem value() const { return value_; }
  bool is_zero() const { return value_ == 0; }
  std::vector<std::uint32_t> coefficients() const { return field_.coefficients(value_); }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    a.match(b);
    return {a.field_, a.field_.add(a.value_, b.value_)};
  }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    a.match(b);
    return {a.field_, a.field_.sub(a.value_, b.value_)};
  }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    a.match(b);
    return {a.field_, a.field_.mul(a.value_, b.value_)};
  }
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    a.match(b);
    return {a.field_, a.field_.div(a.value_, b.value_)};
  }
  FieldElement operator-() const { return {field_, field_.neg(value_)}; }
  FieldElement inv() const { return {field_, field_.inv(value_)}; }
  FieldElement pow(std::int64_t e) const { return {field_, field_.pow(value_, e)}; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.value_ == b.value_ && a.field_ == b.field_;
  }

 private:
  void match(const FieldElement& other) const {
    require(field_ == other.field_, ErrorCode::FieldMismatch,
            "operands in " + field_.name() + " and " + other.field_.name());
  }

  FiniteField field_;
  Elem value_;
};

inline FieldElement FiniteField::element(Elem a) const { return FieldElement(*this, a); }

/// x^q, where q must be the order of a subfield of x's field.
inline Elem frobenius(const FiniteField& field, Elem x, std::uint64_t base_order) {
  auto pm = prime_power(base_order);
  require(pm && pm->first == field.characteristic() && field.degree() % pm->second == 0, ErrorCode::InvalidBaseOrder,
          std::to_string(base_order) + " is not a subfield order of " + field.name());
  field.check(x);
  return detail::pow_unsigned(field.data(), x, base_order);
}

inline FieldElement frobenius(const FieldElement& x, std::uint64_t base_order) {
  return {x.field(), frobenius(x.field(), x.value(), base_order)};
}

/// Euler's criterion; every element is a square in characteristic 2.
inline bool is_square(const FiniteField& field, Elem x) {
  field.check(x);
  if (field.characteristic() == 2 || x == 0) return true;
  return detail::pow_unsigned(field.data(), x, (field.order() - 1) / 2) == 1;
}

inline bool is_square(const FieldElement& x) { return is_square(x.field(), x.value()); }

/// The unique square root in characteristic 2, x^(2^(m-1)) for a field of order 2^m.
inline Elem sqrt_char2(const FiniteField& field, Elem x) {
  require(field.characteristic() == 2, ErrorCode::OddCharacteristic,
          "square roots need characteristic 2, got " + field.name());
  field.check(x);
  for (std::uint32_t i = 1; i < field.degree(); ++i) x = field.mul(x, x);
  return x;
}

inline FieldElement sqrt_char2(const FieldElement& x) { return {x.field(), sqrt_char2(x.field(), x.value())}; }

/// Generator of the multiplicative group with the smallest index.
inline Elem smallest_generator(const FiniteField& field) {
  const std::uint64_t group = field.order() - 1;
  std::vector<std::uint64_t> primes;
  std::uint64_t rest = group;
  for (std::uint64_t d = 2; d * d <= rest; ++d) {
    if (rest % d != 0) continue;
    primes.push_back(d);
    while (rest % d == 0) rest /= d;
  }
  if (rest > 1) primes.push_back(rest);
  for (Elem g = 1; g < field.order(); ++g) {
    bool generator = true;
    for (auto r : primes) {
      if (detail::pow_unsigned(field.data(), g, group / r) == 1) {
        generator = false;
        break;
      }
    }
    if (generator) return g;
  }
  return 1;  // GF(2): the group is trivial
}

/// Some v in GF(q^2)* with v^(q+1) = u for u in GF(q)*. With γ the smallest generator of GF(q^2)*,
/// returns γ^t for the smallest t >= 0 such that (γ^(q+1))^t = u.
inline Elem norm_root(const FiniteField& ext, Elem u) {
  require(ext.is_quadratic_extension(), ErrorCode::NotAnExtensionField, ext.name() + " is not a quadratic extension");
  const std::uint32_t q = ext.base()->order();
  require(u != 0, ErrorCode::ZeroInput, "norm_root of zero");
  require(u < q, ErrorCode::NotInBaseField, "element is not in the base field GF(" + std::to_string(q) + ")");
  const Elem gamma = smallest_generator(ext);
  const Elem norm = detail::pow_unsigned(ext.data(), gamma, q + 1);
  Elem acc = 1;
  std::uint32_t t = 0;
  while (acc != u) {
    acc = ext.mul(acc, norm);
    ++t;
  }
  return detail::pow_unsigned(ext.data(), gamma, t);
}

inline FieldElement norm_root(const FieldElement& u) { return {u.field(), norm_root(u.field(), u.value())}; }

/// Image of x under GF(q) -> GF(q^2). `ext` must have been built over `base`.
inline Elem embed(const FiniteField& base, Elem x, const FiniteField& ext) {
  auto registered = ext.base();
  require(registered && *registered == base, ErrorCode::NoRegisteredEmbedding,
          ext.name() + " is not registered as an extension of " + base.name());
  base.check(x);
  return x;
}

inline FieldElement embed(const FieldElement& x, const FiniteField& ext) {
  return {ext, embed(x.field(), x.value(), ext)};
}

/// Whether x (an element of an extension) lies in the registered base field.
inline bool in_base_field(const FiniteField& ext, Elem x) {
  auto base = ext.base();
  return base && x < base->order();
}

}  // namespace socodes
