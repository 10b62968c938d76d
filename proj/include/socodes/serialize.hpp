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

// JSON forms of fields, elements, codes, curves and quantum parameters.
//
//   field    {"p": 5, "m": 2, "modulus": [2, 0, 1]}           modulus over GF(p), low degree first
//            {"p": 2, "m": 4, "base": {...}, "modulus": [...]} tower level: modulus entries are
//                                                              elements of the base field
//   element  [c_0, ..., c_{m-1}]                               GF(p) coefficients, low degree first
//   code     {"field": ..., "n": 4, "k": 2, "generator": [[element, ...], ...]}
//
// Objects use sorted keys, so dump() of equal values is byte-identical.

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "socodes/elliptic.hpp"
#include "socodes/error.hpp"
#include "socodes/field.hpp"
#include "socodes/grs.hpp"
#include "socodes/linear_code.hpp"
#include "socodes/quantum.hpp"

namespace socodes {

using Json = nlohmann::json;

namespace detail {

template <class T>
T get_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorCode::ParseError, std::string("missing key \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, std::string("bad value for \"") + key + "\": " + e.what());
  }
}

}  // namespace detail

inline Json element_to_json(const FiniteField& f, Elem a) { return Json(f.coefficients(a)); }

inline Elem element_from_json(const FiniteField& f, const Json& j) {
  if (!j.is_array()) fail(ErrorCode::ParseError, "element must be a coefficient array");
  std::vector<std::uint32_t> coeffs;
  for (const auto& c : j) {
    if (!c.is_number_integer() || c.get<std::int64_t>() < 0)
      fail(ErrorCode::ParseError, "element coefficients must be non-negative integers");
    coeffs.push_back(c.get<std::uint32_t>());
  }
  return f.from_coefficients(coeffs);
}

inline Json vector_to_json(const FiniteField& f, const Vector& v) {
  Json out = Json::array();
  for (Elem a : v) out.push_back(element_to_json(f, a));
  return out;
}

inline Vector vector_from_json(const FiniteField& f, const Json& j) {
  if (!j.is_array()) fail(ErrorCode::ParseError, "vector must be an array of elements");
  Vector out;
  for (const auto& e : j) out.push_back(element_from_json(f, e));
  return out;
}

inline Json field_to_json(const FiniteField& f) {
  Json j;
  j["p"] = f.characteristic();
  j["m"] = f.degree();
  auto base = f.base();
  if (!base || base->is_prime_field()) {
    j["modulus"] = f.modulus();
  } else {
    j["base"] = field_to_json(*base);
    j["modulus"] = vector_to_json(*base, f.modulus());
  }
  return j;
}

inline FiniteField field_from_json(const Json& j) {
  const auto p = detail::get_field<std::uint32_t>(j, "p");
  const auto m = detail::get_field<std::uint32_t>(j, "m");
  if (j.contains("base")) {
    const FiniteField base = field_from_json(j.at("base"));
    if (base.characteristic() != p || m % base.degree() != 0 || m == base.degree())
      fail(ErrorCode::ParseError, "tower degree is inconsistent with its base");
    return make_extension(base, m / base.degree(), vector_from_json(base, j.at("modulus")));
  }
  std::optional<std::vector<std::uint32_t>> modulus;
  if (j.contains("modulus")) modulus = detail::get_field<std::vector<std::uint32_t>>(j, "modulus");
  return make_field(p, m, modulus);
}

inline Json code_to_json(const LinearCode& c) {
  Json gen = Json::array();
  for (const auto& row : c.rows()) gen.push_back(vector_to_json(c.field(), row));
  return {{"field", field_to_json(c.field())}, {"n", c.length()}, {"k", c.dimension()}, {"generator", gen}};
}

/// Parses a code; the generator is canonicalized, so `k` and the rows must already be reduced
/// for the result to equal the stored form. Use code_is_canonical() to check.
inline LinearCode code_from_json(const Json& j) {
  const FiniteField f = field_from_json(j.at("field"));
  const auto n = detail::get_field<std::size_t>(j, "n");
  std::vector<Vector> rows;
  for (const auto& row : j.at("generator")) rows.push_back(vector_from_json(f, row));
  return LinearCode::from_generator(f, rows, n);
}

/// Whether the JSON generator is exactly the canonical (RREF, full rank) generator of its row space.
inline bool code_is_canonical(const Json& j) {
  const LinearCode c = code_from_json(j);
  return code_to_json(c) == j;
}

inline Json twist_to_json(const TwistVector& v) { return vector_to_json(v.field(), v.entries()); }

inline TwistVector twist_from_json(const FiniteField& f, const Json& j) { return {f, vector_from_json(f, j)}; }

inline Json profile_to_json(const WeightProfile& w) { return Json(w.counts); }

inline Json grs_spec_to_json(const GrsSpec& spec) {
  return {{"field", field_to_json(spec.field)},
          {"points", vector_to_json(spec.field, spec.points)},
          {"twist", twist_to_json(spec.twist_or_ones())},
          {"k", spec.k}};
}

inline GrsSpec grs_spec_from_json(const Json& j) {
  const FiniteField f = field_from_json(j.at("field"));
  GrsSpec spec{f, vector_from_json(f, j.at("points")), std::nullopt, detail::get_field<std::size_t>(j, "k")};
  if (j.contains("twist")) spec.twist = twist_from_json(f, j.at("twist"));
  spec.validate();
  return spec;
}

inline Json curve_to_json(const EllipticCurve& e) {
  Json a = Json::array();
  for (Elem c : e.coefficients()) a.push_back(element_to_json(e.field(), c));
  return {{"field", field_to_json(e.field())}, {"a", a}};
}

inline EllipticCurve curve_from_json(const Json& j) {
  const FiniteField f = field_from_json(j.at("field"));
  const Vector a = vector_from_json(f, j.at("a"));
  if (a.size() != 5) fail(ErrorCode::ParseError, "curve needs five coefficients a1, a2, a3, a4, a6");
  return {f, {a[0], a[1], a[2], a[3], a[4]}};
}

inline Json point_to_json(const FiniteField& f, const CurvePoint& p) {
  if (p.infinity) return "infinity";
  return {{"x", element_to_json(f, p.x)}, {"y", element_to_json(f, p.y)}};
}

inline CurvePoint point_from_json(const FiniteField& f, const Json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() != "infinity") fail(ErrorCode::ParseError, "unknown point literal");
    return CurvePoint::at_infinity();
  }
  return CurvePoint::affine(element_from_json(f, j.at("x")), element_from_json(f, j.at("y")));
}

inline Json quantum_to_json(const QuantumParams& p) {
  return {{"q", p.q},
          {"n", p.n},
          {"k", p.k},
          {"d", p.d},
          {"construction", to_string(p.construction)},
          {"singleton_defect", p.singleton_defect()},
          {"mds", p.mds()}};
}

inline QuantumParams quantum_from_json(const Json& j) {
  const auto tag = detail::get_field<std::string>(j, "construction");
  Construction c;
  if (tag == "css-euclidean")
    c = Construction::css_euclidean;
  else if (tag == "hermitian")
    c = Construction::hermitian;
  else
    fail(ErrorCode::ParseError, "unknown construction \"" + tag + "\"");
  return make_quantum_params(detail::get_field<std::uint64_t>(j, "q"), detail::get_field<std::int64_t>(j, "n"),
                             detail::get_field<std::int64_t>(j, "k"), detail::get_field<std::int64_t>(j, "d"), c);
}

inline InnerProduct inner_from_string(const std::string& s) {
  if (s == "euclidean") return InnerProduct::euclidean;
  if (s == "hermitian") return InnerProduct::hermitian;
  fail(ErrorCode::ParseError, "inner product must be euclidean or hermitian, got \"" + s + "\"");
}

}  // namespace socodes
