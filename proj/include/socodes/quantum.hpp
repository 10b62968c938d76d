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
 * @file quantum.hpp
 * @brief Quantum code parameters from self-orthogonal codes, and the rate/threshold formulas used
 * to compare them against known bounds.
 *
 * A Euclidean self-orthogonal [n, k] code over GF(q), or a Hermitian self-orthogonal [n, k] code over
 * GF(q^2), with dual distance d yields a q-ary [[n, n - 2k, d]] quantum code. Real-valued formulas
 * are evaluated in double precision.
 */

#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include "socodes/error.hpp"
#include "socodes/field.hpp"
#include "socodes/linear_code.hpp"

namespace socodes {

enum class Construction { css_euclidean, hermitian };

inline std::string to_string(Construction c) { return c == Construction::css_euclidean ? "css-euclidean" : "hermitian"; }

/// [[n, k, d]]_q with K = q^k.
struct QuantumParams {
  std::uint64_t q = 0;
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t d = 0;
  Construction construction = Construction::css_euclidean;

  /// n - k - 2d + 2; zero for quantum MDS codes.
  std::int64_t singleton_defect() const { return n - k - 2 * d + 2; }
  bool mds() const { return singleton_defect() == 0; }

  friend bool operator==(const QuantumParams&, const QuantumParams&) = default;
};

inline QuantumParams make_quantum_params(std::uint64_t q, std::int64_t n, std::int64_t k, std::int64_t d,
                                         Construction construction) {
  QuantumParams params{q, n, k, d, construction};
  require(n >= 1 && k >= 0 && k <= n && d >= 1, ErrorCode::DomainError, "invalid quantum code parameters");
  require(params.singleton_defect() >= 0, ErrorCode::DomainError, "parameters violate the quantum Singleton bound");
  return params;
}

namespace detail {

inline void check_dual_distance(const LinearCode& dual, std::size_t d_dual, std::uint64_t budget) {
  if (!codeword_count(dual.field().order(), dual.dimension(), budget)) return;
  const std::size_t actual = min_distance(dual, budget);
  require(actual == d_dual, ErrorCode::DualDistanceMismatch,
          "claimed dual distance " + std::to_string(d_dual) + ", enumeration gives " + std::to_string(actual));
}

}  // namespace detail

/// [[n, n-2k, d⊥]]_q from a Euclidean self-orthogonal code. The claimed dual distance is re-verified
/// by enumeration when the dual fits in `budget`.
inline QuantumParams css_from_euclidean(const LinearCode& c, std::size_t d_dual, std::uint64_t budget = kDefaultBudget) {
  require(is_self_orthogonal(c, InnerProduct::euclidean), ErrorCode::NotSelfOrthogonal,
          "code is not Euclidean self-orthogonal");
  detail::check_dual_distance(dual_euclidean(c), d_dual, budget);
  const auto n = static_cast<std::int64_t>(c.length());
  const auto k = static_cast<std::int64_t>(c.dimension());
  return make_quantum_params(c.field().order(), n, n - 2 * k, static_cast<std::int64_t>(d_dual),
                             Construction::css_euclidean);
}

/// [[n, n-2k, d⊥]]_q from a Hermitian self-orthogonal code over GF(q^2).
inline QuantumParams from_hermitian(const LinearCode& c, std::size_t d_dual, std::uint64_t budget = kDefaultBudget) {
  require(is_self_orthogonal(c, InnerProduct::hermitian), ErrorCode::NotSelfOrthogonal,
          "code is not Hermitian self-orthogonal");
  detail::check_dual_distance(dual_hermitian(c), d_dual, budget);
  const auto n = static_cast<std::int64_t>(c.length());
  const auto k = static_cast<std::int64_t>(c.dimension());
  return make_quantum_params(c.field().base()->order(), n, n - 2 * k, static_cast<std::int64_t>(d_dual),
                             Construction::hermitian);
}

inline double log_base(double q, double x) { return std::log(x) / std::log(q); }

enum class ThresholdVariant {
  stated,   // ½(n - 1 - n log_q(1 + 2/q))
  derived,  // ½(n - 1 - n log_q((q+1)/(q-1)))
};

/// Degree bound below which the dual of C_L(D, 2G) is guaranteed a full-weight codeword.
/// The derived variant is exactly where q^(n-2m+g-1)(1-1/q)^n > q^g (1+1/q)^n starts to hold;
/// the genus cancels from that inequality.
inline double full_weight_threshold(double q, double n, double /*genus*/, ThresholdVariant variant) {
  require(q >= 2 && n >= 1, ErrorCode::DomainError, "need q >= 2 and n >= 1");
  const double ratio = variant == ThresholdVariant::stated ? 1.0 + 2.0 / q : (q + 1.0) / (q - 1.0);
  return 0.5 * (n - 1.0 - n * log_base(q, ratio));
}

/// Inclusion-exclusion lower bound q^(n-2m+g-1)(1-1/q)^n - q^g (1+1/q)^n on the number of
/// full-weight codewords.
inline double full_weight_count_bound(double q, double n, double m, double genus) {
  require(q >= 2 && n >= 1, ErrorCode::DomainError, "need q >= 2 and n >= 1");
  return std::pow(q, n - 2 * m + genus - 1) * std::pow(1 - 1 / q, n) - std::pow(q, genus) * std::pow(1 + 1 / q, n);
}

/// q-ary entropy H_q(δ) for 0 < δ < 1.
inline double entropy_hq(double q, double delta) {
  require(q >= 2, ErrorCode::DomainError, "need q >= 2");
  require(delta > 0 && delta < 1, ErrorCode::DomainError, "entropy needs 0 < delta < 1");
  return delta * log_base(q, q - 1) - delta * log_base(q, delta) - (1 - delta) * log_base(q, 1 - delta);
}

/// Quantum Gilbert-Varshamov rate 1 - δ log_q(q+1) - H_q(δ), for 0 < δ < 1/2.
inline double gv_rate(double q, double delta) {
  require(delta > 0 && delta < 0.5, ErrorCode::DomainError, "GV rate needs 0 < delta < 1/2");
  return 1 - delta * log_base(q, q + 1) - entropy_hq(q, delta);
}

/// Integer square root of q when q is a perfect square prime power.
inline std::optional<std::uint64_t> square_prime_power_root(std::uint64_t q) {
  auto pm = prime_power(q);
  if (!pm || pm->second % 2 != 0) return std::nullopt;
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < pm->second / 2; ++i) r *= pm->first;
  return r;
}

/// A(q) = √q - 1 for square q.
inline double ihara_constant(std::uint64_t q) {
  auto root = square_prime_power_root(q);
  require(root.has_value(), ErrorCode::NotASquare, std::to_string(q) + " is not a square prime power");
  return static_cast<double>(*root) - 1.0;
}

/// Algebraic geometry rate 1 - 2δ - 2/A(q) for square q.
inline double ag_rate(std::uint64_t q, double delta) {
  const double a = ihara_constant(q);
  require(delta > 0, ErrorCode::DomainError, "AG rate needs delta > 0");
  return 1 - 2 * delta - 2 / a;
}

}  // namespace socodes
