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
 * @file linear_code.hpp
 * @brief Linear codes over finite fields: duals, Schur squares, monomial twists and exhaustive
 * weight computations.
 *
 * A LinearCode stores its generator in reduced row echelon form, so two codes are equal iff their
 * stored generators are equal. Exhaustive operations enumerate all q^k messages and refuse to run
 * (BudgetExceeded) when q^k exceeds the caller's budget.
 */

#pragma once

#include <cassert>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "socodes/error.hpp"
#include "socodes/field.hpp"
#include "socodes/matrix.hpp"

namespace socodes {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

enum class InnerProduct { euclidean, hermitian };

inline std::string to_string(InnerProduct mode) { return mode == InnerProduct::euclidean ? "euclidean" : "hermitian"; }

class LinearCode {
 public:
  /// Row space of `rows`, canonicalized; dependent rows are dropped.
  static LinearCode from_generator(const FiniteField& field, const std::vector<Vector>& rows, std::size_t n) {
    require(n >= 1, ErrorCode::LengthMismatch, "code length must be at least 1");
    RowReduction red = rref(Matrix::from_rows(field, rows, n));
    Matrix g(field, red.rank, n);
    for (std::size_t r = 0; r < red.rank; ++r)
      for (std::size_t c = 0; c < n; ++c) g(r, c) = red.reduced(r, c);
    return LinearCode(std::move(g));
  }

  static LinearCode from_generator(const FiniteField& field, const std::vector<Vector>& rows) {
    require(!rows.empty(), ErrorCode::LengthMismatch, "cannot infer the length of a code from no rows");
    return from_generator(field, rows, rows.front().size());
  }

  /// Rows given as field elements; every entry must live in `field`.
  static LinearCode from_generator(const FiniteField& field, const std::vector<std::vector<FieldElement>>& rows) {
    std::vector<Vector> raw;
    for (const auto& row : rows) {
      Vector v;
      for (const auto& e : row) {
        require(e.field() == field, ErrorCode::FieldMismatch, "generator entry in " + e.field().name());
        v.push_back(e.value());
      }
      raw.push_back(std::move(v));
    }
    return from_generator(field, raw);
  }

  static LinearCode zero(const FiniteField& field, std::size_t n) { return from_generator(field, {}, n); }

  static LinearCode full(const FiniteField& field, std::size_t n) {
    return from_generator(field, Matrix::identity(field, n).to_rows(), n);
  }

  const FiniteField& field() const { return generator_.field(); }
  std::size_t length() const { return generator_.cols(); }
  std::size_t dimension() const { return generator_.rows(); }
  const Matrix& generator() const { return generator_; }
  std::vector<Vector> rows() const { return generator_.to_rows(); }

  /// Σ msg_i g_i.
  Vector encode(std::span<const Elem> msg) const {
    require(msg.size() == dimension(), ErrorCode::LengthMismatch, "message length differs from dimension");
    const FiniteField& f = field();
    Vector word(length(), 0);
    for (std::size_t i = 0; i < msg.size(); ++i) {
      if (msg[i] == 0) continue;
      for (std::size_t j = 0; j < length(); ++j) word[j] = f.add(word[j], f.mul(msg[i], generator_(i, j)));
    }
    return word;
  }

  bool contains(std::span<const Elem> word) const {
    require(word.size() == length(), ErrorCode::LengthMismatch, "word length differs from code length");
    // In RREF the coefficients of a member are its entries at the pivot columns.
    Vector msg(dimension());
    for (std::size_t i = 0; i < dimension(); ++i) msg[i] = word[pivot(i)];
    return encode(msg) == Vector(word.begin(), word.end());
  }

  /// Row-space containment: other ⊆ this.
  bool contains(const LinearCode& other) const {
    if (!(other.field() == field()) || other.length() != length()) return false;
    for (std::size_t r = 0; r < other.dimension(); ++r)
      if (!contains(other.generator().row(r))) return false;
    return true;
  }

  friend bool operator==(const LinearCode& a, const LinearCode& b) { return a.generator_ == b.generator_; }

 private:
  explicit LinearCode(Matrix g) : generator_(std::move(g)) {}

  std::size_t pivot(std::size_t r) const {
    std::size_t c = 0;
    while (generator_(r, c) == 0) ++c;
    return c;
  }

  Matrix generator_;
};

/// Length-n vector of nonzero multipliers.
class TwistVector {
 public:
  TwistVector(FiniteField field, Vector entries) : field_(std::move(field)), entries_(std::move(entries)) {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      field_.check(entries_[i]);
      require(entries_[i] != 0, ErrorCode::ZeroTwistEntry, "twist entry " + std::to_string(i) + " is zero");
    }
  }

  static TwistVector ones(const FiniteField& field, std::size_t n) { return {field, Vector(n, 1)}; }

  const FiniteField& field() const { return field_; }
  std::size_t size() const { return entries_.size(); }
  const Vector& entries() const { return entries_; }
  Elem operator[](std::size_t i) const { return entries_[i]; }

  TwistVector inverse() const {
    Vector inv(entries_.size());
    for (std::size_t i = 0; i < inv.size(); ++i) inv[i] = field_.inv(entries_[i]);
    return {field_, std::move(inv)};
  }

  friend bool operator==(const TwistVector& a, const TwistVector& b) {
    return a.entries_ == b.entries_ && a.field_ == b.field_;
  }

 private:
  FiniteField field_;
  Vector entries_;
};

// ---------------------------------------------------------------------------
// Algebraic operations

inline LinearCode dual_euclidean(const LinearCode& c) {
  return LinearCode::from_generator(c.field(), kernel_basis(c.generator()), c.length());
}

inline void require_quadratic_extension(const FiniteField& f) {
  require(f.is_quadratic_extension(), ErrorCode::NotAnExtensionField,
          f.name() + " is not registered as a quadratic extension");
}

/// Base-field order q of a quadratic extension GF(q^2).
inline std::uint32_t conjugation_order(const FiniteField& f) {
  require_quadratic_extension(f);
  return f.base()->order();
}

/// C^q: entrywise Frobenius x -> x^q.
inline LinearCode conjugate_code(const LinearCode& c) {
  const std::uint32_t q = conjugation_order(c.field());
  auto rows = c.rows();
  for (auto& row : rows)
    for (auto& e : row) e = frobenius(c.field(), e, q);
  return LinearCode::from_generator(c.field(), rows, c.length());
}

/// C^⊥H = (C^q)^⊥E.
inline LinearCode dual_hermitian(const LinearCode& c) { return dual_euclidean(conjugate_code(c)); }

inline Vector componentwise_product(const FiniteField& f, std::span<const Elem> a, std::span<const Elem> b) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.mul(a[i], b[i]);
  return out;
}

/// Span of all componentwise products of generator rows.
inline LinearCode schur_square(const LinearCode& c) {
  std::vector<Vector> products;
  const Matrix& g = c.generator();
  for (std::size_t i = 0; i < c.dimension(); ++i)
    for (std::size_t j = i; j < c.dimension(); ++j) products.push_back(componentwise_product(c.field(), g.row(i), g.row(j)));
  return LinearCode::from_generator(c.field(), products, c.length());
}

/// Coordinate i of every codeword multiplied by v_i.
inline LinearCode twist(const LinearCode& c, const TwistVector& v) {
  require(v.size() == c.length(), ErrorCode::LengthMismatch,
          "twist of length " + std::to_string(v.size()) + " for code of length " + std::to_string(c.length()));
  require(v.field() == c.field(), ErrorCode::FieldMismatch, "twist over " + v.field().name() + ", code over " + c.field().name());
  auto rows = c.rows();
  for (auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i) row[i] = c.field().mul(row[i], v[i]);
  return LinearCode::from_generator(c.field(), rows, c.length());
}

/// Euclidean: G G^T = 0. Hermitian: G (G^q)^T = 0.
inline bool is_self_orthogonal(const LinearCode& c, InnerProduct mode) {
  const FiniteField& f = c.field();
  const Matrix& g = c.generator();
  std::uint32_t q = 0;
  if (mode == InnerProduct::hermitian) q = conjugation_order(f);
  for (std::size_t i = 0; i < c.dimension(); ++i) {
    for (std::size_t j = 0; j < c.dimension(); ++j) {
      Elem s = 0;
      for (std::size_t l = 0; l < c.length(); ++l) {
        const Elem b = mode == InnerProduct::hermitian ? frobenius(f, g(j, l), q) : g(j, l);
        s = f.add(s, f.mul(g(i, l), b));
      }
      if (s != 0) return false;
    }
  }
  assert(2 * c.dimension() <= c.length());
  return true;
}

/// Same rows with entries mapped into GF(q^2).
inline LinearCode lift_to_extension(const LinearCode& c, const FiniteField& ext) {
  require_quadratic_extension(ext);
  auto rows = c.rows();
  for (auto& row : rows)
    for (auto& e : row) e = embed(c.field(), e, ext);
  return LinearCode::from_generator(ext, rows, c.length());
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration

/// Σ w_i = q^k, w_0 = 1.
struct WeightProfile {
  std::vector<std::uint64_t> counts;  // counts[w] = codewords of weight w, w = 0..n

  std::size_t length() const { return counts.size() - 1; }
  std::uint64_t full_weight() const { return counts.back(); }
  friend bool operator==(const WeightProfile&, const WeightProfile&) = default;
};

/// q^k, or nullopt when it exceeds `budget`.
inline std::optional<std::uint64_t> codeword_count(std::uint64_t q, std::size_t k, std::uint64_t budget) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (total > budget / q) return std::nullopt;
    total *= q;
  }
  if (total > budget) return std::nullopt;
  return total;
}

inline void require_budget(const LinearCode& c, std::uint64_t budget) {
  if (!codeword_count(c.field().order(), c.dimension(), budget))
    fail(ErrorCode::BudgetExceeded, c.field().name() + " code of dimension " + std::to_string(c.dimension()) +
                                        " has more than " + std::to_string(budget) + " codewords");
}

/// Calls visit(message, codeword) for every message in lexicographic order (first coordinate most
/// significant, entries in index order). Enumeration stops early when visit returns false.
template <class Visitor>
void for_each_codeword(const LinearCode& c, std::uint64_t budget, Visitor&& visit) {
  require_budget(c, budget);
  const FiniteField& f = c.field();
  const std::size_t k = c.dimension();
  const std::size_t n = c.length();
  const Elem q = f.order();
  // step[j][s]: change of the codeword when message digit j moves from s to s+1 (mod wraparound).
  std::vector<std::vector<Vector>> step(k, std::vector<Vector>(q, Vector(n)));
  for (std::size_t j = 0; j < k; ++j) {
    const auto row = c.generator().row(j);
    for (Elem s = 0; s < q; ++s) {
      const Elem delta = f.sub(s + 1 == q ? 0 : s + 1, s);
      for (std::size_t l = 0; l < n; ++l) step[j][s][l] = f.mul(delta, row[l]);
    }
  }
  Vector msg(k, 0);
  Vector word(n, 0);
  while (true) {
    if (!visit(std::span<const Elem>(msg), std::span<const Elem>(word))) return;
    std::size_t j = k;
    while (j > 0) {
      --j;
      const Vector& d = step[j][msg[j]];
      for (std::size_t l = 0; l < n; ++l) word[l] = f.add(word[l], d[l]);
      if (++msg[j] < q) break;
      msg[j] = 0;
      if (j == 0) return;
    }
    if (k == 0) return;
  }
}

inline std::size_t hamming_weight(std::span<const Elem> word) {
  std::size_t w = 0;
  for (Elem e : word) w += e != 0;
  return w;
}

inline WeightProfile weight_profile(const LinearCode& c, std::uint64_t budget = kDefaultBudget) {
  WeightProfile profile{std::vector<std::uint64_t>(c.length() + 1, 0)};
  for_each_codeword(c, budget, [&](std::span<const Elem>, std::span<const Elem> word) {
    ++profile.counts[hamming_weight(word)];
    return true;
  });
  return profile;
}

/// Exact minimum nonzero weight; the zero code throws NoNonzeroCodeword.
inline std::size_t min_distance(const LinearCode& c, std::uint64_t budget = kDefaultBudget) {
  require(c.dimension() > 0, ErrorCode::NoNonzeroCodeword, "the zero code has no minimum distance");
  const WeightProfile profile = weight_profile(c, budget);
  std::size_t w = 1;
  while (profile.counts[w] == 0) ++w;
  return w;
}

/// Lexicographically first (by message) codeword without zero coordinates.
inline std::optional<Vector> full_weight_search(const LinearCode& c, std::uint64_t budget = kDefaultBudget) {
  std::optional<Vector> found;
  for_each_codeword(c, budget, [&](std::span<const Elem>, std::span<const Elem> word) {
    if (hamming_weight(word) == word.size()) {
      found.emplace(word.begin(), word.end());
      return false;
    }
    return true;
  });
  return found;
}

inline std::uint64_t count_full_weight(const LinearCode& c, std::uint64_t budget = kDefaultBudget) {
  std::uint64_t count = 0;
  for_each_codeword(c, budget, [&](std::span<const Elem>, std::span<const Elem> word) {
    count += hamming_weight(word) == word.size();
    return true;
  });
  return count;
}

}  // namespace socodes
