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

// Tabulations behind the `census` and `bounds` commands.

#pragma once

#include <algorithm>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "socodes/error.hpp"
#include "socodes/field.hpp"
#include "socodes/grs.hpp"
#include "socodes/linear_code.hpp"
#include "socodes/quantum.hpp"

namespace socodes {

/// Full-weight census of the dual of GRS_{2m+1}(a, 1) on the projective line (genus 0).
struct CensusRow {
  std::uint64_t q = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t full_weight_count = 0;
  double lower_bound = 0;
  double threshold_stated = 0;
  double threshold_derived = 0;
  bool predicted_positive = false;
  bool actually_positive = false;
};

inline std::uint64_t dual_full_weight_count(const FiniteField& f, const Vector& points, std::size_t m,
                                            std::uint64_t budget) {
  return count_full_weight(dual_euclidean(grs_code(f, points, 2 * m + 1)), budget);
}

inline CensusRow census_row(const FiniteField& f, const Vector& points, std::size_t m, std::uint64_t budget) {
  const double q = f.order();
  const double n = static_cast<double>(points.size());
  CensusRow row;
  row.q = f.order();
  row.n = points.size();
  row.m = m;
  row.full_weight_count = dual_full_weight_count(f, points, m, budget);
  row.lower_bound = full_weight_count_bound(q, n, static_cast<double>(m), 0);
  row.threshold_stated = full_weight_threshold(q, n, 0, ThresholdVariant::stated);
  row.threshold_derived = full_weight_threshold(q, n, 0, ThresholdVariant::derived);
  row.predicted_positive = static_cast<double>(m) < row.threshold_derived;
  row.actually_positive = row.full_weight_count > 0;
  return row;
}

/// Rows for 2 <= n <= min(q, n_max) and 0 <= m <= min(m_max, (n-2)/2), evaluating on the first n
/// field elements.
inline std::vector<CensusRow> census(std::uint64_t q, std::size_t n_max, std::size_t m_max,
                                     std::uint64_t budget = kDefaultBudget) {
  const FiniteField f = field_of_order(q);
  std::vector<CensusRow> rows;
  const std::size_t top = std::min<std::size_t>(f.order(), n_max);
  for (std::size_t n = 2; n <= top; ++n) {
    Vector points(n);
    for (std::size_t i = 0; i < n; ++i) points[i] = static_cast<Elem>(i);
    for (std::size_t m = 0; m <= std::min(m_max, (n - 2) / 2); ++m) rows.push_back(census_row(f, points, m, budget));
  }
  return rows;
}

struct BoundsRow {
  std::uint64_t q = 0;
  double delta = 0;
  double gv = 0;
  std::optional<double> ag;  // only for square q
};

/// Rates at delta_max * i / (points + 1), i = 1..points; the grid stays strictly inside (0, delta_max).
inline std::vector<BoundsRow> bounds_table(std::uint64_t q, std::size_t points, double delta_max = 0.5) {
  require(q >= 2, ErrorCode::DomainError, "need q >= 2");
  require(points >= 1, ErrorCode::DomainError, "grid needs at least one point");
  require(delta_max > 0 && delta_max <= 0.5, ErrorCode::DomainError, "grid upper end must lie in (0, 1/2]");
  const bool square = square_prime_power_root(q).has_value();
  std::vector<BoundsRow> rows;
  for (std::size_t i = 1; i <= points; ++i) {
    BoundsRow row{q, delta_max * static_cast<double>(i) / static_cast<double>(points + 1), 0, std::nullopt};
    row.gv = gv_rate(static_cast<double>(q), row.delta);
    if (square) row.ag = ag_rate(q, row.delta);
    rows.push_back(row);
  }
  return rows;
}

/// 12 significant digits.
inline std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace socodes
