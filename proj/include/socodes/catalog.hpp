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
 * @file catalog.hpp
 * @brief Verified construction records and the append-only JSON-lines catalog.
 *
 * A record holds a self-orthogonal code, the twist that produced it, the exhaustively verified
 * distances and the derived quantum parameters. Its id is the FNV-1a hash of the canonical JSON of
 * everything else in the record, so any edit to a stored record changes the recomputed id.
 */

#pragma once

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "socodes/elliptic.hpp"
#include "socodes/error.hpp"
#include "socodes/field.hpp"
#include "socodes/grs.hpp"
#include "socodes/linear_code.hpp"
#include "socodes/quantum.hpp"
#include "socodes/serialize.hpp"

namespace socodes {

inline constexpr const char* kToolVersion = "0.1.0";

struct Verification {
  bool self_orthogonal = false;
  std::size_t min_distance = 0;
  std::size_t dual_distance = 0;
};

struct ConstructionInfo {
  std::string source;  // "grs" or "elliptic"
  Json params;
  Vector witness;  // full-weight dual codeword over the base field
  std::string tool_version = kToolVersion;
};

struct CatalogRecord {
  std::string id;
  LinearCode code;
  TwistVector twist;
  InnerProduct inner;
  Verification verification;
  QuantumParams quantum;
  ConstructionInfo construction;
};

/// 64-bit FNV-1a, hex encoded.
inline std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
  return buf;
}

inline FiniteField witness_field(const LinearCode& code, InnerProduct inner) {
  return inner == InnerProduct::hermitian ? *code.field().base() : code.field();
}

/// Record JSON without the id.
inline Json record_content(const CatalogRecord& r) {
  return {{"field", field_to_json(r.code.field())},
          {"code", code_to_json(r.code)},
          {"twist", twist_to_json(r.twist)},
          {"inner", to_string(r.inner)},
          {"verification",
           {{"self_orthogonal", r.verification.self_orthogonal},
            {"min_distance", r.verification.min_distance},
            {"dual_distance", r.verification.dual_distance}}},
          {"quantum", quantum_to_json(r.quantum)},
          {"construction",
           {{"source", r.construction.source},
            {"params", r.construction.params},
            {"witness", vector_to_json(witness_field(r.code, r.inner), r.construction.witness)},
            {"tool_version", r.construction.tool_version}}}};
}

inline std::string content_id(const Json& content) { return fnv1a_hex(content.dump()); }

inline Json record_to_json(const CatalogRecord& r) {
  Json j = record_content(r);
  j["id"] = r.id;
  return j;
}

inline CatalogRecord record_from_json(const Json& j) {
  try {
    const LinearCode code = code_from_json(j.at("code"));
    const InnerProduct inner = inner_from_string(j.at("inner").get<std::string>());
    if (inner == InnerProduct::hermitian) require_quadratic_extension(code.field());
    const Json& v = j.at("verification");
    const Json& c = j.at("construction");
    return CatalogRecord{
        j.at("id").get<std::string>(),
        code,
        twist_from_json(code.field(), j.at("twist")),
        inner,
        {v.at("self_orthogonal").get<bool>(), v.at("min_distance").get<std::size_t>(),
         v.at("dual_distance").get<std::size_t>()},
        quantum_from_json(j.at("quantum")),
        {c.at("source").get<std::string>(), c.at("params"), vector_from_json(witness_field(code, inner), c.at("witness")),
         c.at("tool_version").get<std::string>()}};
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, std::string("malformed record: ") + e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    fail(ErrorCode::ParseError, std::string("malformed record: ") + e.what());
  }
}

inline LinearCode dual_for(const LinearCode& c, InnerProduct inner) {
  return inner == InnerProduct::euclidean ? dual_euclidean(c) : dual_hermitian(c);
}

inline QuantumParams quantum_for(const LinearCode& c, InnerProduct inner, std::size_t dual_distance,
                                 std::uint64_t budget) {
  return inner == InnerProduct::euclidean ? css_from_euclidean(c, dual_distance, budget)
                                          : from_hermitian(c, dual_distance, budget);
}

/// Self-orthogonality plus both distances; throws BudgetExceeded when an enumeration is too large.
inline Verification verify_code(const LinearCode& c, InnerProduct inner, std::uint64_t budget) {
  Verification v;
  v.self_orthogonal = is_self_orthogonal(c, inner);
  v.min_distance = min_distance(c, budget);
  v.dual_distance = min_distance(dual_for(c, inner), budget);
  return v;
}

inline CatalogRecord make_record(std::string source, Json params, const SelfOrthogonalCode& so, std::uint64_t budget) {
  CatalogRecord r{"", so.code, so.twist, so.mode, verify_code(so.code, so.mode, budget), {}, {}};
  r.quantum = quantum_for(so.code, so.mode, r.verification.dual_distance, budget);
  r.construction = {std::move(source), std::move(params), so.full_weight_word, kToolVersion};
  r.id = content_id(record_content(r));
  return r;
}

// ---------------------------------------------------------------------------
// Constructions

struct GrsRequest {
  std::uint64_t q = 0;
  std::optional<std::size_t> n;  // defaults to q (all field elements)
  std::size_t k = 1;
  InnerProduct inner = InnerProduct::euclidean;
};

struct EllipticRequest {
  std::uint64_t q = 0;
  std::array<std::uint32_t, 5> curve{};  // a1, a2, a3, a4, a6 as element indices
  std::size_t m = 1;
  std::optional<std::size_t> n;  // defaults to every affine point
  InnerProduct inner = InnerProduct::hermitian;
};

inline Json request_params(const GrsRequest& req) {
  return {{"q", req.q}, {"n", req.n.value_or(req.q)}, {"k", req.k}};
}

inline Json request_params(const EllipticRequest& req) {
  return {{"q", req.q}, {"curve", req.curve}, {"m", req.m}, {"n", req.n ? Json(*req.n) : Json(nullptr)}};
}

/// Runs the GRS pipeline on the first n elements of GF(q) (index order).
inline SelfOrthogonalCode build_grs(const GrsRequest& req) {
  const FiniteField f = field_of_order(req.q);
  const std::size_t n = req.n.value_or(f.order());
  require(n >= 1 && n <= f.order(), ErrorCode::LengthMismatch,
          "GRS length must lie in [1, q], got " + std::to_string(n));
  Vector points(n);
  for (std::size_t i = 0; i < n; ++i) points[i] = static_cast<Elem>(i);
  return req.inner == InnerProduct::euclidean ? euclidean_so_grs(f, points, req.k) : hermitian_so_grs(f, points, req.k);
}

inline CatalogRecord construct_grs(const GrsRequest& req, std::uint64_t budget = kDefaultBudget) {
  return make_record("grs", request_params(req), build_grs(req), budget);
}

inline std::vector<CurvePoint> elliptic_support(const EllipticCurve& e, std::optional<std::size_t> n) {
  auto pts = affine_points(e);
  if (n) {
    require(*n <= pts.size(), ErrorCode::LengthMismatch,
            "curve has only " + std::to_string(pts.size()) + " affine points, asked for " + std::to_string(*n));
    pts.resize(*n);
  }
  return pts;
}

/// Runs the elliptic pipeline on the first n affine points; empty when no full-weight word exists.
inline std::optional<SelfOrthogonalCode> build_elliptic(const EllipticRequest& req, std::uint64_t budget) {
  const FiniteField f = field_of_order(req.q);
  const EllipticCurve e(f, req.curve);
  return so_elliptic(e, elliptic_support(e, req.n), req.m, req.inner, budget);
}

inline std::optional<CatalogRecord> construct_elliptic(const EllipticRequest& req,
                                                       std::uint64_t budget = kDefaultBudget) {
  auto so = build_elliptic(req, budget);
  if (!so) return std::nullopt;
  return make_record("elliptic", request_params(req), *so, budget);
}

/// Re-runs the construction described by a record's source and params.
inline std::optional<SelfOrthogonalCode> rebuild(const ConstructionInfo& info, InnerProduct inner,
                                                 std::uint64_t budget) {
  const Json& p = info.params;
  try {
    if (info.source == "grs") {
      return build_grs({p.at("q").get<std::uint64_t>(), p.at("n").get<std::size_t>(), p.at("k").get<std::size_t>(), inner});
    }
    if (info.source == "elliptic") {
      EllipticRequest req{p.at("q").get<std::uint64_t>(), p.at("curve").get<std::array<std::uint32_t, 5>>(),
                          p.at("m").get<std::size_t>(), std::nullopt, inner};
      if (!p.at("n").is_null()) req.n = p.at("n").get<std::size_t>();
      return build_elliptic(req, budget);
    }
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, std::string("bad construction params: ") + e.what());
  }
  fail(ErrorCode::ParseError, "unknown construction source \"" + info.source + "\"");
}

// ---------------------------------------------------------------------------
// Verification of stored records

struct VerifyCheck {
  std::string name;
  std::string status;  // "ok", "mismatch" or "skipped"
  Json stored;
  Json recomputed;
};

struct VerifyReport {
  std::string id;
  std::vector<VerifyCheck> checks;

  bool any(const std::string& status) const {
    for (const auto& c : checks)
      if (c.status == status) return true;
    return false;
  }

  /// 0 all match, 1 some mismatch, 4 nothing mismatched but some check exceeded the budget.
  int exit_code() const {
    if (any("mismatch")) return 1;
    if (any("skipped")) return 4;
    return 0;
  }

  Json to_json() const {
    Json checks_json = Json::array();
    for (const auto& c : checks)
      checks_json.push_back({{"check", c.name}, {"status", c.status}, {"stored", c.stored}, {"recomputed", c.recomputed}});
    return {{"id", id}, {"checks", checks_json}, {"ok", exit_code() == 0}};
  }
};

/// Recomputes everything a record claims. Malformed records throw ParseError.
inline VerifyReport verify_record(const Json& j, std::uint64_t budget = kDefaultBudget) {
  const CatalogRecord rec = record_from_json(j);
  VerifyReport report{rec.id, {}};
  auto add = [&](std::string name, Json stored, Json recomputed) {
    const bool ok = stored == recomputed;
    report.checks.push_back({std::move(name), ok ? "ok" : "mismatch", std::move(stored), std::move(recomputed)});
  };
  auto skip = [&](std::string name, Json stored) {
    report.checks.push_back({std::move(name), "skipped", std::move(stored), nullptr});
  };

  Json content = j;
  content.erase("id");
  add("id", rec.id, content_id(content));
  add("canonical_generator", j.at("code"), code_to_json(rec.code));
  add("field", j.at("field"), field_to_json(rec.code.field()));
  add("self_orthogonal", rec.verification.self_orthogonal, is_self_orthogonal(rec.code, rec.inner));

  std::optional<std::size_t> d, dd;
  try {
    d = min_distance(rec.code, budget);
    add("min_distance", rec.verification.min_distance, *d);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::BudgetExceeded) throw;
    skip("min_distance", rec.verification.min_distance);
  }
  try {
    dd = min_distance(dual_for(rec.code, rec.inner), budget);
    add("dual_distance", rec.verification.dual_distance, *dd);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::BudgetExceeded) throw;
    skip("dual_distance", rec.verification.dual_distance);
  }

  const Json stored_q = quantum_to_json(rec.quantum);
  if (dd) {
    try {
      add("quantum", stored_q, quantum_to_json(quantum_for(rec.code, rec.inner, *dd, budget)));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::BudgetExceeded)
        skip("quantum", stored_q);
      else
        add("quantum", stored_q, std::string(e.what()));
    }
  } else {
    skip("quantum", stored_q);
  }

  try {
    auto rebuilt = rebuild(rec.construction, rec.inner, budget);
    Json stored = {{"code", code_to_json(rec.code)},
                   {"twist", twist_to_json(rec.twist)},
                   {"witness", vector_to_json(witness_field(rec.code, rec.inner), rec.construction.witness)}};
    Json fresh = nullptr;
    if (rebuilt)
      fresh = {{"code", code_to_json(rebuilt->code)},
               {"twist", twist_to_json(rebuilt->twist)},
               {"witness", vector_to_json(witness_field(rebuilt->code, rebuilt->mode), rebuilt->full_weight_word)}};
    add("reconstruction", stored, fresh);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::BudgetExceeded) throw;
    skip("reconstruction", nullptr);
  }
  return report;
}

// ---------------------------------------------------------------------------
// Catalog file: one canonical JSON record per line, append-only.

namespace detail {

class FileLock {
 public:
  FileLock(const std::string& path, int flags, int operation) : fd_(::open(path.c_str(), flags, 0644)) {
    if (fd_ < 0) return;
    if (::flock(fd_, operation) != 0) {
      ::close(fd_);
      fd_ = -1;
    }
  }
  ~FileLock() {
    if (fd_ >= 0) {
      ::flock(fd_, LOCK_UN);
      ::close(fd_);
    }
  }
  FileLock(const FileLock&) = delete;
  FileLock& operator=(const FileLock&) = delete;

  int fd() const { return fd_; }

 private:
  int fd_;
};

inline std::string read_all(int fd) {
  std::string out;
  char buf[4096];
  ::lseek(fd, 0, SEEK_SET);
  ssize_t got;
  while ((got = ::read(fd, buf, sizeof buf)) > 0) out.append(buf, static_cast<std::size_t>(got));
  return out;
}

inline std::vector<Json> parse_lines(const std::string& text) {
  std::vector<Json> out;
  std::istringstream in(text);
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    try {
      out.push_back(Json::parse(line));
    } catch (const nlohmann::json::exception& e) {
      fail(ErrorCode::ParseError, "catalog line " + std::to_string(number) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace detail

class Catalog {
 public:
  explicit Catalog(std::string path) : path_(std::move(path)) {}

  const std::string& path() const { return path_; }

  /// All records; a missing file is an empty catalog.
  std::vector<Json> load() const {
    detail::FileLock lock(path_, O_RDONLY, LOCK_SH);
    if (lock.fd() < 0) return {};
    return detail::parse_lines(detail::read_all(lock.fd()));
  }

  std::optional<Json> find(const std::string& id) const {
    for (auto& r : load())
      if (r.contains("id") && r.at("id") == id) return r;
    return std::nullopt;
  }

  /// Appends the record unless one with the same id is present. Returns whether it was written.
  bool append(const Json& record) const {
    detail::FileLock lock(path_, O_RDWR | O_CREAT | O_APPEND, LOCK_EX);
    require(lock.fd() >= 0, ErrorCode::IoError, "cannot open catalog " + path_);
    for (const auto& r : detail::parse_lines(detail::read_all(lock.fd())))
      if (r.contains("id") && r.at("id") == record.at("id")) return false;
    const std::string line = record.dump() + "\n";
    require(::write(lock.fd(), line.data(), line.size()) == static_cast<ssize_t>(line.size()), ErrorCode::IoError,
            "short write to catalog " + path_);
    return true;
  }

 private:
  std::string path_;
};

}  // namespace socodes
