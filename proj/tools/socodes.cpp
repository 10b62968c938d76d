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

// socodes: construct, verify and catalog self-orthogonal codes and their quantum parameters.
//
// Exit codes: 0 success, 1 verification mismatch, 2 precondition violation or bad input,
// 3 search found no full-weight codeword, 4 enumeration budget exceeded.

#include <array>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "socodes/catalog.hpp"
#include "socodes/tables.hpp"

namespace {

using socodes::Json;

constexpr int kExitMismatch = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitNotFound = 3;
constexpr int kExitBudget = 4;

int exit_code_for(const socodes::Error& e) {
  return e.code() == socodes::ErrorCode::BudgetExceeded ? kExitBudget : kExitPrecondition;
}

struct Options {
  std::uint64_t q = 0;
  std::optional<std::size_t> n;
  std::size_t k = 1;
  std::size_t m = 1;
  std::string inner;
  std::string curve;
  std::uint64_t budget = socodes::kDefaultBudget;
  std::string catalog = "catalog.jsonl";
  std::string format;
  std::string target;
  std::size_t n_max = 8;
  std::size_t m_max = 3;
  std::size_t points = 100;
  double delta_max = 0.5;
};

std::string csv_bool(bool b) { return b ? "true" : "false"; }

std::array<std::uint32_t, 5> parse_curve(const std::string& text) {
  std::array<std::uint32_t, 5> a{};
  std::stringstream in(text);
  std::string item;
  std::size_t i = 0;
  while (std::getline(in, item, ',')) {
    socodes::require(i < 5, socodes::ErrorCode::ParseError, "--curve takes exactly five values a1,a2,a3,a4,a6");
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(item, &used);
      socodes::require(used == item.size(), socodes::ErrorCode::ParseError, "bad curve coefficient \"" + item + "\"");
      a[i++] = static_cast<std::uint32_t>(v);
    } catch (const std::logic_error&) {
      socodes::fail(socodes::ErrorCode::ParseError, "bad curve coefficient \"" + item + "\"");
    }
  }
  socodes::require(i == 5, socodes::ErrorCode::ParseError, "--curve takes exactly five values a1,a2,a3,a4,a6");
  return a;
}

void print_record(const socodes::CatalogRecord& rec, const std::string& format) {
  if (format == "csv") {
    const auto& qp = rec.quantum;
    std::cout << "id,source,inner,q,n,k,d,singleton_defect,mds\n"
              << rec.id << ',' << rec.construction.source << ',' << socodes::to_string(rec.inner) << ',' << qp.q << ','
              << qp.n << ',' << qp.k << ',' << qp.d << ',' << qp.singleton_defect() << ',' << csv_bool(qp.mds())
              << '\n';
  } else {
    std::cout << socodes::record_to_json(rec).dump() << '\n';
  }
}

int finish_construct(const socodes::CatalogRecord& rec, const Options& opt) {
  socodes::Catalog(opt.catalog).append(socodes::record_to_json(rec));
  print_record(rec, opt.format);
  return 0;
}

int run_construct_grs(const Options& opt) {
  socodes::GrsRequest req{opt.q, opt.n, opt.k, socodes::inner_from_string(opt.inner)};
  return finish_construct(socodes::construct_grs(req, opt.budget), opt);
}

int run_construct_elliptic(const Options& opt) {
  socodes::EllipticRequest req{opt.q, parse_curve(opt.curve), opt.m, opt.n, socodes::inner_from_string(opt.inner)};
  auto rec = socodes::construct_elliptic(req, opt.budget);
  if (!rec) {
    std::cerr << "socodes: no full-weight codeword in the dual of the Schur square; no twist exists for this support\n";
    return kExitNotFound;
  }
  return finish_construct(*rec, opt);
}

Json load_target(const Options& opt) {
  if (std::filesystem::is_regular_file(opt.target)) {
    std::ifstream in(opt.target);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      try {
        return Json::parse(line);
      } catch (const nlohmann::json::exception&) {
        break;  // not JSON lines; try the whole file as one document
      }
    }
    std::ifstream whole(opt.target);
    try {
      return Json::parse(whole);
    } catch (const nlohmann::json::exception& e) {
      socodes::fail(socodes::ErrorCode::ParseError, opt.target + ": " + e.what());
    }
  }
  auto rec = socodes::Catalog(opt.catalog).find(opt.target);
  socodes::require(rec.has_value(), socodes::ErrorCode::NotFound,
                   "\"" + opt.target + "\" is neither a record file nor an id in " + opt.catalog);
  return *rec;
}

int run_verify(const Options& opt) {
  const auto report = socodes::verify_record(load_target(opt), opt.budget);
  if (opt.format == "csv") {
    std::cout << "check,status\n";
    for (const auto& c : report.checks) std::cout << c.name << ',' << c.status << '\n';
  } else {
    std::cout << report.to_json().dump() << '\n';
  }
  return report.exit_code();
}

int run_census(const Options& opt) {
  const auto rows = socodes::census(opt.q, opt.n_max, opt.m_max, opt.budget);
  bool consistent = true;
  std::vector<const socodes::CensusRow*> below_bound;
  Json out = Json::array();
  if (opt.format != "json")
    std::cout << "q,n,m,exact_full_weight_count,lower_bound,threshold_paper,threshold_derived,predicted_positive,"
                 "actually_positive\n";
  for (const auto& r : rows) {
    consistent = consistent && (!r.predicted_positive || r.actually_positive);
    if (static_cast<double>(r.full_weight_count) < r.lower_bound) below_bound.push_back(&r);
    if (opt.format == "json") {
      out.push_back({{"q", r.q},
                     {"n", r.n},
                     {"m", r.m},
                     {"exact_full_weight_count", r.full_weight_count},
                     {"lower_bound", r.lower_bound},
                     {"threshold_paper", r.threshold_stated},
                     {"threshold_derived", r.threshold_derived},
                     {"predicted_positive", r.predicted_positive},
                     {"actually_positive", r.actually_positive}});
    } else {
      std::cout << r.q << ',' << r.n << ',' << r.m << ',' << r.full_weight_count << ','
                << socodes::format_real(r.lower_bound) << ',' << socodes::format_real(r.threshold_stated) << ','
                << socodes::format_real(r.threshold_derived) << ',' << csv_bool(r.predicted_positive) << ','
                << csv_bool(r.actually_positive) << '\n';
    }
  }
  if (opt.format == "json") std::cout << out.dump() << '\n';
  for (const auto* r : below_bound)
    std::cerr << "socodes: note: q=" << r->q << " n=" << r->n << " m=" << r->m << " count " << r->full_weight_count
              << " is below the estimate " << socodes::format_real(r->lower_bound) << '\n';
  if (!consistent) {
    std::cerr << "socodes: a row predicted positive has no full-weight codeword\n";
    return kExitMismatch;
  }
  return 0;
}

int run_bounds(const Options& opt) {
  const auto rows = socodes::bounds_table(opt.q, opt.points, opt.delta_max);
  if (opt.format == "json") {
    Json out = Json::array();
    for (const auto& r : rows)
      out.push_back({{"q", r.q}, {"delta", r.delta}, {"gv_rate", r.gv}, {"ag_rate", r.ag ? Json(*r.ag) : Json(nullptr)}});
    std::cout << out.dump() << '\n';
    return 0;
  }
  std::cout << "q,delta,gv_rate,ag_rate\n";
  for (const auto& r : rows)
    std::cout << r.q << ',' << socodes::format_real(r.delta) << ',' << socodes::format_real(r.gv) << ','
              << (r.ag ? socodes::format_real(*r.ag) : "") << '\n';
  return 0;
}

Json summary(const Json& rec) {
  return {{"id", rec.value("id", "")},
          {"source", rec.at("construction").value("source", "")},
          {"inner", rec.value("inner", "")},
          {"quantum", rec.at("quantum")}};
}

int run_catalog_list(const Options& opt) {
  const auto records = socodes::Catalog(opt.catalog).load();
  if (opt.format == "json") {
    Json out = Json::array();
    for (const auto& r : records) out.push_back(summary(r));
    std::cout << out.dump() << '\n';
    return 0;
  }
  std::cout << "id,source,inner,q,n,k,d\n";
  for (const auto& r : records) {
    const Json s = summary(r);
    const Json& qp = s.at("quantum");
    std::cout << s.at("id").get<std::string>() << ',' << s.at("source").get<std::string>() << ','
              << s.at("inner").get<std::string>() << ',' << qp.at("q") << ',' << qp.at("n") << ',' << qp.at("k") << ','
              << qp.at("d") << '\n';
  }
  return 0;
}

int run_catalog_show(const Options& opt) {
  auto rec = socodes::Catalog(opt.catalog).find(opt.target);
  socodes::require(rec.has_value(), socodes::ErrorCode::NotFound, "no record with id " + opt.target);
  std::cout << rec->dump() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Self-orthogonal GRS and elliptic codes, verified by exhaustive enumeration"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--budget", opt.budget, "Maximum number of codewords any enumeration may visit")->capture_default_str();
  app.add_option("--catalog", opt.catalog, "Catalog file (JSON lines)")->capture_default_str();
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  auto* construct = app.add_subcommand("construct", "Build a self-orthogonal code and record it");
  construct->require_subcommand(1);
  construct->fallthrough();
  auto* grs = construct->add_subcommand("grs", "Twisted generalized Reed-Solomon code on the first n elements of GF(q)");
  grs->add_option("--q", opt.q, "Field order")->required();
  grs->add_option("--n", opt.n, "Code length (default q)");
  grs->add_option("--k", opt.k, "Dimension")->required();
  grs->add_option("--inner", opt.inner, "Inner product")->required()->check(CLI::IsMember({"euclidean", "hermitian"}));
  auto* ell = construct->add_subcommand("elliptic", "Twisted one-point code C_L(D, m O) on an elliptic curve");
  ell->add_option("--q", opt.q, "Field order")->required();
  ell->add_option("--curve", opt.curve, "Weierstrass coefficients a1,a2,a3,a4,a6 as element indices")->required();
  ell->add_option("--m", opt.m, "Degree of G = m O")->required();
  ell->add_option("--n", opt.n, "Number of affine points used (default all)");
  ell->add_option("--inner", opt.inner, "Inner product")->required()->check(CLI::IsMember({"euclidean", "hermitian"}));

  auto* verify = app.add_subcommand("verify", "Recompute every property of a stored record");
  verify->add_option("target", opt.target, "Record file or catalog id")->required();

  auto* census = app.add_subcommand("census", "Exact full-weight counts against the inclusion-exclusion bound");
  census->add_option("--q", opt.q, "Field order")->required();
  census->add_option("--n-max", opt.n_max, "Largest length")->capture_default_str();
  census->add_option("--m-max", opt.m_max, "Largest degree m")->capture_default_str();

  auto* bounds = app.add_subcommand("bounds", "GV and AG rate curves on a delta grid");
  bounds->add_option("--q", opt.q, "Alphabet size")->required();
  bounds->add_option("--points", opt.points, "Number of grid points")->capture_default_str();
  bounds->add_option("--delta-max", opt.delta_max, "Grid spans (0, delta-max)")->capture_default_str();

  auto* cat = app.add_subcommand("catalog", "Inspect the catalog");
  cat->require_subcommand(1);
  cat->fallthrough();
  auto* list = cat->add_subcommand("list", "One line per record");
  auto* show = cat->add_subcommand("show", "Print one record");
  show->add_option("id", opt.target, "Record id")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitPrecondition;
  }

  try {
    if (grs->parsed()) return run_construct_grs(opt);
    if (ell->parsed()) return run_construct_elliptic(opt);
    if (verify->parsed()) return run_verify(opt);
    if (census->parsed()) return run_census(opt);
    if (bounds->parsed()) return run_bounds(opt);
    if (list->parsed()) return run_catalog_list(opt);
    if (show->parsed()) return run_catalog_show(opt);
  } catch (const socodes::Error& e) {
    std::cerr << "socodes: " << e.what() << '\n';
    return exit_code_for(e);
  }
  return kExitPrecondition;
}
