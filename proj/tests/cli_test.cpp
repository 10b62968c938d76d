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
#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::json;

std::string g_cli;

struct CliResult {
  int status = -1;
  std::string out;
};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("socodes_cli_" + std::to_string(::getpid()) + "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  // Runs the CLI inside the scratch directory; stderr is discarded unless `merge` is set.
  CliResult run(const std::string& args, bool merge = false) const {
    const std::string cmd =
        "cd '" + dir_.string() + "' && '" + g_cli + "' " + args + (merge ? " 2>&1" : " 2>/dev/null");
    CliResult r;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int st = ::pclose(pipe);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
  }

  std::string file(const std::string& name) const { return (dir_ / name).string(); }

  std::size_t catalog_lines() const {
    std::ifstream in(file("catalog.jsonl"));
    std::size_t n = 0;
    for (std::string line; std::getline(in, line);) n += !line.empty();
    return n;
  }

  fs::path dir_;
};

TEST_F(CliTest, ConstructEuclideanGf4) {
  const CliResult a = run("construct grs --q 4 --k 1 --inner euclidean");
  ASSERT_EQ(a.status, 0) << a.out;
  const Json rec = Json::parse(a.out);
  EXPECT_EQ(rec.at("quantum").at("q"), 4);
  EXPECT_EQ(rec.at("quantum").at("n"), 4);
  EXPECT_EQ(rec.at("quantum").at("k"), 2);
  EXPECT_EQ(rec.at("quantum").at("d"), 2);
  EXPECT_EQ(rec.at("quantum").at("mds"), true);
  EXPECT_EQ(rec.at("quantum").at("construction"), "css-euclidean");
  const CliResult b = run("construct grs --q 4 --k 1 --inner euclidean");
  EXPECT_EQ(b.status, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(catalog_lines(), 1u);
}

TEST_F(CliTest, OddCharacteristicObstruction) {
  const CliResult r = run("construct grs --q 5 --n 4 --k 1 --inner euclidean", true);
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.out.find("characteristic"), std::string::npos) << r.out;
  EXPECT_FALSE(fs::exists(file("catalog.jsonl")));
}

TEST_F(CliTest, HermitianRescue) {
  const CliResult r = run("construct grs --q 5 --n 4 --k 1 --inner hermitian");
  ASSERT_EQ(r.status, 0);
  const Json rec = Json::parse(r.out);
  EXPECT_EQ(rec.at("quantum"), Json::parse(R"({"q":5,"n":4,"k":2,"d":2,"construction":"hermitian",
                                              "singleton_defect":0,"mds":true})"));
  EXPECT_EQ(rec.at("field").at("m"), 2);
  EXPECT_EQ(rec.at("inner"), "hermitian");
}

TEST_F(CliTest, ConstructCsv) {
  const CliResult r = run("--format csv construct grs --q 8 --k 3 --inner euclidean");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "id,source,inner,q,n,k,d,singleton_defect,mds");
  EXPECT_NE(r.out.find(",grs,euclidean,8,8,2,4,0,true\n"), std::string::npos) << r.out;
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(run("construct grs --q 16 --k 3 --inner euclidean").status, 4);
  EXPECT_EQ(run("construct grs --q 4 --k 1 --inner euclidean --budget 3").status, 4);
  EXPECT_EQ(run("construct grs --q 6 --k 1 --inner euclidean").status, 2);
  EXPECT_EQ(run("construct grs --q 4 --k 2 --inner euclidean").status, 2);
  EXPECT_EQ(run("construct elliptic --q 5 --curve 0,0,0,0,0 --m 2 --inner hermitian").status, 2);
  EXPECT_EQ(run("construct elliptic --q 5 --curve 0,0,0,1 --m 2 --inner hermitian").status, 2);
  EXPECT_EQ(run("construct elliptic --q 5 --curve 0,0,0,1,1 --m 2 --inner euclidean").status, 2);
  EXPECT_EQ(run("construct elliptic --q 5 --curve 0,0,0,1,1 --m 7 --inner hermitian").status, 3);
  EXPECT_EQ(run("construct grs --q 4 --k 1 --inner symplectic").status, 2);
  EXPECT_EQ(run("frobnicate").status, 2);
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("--help").status, 0);
  EXPECT_EQ(run("verify 0123456789abcdef").status, 2);
  EXPECT_EQ(run("catalog show 0123456789abcdef").status, 2);
  EXPECT_FALSE(fs::exists(file("catalog.jsonl")));
}

TEST_F(CliTest, ConstructElliptic) {
  const CliResult r = run("construct elliptic --q 5 --curve 0,0,0,1,1 --m 2 --n 6 --inner hermitian");
  ASSERT_EQ(r.status, 0);
  const Json rec = Json::parse(r.out);
  EXPECT_EQ(rec.at("construction").at("source"), "elliptic");
  EXPECT_EQ(rec.at("quantum").at("n"), 6);
  EXPECT_EQ(rec.at("quantum").at("k"), 2);
  EXPECT_EQ(rec.at("verification").at("self_orthogonal"), true);
  EXPECT_EQ(run("verify " + rec.at("id").get<std::string>()).status, 0);
  // Characteristic 2: y^2 + y = x^3 over GF(4), a3 = 1.
  const CliResult e = run("construct elliptic --q 4 --curve 0,0,1,0,0 --m 2 --inner euclidean");
  ASSERT_EQ(e.status, 0);
  EXPECT_EQ(Json::parse(e.out).at("quantum").at("construction"), "css-euclidean");
}

TEST_F(CliTest, VerifyRoundTrip) {
  const CliResult c = run("construct grs --q 5 --n 4 --k 1 --inner hermitian");
  ASSERT_EQ(c.status, 0);
  const Json rec = Json::parse(c.out);
  const std::string id = rec.at("id").get<std::string>();

  const CliResult by_id = run("verify " + id);
  EXPECT_EQ(by_id.status, 0) << by_id.out;
  EXPECT_EQ(Json::parse(by_id.out).at("ok"), true);
  EXPECT_EQ(run("verify " + id).out, by_id.out);

  {
    std::ofstream(file("rec.json")) << c.out;
  }
  EXPECT_EQ(run("verify rec.json").status, 0);
  EXPECT_EQ(run("verify catalog.jsonl").status, 0);

  Json tampered = rec;
  tampered["code"]["generator"][0][1] = Json::array({1, 1});
  {
    std::ofstream(file("bad.json")) << tampered.dump() << '\n';
  }
  const CliResult bad = run("verify bad.json");
  EXPECT_EQ(bad.status, 1);
  EXPECT_EQ(Json::parse(bad.out).at("ok"), false);

  const CliResult budget = run("--budget 10 verify " + id);
  EXPECT_EQ(budget.status, 4);
  bool skipped = false;
  const Json report = Json::parse(budget.out);
  for (const auto& check : report.at("checks")) skipped = skipped || check.at("status") == "skipped";
  EXPECT_TRUE(skipped);

  const CliResult csv = run("--format csv verify " + id);
  EXPECT_EQ(csv.out.substr(0, 13), "check,status\n");

  {
    std::ofstream(file("junk.json")) << "{\"id\": 3}\n";
  }
  EXPECT_EQ(run("verify junk.json").status, 2);
}

TEST_F(CliTest, CatalogListAndShow) {
  ASSERT_EQ(run("construct grs --q 4 --k 1 --inner euclidean").status, 0);
  const CliResult h = run("construct grs --q 5 --n 4 --k 1 --inner hermitian");
  ASSERT_EQ(h.status, 0);
  const std::string id = Json::parse(h.out).at("id").get<std::string>();

  const CliResult list = run("catalog list");
  EXPECT_EQ(list.status, 0);
  std::istringstream lines(list.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "id,source,inner,q,n,k,d");
  std::size_t rows = 0;
  while (std::getline(lines, line)) ++rows;
  EXPECT_EQ(rows, 2u);
  EXPECT_NE(list.out.find(id + ",grs,hermitian,5,4,2,2"), std::string::npos);

  const CliResult json = run("--format json catalog list");
  EXPECT_EQ(Json::parse(json.out).size(), 2u);

  const CliResult show = run("catalog show " + id);
  EXPECT_EQ(show.status, 0);
  EXPECT_EQ(show.out, h.out);

  EXPECT_EQ(run("--catalog other.jsonl catalog list").out, "id,source,inner,q,n,k,d\n");
}

TEST_F(CliTest, Census) {
  const CliResult r = run("census --q 5");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')),
            "q,n,m,exact_full_weight_count,lower_bound,threshold_paper,threshold_derived,predicted_positive,"
            "actually_positive");
  EXPECT_NE(r.out.find("\n5,4,1,4,-0.0256,"), std::string::npos) << r.out;
  EXPECT_EQ(run("census --q 5").out, r.out);
  const CliResult j = run("--format json census --q 3 --n-max 3");
  ASSERT_EQ(j.status, 0);
  const Json rows = Json::parse(j.out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[1].at("n"), 3);
  EXPECT_EQ(rows[1].at("exact_full_weight_count"), 2);
  EXPECT_EQ(run("census --q 6").status, 2);
  EXPECT_EQ(run("--budget 2 census --q 5").status, 4);
}

TEST_F(CliTest, Bounds) {
  const CliResult two = run("bounds --q 2 --points 4");
  ASSERT_EQ(two.status, 0);
  EXPECT_EQ(two.out.substr(0, two.out.find('\n')), "q,delta,gv_rate,ag_rate");
  EXPECT_NE(two.out.find("\n2,0.1,"), std::string::npos);
  EXPECT_EQ(two.out.back(), '\n');
  EXPECT_EQ(two.out[two.out.size() - 2], ',');  // empty AG column

  const CliResult r = run("bounds --q 64 --delta-max 0.35");
  ASSERT_EQ(r.status, 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  double prev_gv = 2, prev_ag = 2;
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    std::istringstream cells(line);
    std::string q, delta, gv, ag;
    std::getline(cells, q, ',');
    std::getline(cells, delta, ',');
    std::getline(cells, gv, ',');
    std::getline(cells, ag, ',');
    EXPECT_LT(std::stod(gv), prev_gv);
    EXPECT_LT(std::stod(ag), prev_ag);
    prev_gv = std::stod(gv);
    prev_ag = std::stod(ag);
    ++rows;
  }
  EXPECT_EQ(rows, 100u);
  EXPECT_EQ(run("bounds --q 64 --delta-max 0.35").out, r.out);
  EXPECT_EQ(run("bounds --q 64 --delta-max 0.7").status, 2);
  EXPECT_EQ(run("bounds --q 1").status, 2);
}

}  // namespace

int main(int argc, char** argv) {
  ::testing::InitGoogleTest(&argc, argv);
  if (argc < 2) {
    std::fprintf(stderr, "usage: cli_test PATH_TO_SOCODES\n");
    return 2;
  }
  g_cli = fs::absolute(argv[1]).string();
  return RUN_ALL_TESTS();
}
