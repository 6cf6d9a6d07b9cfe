// Copyright 2026 The tspbound Authors
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

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

#include "tspbound/trace.hpp"
#include "tspbound/tsplib_io.hpp"

namespace tspbound {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code = -1;
  std::string out;
};

Outcome run(const std::string& args) {
  const std::string cmd = std::string(TSPBOUND_CLI_PATH) + " " + args + " 2>/dev/null";
  Outcome o;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return o;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) o.out.append(buf.data(), got);
  const int status = pclose(pipe);
  o.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return o;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("tspbound_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    write_file(path("d4.tsp"),
               "NAME: D4\nTYPE: TSP\nDIMENSION: 4\nEDGE_WEIGHT_TYPE: EXPLICIT\n"
               "EDGE_WEIGHT_FORMAT: FULL_MATRIX\nEDGE_WEIGHT_SECTION\n"
               "0 1 2 10\n1 0 1 2\n2 1 0 1\n10 2 1 0\nEOF\n");
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, GenWritesParseableDeterministicFile) {
  const Outcome first = run("gen --n 8 --seed 1 --kind euclidean --out " + path("a.tsp"));
  ASSERT_EQ(first.code, 0);
  EXPECT_EQ(first.out, "euc-8-1 n=8\n");
  EXPECT_EQ(read_tsplib(path("a.tsp")).n(), 8u);
  ASSERT_EQ(run("gen --n 8 --seed 1 --kind euclidean --out " + path("b.tsp")).code, 0);
  EXPECT_EQ(read_file(path("a.tsp")), read_file(path("b.tsp")));
  EXPECT_EQ(run("gen --n 6 --seed 2 --kind metric --out " + path("m.tsp")).code, 0);
  EXPECT_TRUE(is_metric(read_tsplib(path("m.tsp"))));
}

TEST_F(CliTest, GenRejectsBadFlags) {
  EXPECT_EQ(run("gen --n 2 --seed 1 --out " + path("x.tsp")).code, 1);
  EXPECT_EQ(run("gen --n 5 --kind geo --out " + path("x.tsp")).code, 1);
  EXPECT_EQ(run("gen --n 5").code, 1);
  EXPECT_EQ(run("").code, 1);
  EXPECT_FALSE(fs::exists(path("x.tsp")));
}

TEST_F(CliTest, SolveGoldens) {
  ASSERT_EQ(run("solve --heuristic nn --instance " + path("d4.tsp") + " --trace-out " + path("nn.json")).code, 0);
  const Trace nn = trace_from_json(read_file(path("nn.json")));
  EXPECT_EQ(nn.final_weight, 13);
  EXPECT_TRUE(validate_trace(nn, read_tsplib(path("d4.tsp"))).empty());

  const Outcome ins = run("solve --heuristic cheapest-insertion --instance " + path("d4.tsp"));
  ASSERT_EQ(ins.code, 0);
  EXPECT_EQ(trace_from_json(ins.out).final_weight, 6);

  EXPECT_EQ(trace_from_json(run("solve --heuristic greedy --instance " + path("d4.tsp")).out).final_weight, 13);
  EXPECT_EQ(trace_from_json(run("solve --heuristic nn --all-starts --instance " + path("d4.tsp")).out)
                .final_weight,
            6);  // start 1: 1-0-2-3-1
}

TEST_F(CliTest, SolveErrors) {
  EXPECT_EQ(run("solve --heuristic unknown --instance " + path("d4.tsp")).code, 1);
  write_file(path("bad.tsp"), "NAME: x\nTYPE: TSP\nDIMENSION: 3\nEDGE_WEIGHT_TYPE: GEO\n");
  EXPECT_EQ(run("solve --heuristic nn --instance " + path("bad.tsp")).code, 2);
  EXPECT_EQ(run("solve --heuristic nn --instance " + path("missing.tsp")).code, 2);
  EXPECT_EQ(run("solve --heuristic nn --start 9 --instance " + path("d4.tsp")).code, 1);
}

TEST_F(CliTest, ReportGoldens) {
  ASSERT_EQ(run("solve --heuristic nn --instance " + path("d4.tsp") + " --trace-out " + path("nn.json")).code, 0);
  const Outcome json = run("report --trace " + path("nn.json") + " --instance " + path("d4.tsp"));
  ASSERT_EQ(json.code, 0);
  const auto doc = nlohmann::json::parse(json.out);
  EXPECT_NEAR(doc["ratio"].get<double>(), 13.0 / 6.0, 1e-12);
  EXPECT_EQ(doc["pr_holds"], true);
  EXPECT_EQ(doc["avarc_all"], false);

  const Outcome csv = run("report --format csv --trace " + path("nn.json") + " --instance " + path("d4.tsp"));
  ASSERT_EQ(csv.code, 0);
  EXPECT_NE(csv.out.find("\nD4,nn,4,6,13,2.1666666666666665,"), std::string::npos);

  ASSERT_EQ(run("solve --heuristic cheapest-insertion --instance " + path("d4.tsp") + " --trace-out " +
                path("ins.json"))
                .code,
            0);
  const auto ins = nlohmann::json::parse(run("report --trace " + path("ins.json") + " --instance " + path("d4.tsp")).out);
  EXPECT_EQ(ins["ratio"].get<double>(), 1.0);
}

TEST_F(CliTest, ReportErrors) {
  ASSERT_EQ(run("gen --n 25 --seed 4 --out " + path("big.tsp")).code, 0);
  ASSERT_EQ(run("solve --heuristic nn --instance " + path("big.tsp") + " --trace-out " + path("big.json")).code, 0);
  EXPECT_EQ(run("report --trace " + path("big.json") + " --instance " + path("big.tsp")).code, 3);

  // A trace that does not belong to the instance.
  ASSERT_EQ(run("gen --n 4 --seed 4 --out " + path("other.tsp")).code, 0);
  ASSERT_EQ(run("solve --heuristic nn --instance " + path("d4.tsp") + " --trace-out " + path("nn.json")).code, 0);
  EXPECT_EQ(run("report --trace " + path("nn.json") + " --instance " + path("other.tsp")).code, 2);
  write_file(path("broken.json"), "{\"n\": 4}");
  EXPECT_EQ(run("report --trace " + path("broken.json") + " --instance " + path("d4.tsp")).code, 2);
}

TEST_F(CliTest, SweepRowsSummaryAndDeterminism) {
  const std::string flags = "sweep --n-min 5 --n-max 10 --count 20 --seed 3 --heuristic nn --csv-out ";
  const Outcome a = run(flags + path("a.csv"));
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out.rfind("pr_holds=", 0), 0u);
  EXPECT_NE(a.out.find("/120 thelog_holds="), std::string::npos);
  const std::string csv = read_file(path("a.csv"));
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 121);
  const Outcome b = run(flags + path("b.csv"));
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(csv, read_file(path("b.csv")));
}

TEST_F(CliTest, SweepGuards) {
  const std::string base = "sweep --n-max 6 --count 2 --seed 1 --csv-out " + path("s.csv");
  EXPECT_EQ(run(base + " --n-min 3").code, 1);
  EXPECT_EQ(run(base + " --n-min 3 --allow-small").code, 0);
  EXPECT_EQ(run(base + " --n-min 7").code, 1);
  EXPECT_EQ(run("sweep --n-min 5 --n-max 22 --count 1 --csv-out " + path("s.csv")).code, 3);
}

TEST_F(CliTest, CheckHarmonic) {
  const Outcome ten = run("check-harmonic --n-max 10");
  ASSERT_EQ(ten.code, 0);
  EXPECT_EQ(std::count(ten.out.begin(), ten.out.end(), '\n'), 12);
  EXPECT_NE(ten.out.find("4,2.08333333333333,2,FAILS\n"), std::string::npos);
  EXPECT_NE(ten.out.find("5,2.28333333333333,2.32192809488736,holds\n"), std::string::npos);
  EXPECT_NE(ten.out.find("failures=4 at n in {1,2,3,4}"), std::string::npos);

  const Outcome one = run("check-harmonic --n-max 1");
  EXPECT_EQ(one.out, "n,harmonic,log2n,holds\n1,1,0,FAILS\nfailures=1 at n in {1}\n");
  EXPECT_EQ(run("check-harmonic --n-max 0").code, 1);
}

}  // namespace
}  // namespace tspbound
