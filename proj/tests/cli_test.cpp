// Copyright 2026 The tcount Authors
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

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

#include "tcount/io.hpp"

namespace tcount {
namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(TCOUNT_CLI) + " " + args + " 2>&1";
  CliRun r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  while (std::fgets(buf.data(), buf.size(), p)) r.out += buf.data();
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

TEST(Cli, ToffoliIsSeven) {
  const CliRun r = run("tcount " + fixture("toffoli.qc"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("tcount         7"), std::string::npos) << r.out;
}

TEST(Cli, CliffordIsZero) {
  const CliRun r = run("tcount " + fixture("clifford.qc"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("tcount         0"), std::string::npos) << r.out;
}

TEST(Cli, JsonOutputRoundTrips) {
  const CliRun r = run("tcount " + fixture("toffoli.json") + " --json");
  ASSERT_EQ(r.code, 0) << r.out;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["tcount"], 7);
  EXPECT_TRUE(j["telemetry"].contains("max_frontier"));
  EXPECT_TRUE(j["telemetry"].contains("levels"));
  EXPECT_TRUE(j["telemetry"].contains("wall_ms"));
  const Decomposition d = decomposition_from_json(j);
  EXPECT_TRUE(verify_decomposition(d, load_channel(fixture("toffoli.json"))));
}

TEST(Cli, ProvableAnswers) {
  CliRun r = run("tcount-provable " + fixture("t.qc") + " --m 2 --c 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("tcount         1"), std::string::npos) << r.out;
  r = run("tcount-provable " + fixture("clifford.qc") + " --m 1");
  EXPECT_NE(r.out.find("tcount         0"), std::string::npos) << r.out;
  r = run("tcount-provable " + fixture("single_t5.qc") + " --m 3");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("NO (> 3)"), std::string::npos) << r.out;
  r = run("tcount-provable " + fixture("single_t5.qc") + " --m 5 --c 3 --json");
  EXPECT_EQ(Json::parse(r.out)["tcount"], 5);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("tcount /nonexistent.qc").code, 1);
  EXPECT_EQ(run("tcount " + fixture("toffoli.qc") + " --method Q").code, 1);
  EXPECT_EQ(run("bogus").code, 1);
  // Depth cap below the T-count: inconclusive.
  EXPECT_EQ(run("tcount " + fixture("toffoli.qc") + " --m-cap 4").code, 2);
  EXPECT_EQ(run("tcount-provable " + fixture("controlled_s.qc") + " --m 4 --mem-cap 100").code, 3);
}

TEST(Cli, GenIsDeterministicAndMatchesFixtures) {
  const CliRun a = run("gen random --n 2 --tgates 10 --seed 7");
  const CliRun b = run("gen random --n 2 --tgates 10 --seed 7");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("qubits 2"), std::string::npos);
  for (const char* name : {"toffoli", "adder4", "u2"}) {
    const CliRun g = run(std::string("gen ") + name);
    EXPECT_EQ(g.out, read_text(fixture(std::string(name) + ".qc"))) << name;
  }
  EXPECT_EQ(run("gen nosuchgate").code, 1);
}

TEST(Cli, BenchTable2Small) {
  const CliRun r = run("bench --suite table2 --samples 3 --json");
  ASSERT_EQ(r.code, 0) << r.out;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["repeat"], 1);
  for (const Json& row : j["rows"]) EXPECT_EQ(row["bounded"], 3);
}

}  // namespace
}  // namespace tcount
