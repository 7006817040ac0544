// Copyright 2026 The percop Authors.
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

// Runs the command-line tool as a subprocess.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <string>

#include "percop/io.hpp"

namespace percop {
namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(PERCOP_CLI_PATH) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string temp_file(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("percop-cli-" + name)).string();
}

TEST(Cli, VerifyTableSummary) {
  CliRun r = run("verify-table");
  ASSERT_EQ(r.code, 0) << r.out;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["summary"]["PASS"], 11);
  EXPECT_EQ(j["summary"]["external (out of scope)"], 13);
  EXPECT_EQ(j["summary"]["UNDETERMINED"], 3);
  EXPECT_EQ(j["exit_code"], 0);
  EXPECT_EQ(run("verify-table").out, r.out);
}

TEST(Cli, VerifyTableWithoutWitnesses) {
  const std::string empty = temp_file("empty");
  std::filesystem::create_directories(empty);
  EXPECT_EQ(run("verify-table --data-dir " + empty).code, 2);
  EXPECT_EQ(run("verify-table --skip-search-rows --data-dir " + empty).code, 0);
}

TEST(Cli, GenerateThenSolveAndTriple) {
  const std::string f = temp_file("bowtie.json");
  ASSERT_EQ(run("generate bowtie_221 --out " + f).code, 0);
  CliRun t = run("triple " + f);
  ASSERT_EQ(t.code, 0) << t.out;
  Json j = Json::parse(t.out);
  EXPECT_EQ(j["triple"]["footprint_copnum"], 2);
  EXPECT_EQ(j["triple"]["max_snapshot_copnum"], 2);
  EXPECT_EQ(j["triple"]["copnum"], 1);
  EXPECT_EQ(j["matches_expected"], true);

  const std::string trace = temp_file("trace.json");
  CliRun s = run("solve " + f + " --trace " + trace);
  ASSERT_EQ(s.code, 0) << s.out;
  EXPECT_EQ(Json::parse(s.out)["copnum"], 1);
  Json tr = Json::parse(read_text_file(trace));
  EXPECT_TRUE(tr["rounds"].back()["captured"].get<bool>());
  EXPECT_EQ(Json::parse(run("solve " + f + " --max-cops 0").out)["copnum"], nullptr);
}

TEST(Cli, CornersAndTreewidth) {
  const std::string f = temp_file("circ.json");
  ASSERT_EQ(run("generate circulant_123 --out " + f).code, 0);
  EXPECT_EQ(Json::parse(run("corners " + f + " --k 2").out)["corner_nodes"], 0);
  EXPECT_GT(Json::parse(run("corners " + f + " --k 3").out)["corner_nodes"], 0);
  const std::string q = temp_file("q3.json");
  ASSERT_EQ(run("generate q3_rotation --out " + q).code, 0);
  Json tw = Json::parse(run("treewidth " + q).out);
  EXPECT_EQ(tw["treewidth"], 3);
  CliRun b = run("tw-bound " + q);
  ASSERT_EQ(b.code, 0) << b.out;
  EXPECT_EQ(Json::parse(b.out)["bag_strategy_wins"], true);
}

TEST(Cli, SearchIsReproducible) {
  CliRun a = run("search --spec thm112 --seed 3");
  CliRun b = run("search --spec thm112 --seed 3");
  ASSERT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
  Json j = Json::parse(a.out);
  EXPECT_EQ(j["status"], "found");
  EXPECT_EQ(j["witness"]["certificate"]["satisfied"], true);
}

TEST(Cli, ErrorsAreReportedAsJson) {
  const std::string f = temp_file("loop.json");
  write_text_file(f, "{\"version\": 1, \"n\": 2, \"period\": 1, \"snapshots\": [[[1, 1]]]}\n");
  CliRun r = run("triple " + f);
  EXPECT_EQ(r.code, 1);
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["error"], "self_loop");
  EXPECT_EQ(run("solve /nonexistent/file.json").code, 1);
  EXPECT_NE(run("generate no_such_thing").code, 0);
}

TEST(Cli, StateBudgetFromEnvironment) {
  const std::string f = temp_file("petersen.json");
  ASSERT_EQ(run("generate diagonal_333 --out " + f).code, 0);
  CliRun r = run("solve " + f + " 2>/dev/null");
  ASSERT_EQ(r.code, 0);
  const std::string cmd = "PERCOP_STATE_BUDGET=10 " + std::string(PERCOP_CLI_PATH) + " solve " + f;
  FILE* pipe = popen(cmd.c_str(), "r");
  ASSERT_NE(pipe, nullptr);
  char buf[4096];
  std::string out;
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  EXPECT_EQ(WEXITSTATUS(status), 3);
  EXPECT_EQ(Json::parse(out)["error"], "budget_exceeded");
}

}  // namespace
}  // namespace percop
