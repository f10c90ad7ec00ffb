// Copyright 2026 The fermitomo Authors
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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "fermitomo/serialization.h"

namespace fermitomo {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    if (std::string(FERMITOMO_CLI_PATH).empty()) GTEST_SKIP() << "command-line tool not built";
    dir_ = fs::temp_directory_path() /
           ("fermitomo_cli_test_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  int run(const std::string& args) {
    const std::string cmd = std::string(FERMITOMO_CLI_PATH) + " " + args + " > " + (dir_ / "stdout.txt").string() +
                            " 2> " + (dir_ / "stderr.txt").string();
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  fs::path write(const std::string& name, const Json& j) {
    const fs::path p = dir_ / name;
    write_json_file(p, j);
    return p;
  }

  fs::path dir_;
};

TEST_F(CliTest, ValidateAcceptsPairState) {
  Matrix rho = Matrix::Zero(2, 2);
  rho(1, 1) = 1.0;
  const fs::path p = write("rho.json", to_json(FermionState(rho)));
  EXPECT_EQ(run("validate " + p.string() + " --out " + dir_.string()), 0);
  const Json report = read_json_file(dir_ / "validate.json");
  EXPECT_EQ(report["valid"], true);
  EXPECT_EQ(report["kind"], "state");
}

TEST_F(CliTest, ValidateRejectsSuperposedParity) {
  const Json plus = {{"type", "state"}, {"m", 1}, {"rho", {{{0.5, 0.0}, {0.5, 0.0}}, {{0.5, 0.0}, {0.5, 0.0}}}}};
  EXPECT_EQ(run("validate " + write("plus.json", plus).string()), 1);
  EXPECT_NE(slurp(dir_ / "stdout.txt").find("\"sr_valid\""), std::string::npos);
}

TEST_F(CliTest, ValidateRejectsChiWithOffBlockEntry) {
  Matrix chi = Matrix::Zero(4, 4);
  chi(0, 0) = 1.0;
  chi(0, 1) = chi(1, 0) = 0.1;
  const Json j = {{"m", 1}, {"representation", "chi"}, {"data", to_json(chi)}};
  EXPECT_EQ(run("validate " + write("chi.json", j).string()), 1);
}

TEST_F(CliTest, MalformedInputIsUsageError) {
  std::ofstream(dir_ / "bad.json") << "[1, 2";
  EXPECT_EQ(run("validate " + (dir_ / "bad.json").string()), 2);
  EXPECT_EQ(run("simulate --m 9"), 2);
  EXPECT_EQ(run("simulate --map nonsense"), 2);
}

TEST_F(CliTest, SimulateIsDeterministic) {
  ASSERT_EQ(run("simulate --m 1 --map T --shots 500 --seed 7"), 0);
  const std::string first = slurp(dir_ / "stdout.txt");
  ASSERT_EQ(run("simulate --m 1 --map T --shots 500 --seed 7"), 0);
  EXPECT_EQ(first, slurp(dir_ / "stdout.txt"));
  const ExperimentRecord r = record_from_json(Json::parse(first));
  EXPECT_EQ(r.shots, 500u);
  EXPECT_EQ(r.setting_count(), 12u);
}

TEST_F(CliTest, SimulateThenReconstruct) {
  ASSERT_EQ(run("simulate --m 1 --map T --out " + dir_.string()), 0);
  ASSERT_EQ(run("reconstruct " + (dir_ / "record.json").string() + " --truth T --out " + dir_.string()), 0);
  const Json j = read_json_file(dir_ / "reconstruction.json");
  EXPECT_EQ(j["informationally_complete"], true);
  EXPECT_LT(j["metrics"]["overall"]["max_abs"].get<double>(), 1e-9);
}

TEST_F(CliTest, GenGatesWritesBothSets) {
  ASSERT_EQ(run("gen-gates --m 2 --out " + dir_.string()), 0);
  const Json j = read_json_file(dir_ / "gatesets.json");
  EXPECT_EQ(j["G"]["size"], 16);
  EXPECT_EQ(j["U"]["size"], 9);
}

}  // namespace
}  // namespace fermitomo
