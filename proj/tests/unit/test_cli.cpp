// Copyright 2026 The sympt Authors
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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "json.hpp"
#include "sympt/cli.hpp"
#include "sympt/config.hpp"
#include "sympt/errors.hpp"

namespace sympt::cli {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("sympt_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string &name, const std::string &text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  int call(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return run(args, out_, err_);
  }

  std::vector<std::string> lines() const {
    std::vector<std::string> v;
    std::istringstream in(out_.str());
    for (std::string l; std::getline(in, l);) v.push_back(l);
    return v;
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(CliTest, SpectrumIsDeterministic) {
  const std::string cfg = write("tms.json", R"({"preset": "tms", "omega1": 1, "omega2": 1, "kappa": 0.6})");
  ASSERT_EQ(call({"spectrum", "--config", cfg}), 0) << err_.str();
  const std::string first = out_.str();
  ASSERT_EQ(call({"spectrum", "--config", cfg}), 0);
  EXPECT_EQ(out_.str(), first);
  EXPECT_EQ(first.rfind("# sympt ", 0), 0u);
  EXPECT_NE(first.find("PTSymmetric"), std::string::npos);
}

TEST_F(CliTest, RandomPresetReproducibleFromSeed) {
  const std::string a = write("a.json", R"({"preset": "random", "n_modes": 3, "seed": 7})");
  ASSERT_EQ(call({"evolve", "--config", a, "--t-grid", "0:1:5"}), 0) << err_.str();
  const std::string first = out_.str();
  ASSERT_EQ(call({"evolve", "--config", a, "--t-grid", "0:1:5"}), 0);
  EXPECT_EQ(out_.str(), first);
  const std::string b = write("b.json", R"({"preset": "random", "n_modes": 3, "seed": 8})");
  ASSERT_EQ(call({"evolve", "--config", b, "--t-grid", "0:1:5"}), 0);
  EXPECT_NE(out_.str(), first);
}

TEST_F(CliTest, EvolveOscillatesBelowAndGrowsAboveThreshold) {
  auto column = [&](const std::string &cfg) {
    EXPECT_EQ(call({"evolve", "--config", cfg, "--t-grid", "0:6:25"}), 0) << err_.str();
    std::vector<double> n;
    const auto ls = lines();
    for (std::size_t k = 2; k < ls.size(); ++k) {
      std::istringstream row(ls[k]);
      std::string t, m;
      std::getline(row, t, ',');
      std::getline(row, m, ',');
      n.push_back(std::stod(m));
    }
    return n;
  };
  const auto symmetric = column(write("s.json", R"({"preset": "sms", "omega0": 1, "kappa": 0.6})"));
  const auto broken = column(write("b.json", R"({"preset": "sms", "omega0": 1, "kappa": 1.5})"));
  ASSERT_EQ(symmetric.size(), 25u);
  bool decreased = false;
  for (std::size_t k = 1; k < symmetric.size(); ++k) decreased |= symmetric[k] < symmetric[k - 1];
  EXPECT_TRUE(decreased);
  for (std::size_t k = 1; k < broken.size(); ++k) EXPECT_GT(broken[k], broken[k - 1]);
}

TEST_F(CliTest, SweepReportsTransition) {
  const std::string cfg = write("tms.json", R"({"preset": "tms", "omega1": 1, "omega2": 1})");
  ASSERT_EQ(call({"sweep", "--config", cfg, "--param", "kappa", "--range", "0.5:1.5", "--steps", "11"}), 0)
      << err_.str();
  const auto ls = lines();
  EXPECT_EQ(ls.size(), 2u + 11u + 1u);
  EXPECT_EQ(ls.back(), "# transition: param_star=1.000000, kind=EP");
}

TEST_F(CliTest, CompileWritesCircuitJson) {
  const std::string cfg = write("sms.json", R"({"preset": "sms", "omega0": 1, "kappa": 0.6})");
  const std::string target = (dir_ / "circuit.json").string();
  ASSERT_EQ(call({"compile", "--config", cfg, "--t", "0.5", "--output", target}), 0) << err_.str();
  EXPECT_TRUE(out_.str().empty());
  std::ifstream in(target);
  const auto doc = nlohmann::json::parse(in);
  EXPECT_EQ(doc["n_modes"], 2);
  EXPECT_EQ(doc["source_mode"], 1);
  EXPECT_EQ(doc["gates"].size(), 2u + 3u + 1u + 3u + 2u + 3u);
}

TEST_F(CliTest, OracleAndTrotterRun) {
  const std::string cfg = write("sms.json", R"({"preset": "sms", "omega0": 1, "kappa": 0.6, "cutoff": 8})");
  EXPECT_EQ(call({"oracle", "--config", cfg, "--t-grid", "0.1:0.3:3"}), 0) << err_.str();
  EXPECT_EQ(lines().size(), 2u + 3u * 2u);
  const std::string tms = write("tms.json", R"({"preset": "tms", "omega1": 1, "omega2": 1, "kappa": 0.5})");
  EXPECT_EQ(call({"trotter-bench", "--config", tms, "--order", "1", "--order", "2"}), 0) << err_.str();
  EXPECT_NE(out_.str().find("# slope order=2"), std::string::npos);
}

TEST_F(CliTest, NonHermitianWIsValidationError) {
  const std::string cfg = write("bad.json", R"({"W": [[1, {"re": 0, "im": 1}], [{"re": 0, "im": 1}, 1]]})");
  EXPECT_EQ(call({"spectrum", "--config", cfg}), 1);
  EXPECT_NE(err_.str().find("kind=ValidationError"), std::string::npos);
  EXPECT_NE(err_.str().find("W not Hermitian"), std::string::npos);
}

TEST_F(CliTest, MalformedJsonReportsLocation) {
  const std::string cfg = write("bad.json", "{\n  \"preset\": \"tms\",\n  \"kappa\": ]\n}");
  EXPECT_EQ(call({"spectrum", "--config", cfg}), 1);
  EXPECT_NE(err_.str().find("kind=ParseError"), std::string::npos);
  EXPECT_NE(err_.str().find("line 3, column 12"), std::string::npos) << err_.str();
}

TEST_F(CliTest, UnknownKeyAndUsageErrors) {
  const std::string cfg = write("bad.json", R"({"preset": "tms", "kapa": 0.6})");
  EXPECT_EQ(call({"spectrum", "--config", cfg}), 1);
  EXPECT_NE(err_.str().find("unknown config key"), std::string::npos);
  EXPECT_EQ(call({"spectrum"}), 1);
  EXPECT_NE(err_.str().find("kind=UsageError"), std::string::npos);
  EXPECT_EQ(call({"spectrum", "--config", (dir_ / "missing.json").string()}), 1);
}

TEST_F(CliTest, NumericalFailureExitsWithTwo) {
  const std::string cfg = write("sms.json", R"({"preset": "sms", "omega0": 1, "kappa": 1.5})");
  EXPECT_EQ(call({"evolve", "--config", cfg, "--t", "100"}), 2);
  EXPECT_NE(err_.str().find("kind=OverflowRisk"), std::string::npos);
}

TEST(ParseConfig, InlineMatricesAndHash) {
  const RunConfig a = parse_config(R"({"W": [[1, 0.5], [0.5, 2]], "K": [[0, {"re": 0, "im": 0.3}], [{"re": 0, "im": 0.3}, 0]]})");
  EXPECT_EQ(a.preset, "inline");
  EXPECT_EQ(a.n_modes, 2);
  const RunConfig b = parse_config(R"({"W": [[1, 0.5], [0.5, 2]]})");
  EXPECT_NE(config_hash(a), config_hash(b));
  EXPECT_EQ(config_hash(a), config_hash(parse_config(a.canonical)));
}

TEST(ParseConfig, RejectsMixedPresetAndMatrix) {
  EXPECT_THROW(parse_config(R"({"preset": "bs", "W": [[1]]})"), ValidationError);
  EXPECT_THROW(parse_config(R"({"preset": "bs", "kappa": 0.2})"), ValidationError);
  EXPECT_THROW(parse_config(R"({"preset": "nope"})"), ValidationError);
}

}  // namespace
}  // namespace sympt::cli
