// Copyright 2026 The Rollcall Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "rollcall/cli.hpp"
#include "test_support.hpp"

namespace rollcall {
namespace {

using testing::q;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string sample(const std::string& name) {
  return std::string(ROLLCALL_SAMPLES_DIR) + "/" + name;
}

std::string data(const std::string& name) {
  return std::string(ROLLCALL_TEST_DATA_DIR) + "/" + name;
}

std::string first_line(const std::string& text) {
  return text.substr(0, text.find('\n'));
}

class TempFile {
 public:
  explicit TempFile(const std::string& contents)
      : path_(std::filesystem::temp_directory_path() /
              ("rollcall_cli_test_" + std::to_string(counter_++) + ".json")) {
    std::ofstream(path_) << contents;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  static inline int counter_ = 0;
  std::filesystem::path path_;
};

TEST(CliPower, WeightedShapley) {
  const auto r = run_cli({"power", sample("weighted_3_211.json"), "--method", "shapley"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(first_line(r.out), "1: 2/3, 2: 1/6, 3: 1/6");
}

TEST(CliPower, ShapleyEnginesAgree) {
  const auto exact = run_cli({"power", sample("council_7.json"), "--format", "json"});
  const auto ref = run_cli(
      {"power", sample("council_7.json"), "--engine", "reference", "--format", "json"});
  ASSERT_EQ(exact.code, 0);
  ASSERT_EQ(ref.code, 0);
  auto a = io::Json::parse(exact.out);
  auto b = io::Json::parse(ref.out);
  EXPECT_EQ(a["values"], b["values"]);
}

TEST(CliPower, RollcallReference) {
  const auto r = run_cli({"power", sample("unanimity_12.json"), "--method", "rollcall",
                          "--dist", sample("point_1_of_2.json"), "--engine", "reference"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(first_line(r.out), "1: 0, 2: 1");
}

TEST(CliPower, JsonSchema) {
  const auto r = run_cli(
      {"power", sample("weighted_3_211.json"), "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = io::Json::parse(r.out);
  EXPECT_EQ(j["players"], 3);
  EXPECT_EQ(j["method"], "shapley");
  EXPECT_EQ(j["values"], (io::Json{"2/3", "1/6", "1/6"}));
  EXPECT_DOUBLE_EQ(j["values_decimal"][0].get<double>(), 0.6666666667);
  EXPECT_DOUBLE_EQ(j["values_decimal"][1].get<double>(), 0.1666666667);
  EXPECT_FALSE(j.contains("std_error"));
}

TEST(CliPower, MonteCarloJsonIsByteIdentical) {
  const std::vector<std::string> args = {
      "power", sample("weighted_3_211.json"), "--method", "rollcall",
      "--dist", sample("uniform_3.json"), "--engine", "mc",
      "--samples", "20000", "--seed", "11", "--format", "json"};
  const auto a = run_cli(args);
  const auto b = run_cli(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  const auto j = io::Json::parse(a.out);
  EXPECT_EQ(j["samples"], 20000);
  EXPECT_EQ(j["seed"], 11);
  EXPECT_EQ(j["std_error"].size(), 3u);
}

TEST(CliPower, MonteCarloIndependentDistribution) {
  const auto r = run_cli({"power", sample("weighted_3_211.json"), "--method", "rollcall",
                          "--dist", sample("independent_half_3.json"), "--engine", "mc",
                          "--samples", "20000", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = io::Json::parse(r.out);
  const double exact[] = {2.0 / 3, 1.0 / 6, 1.0 / 6};
  for (int k = 0; k < 3; ++k) {
    EXPECT_LE(std::abs(j["values_decimal"][k].get<double>() - exact[k]),
              4 * j["std_error"][k].get<double>());
  }
}

TEST(CliPower, TableForMonteCarloShowsStandardErrors) {
  const auto r = run_cli({"power", sample("weighted_3_211.json"), "--engine", "mc",
                          "--samples", "100"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("player  estimate"), std::string::npos);
  EXPECT_NE(r.out.find("std_error"), std::string::npos);
}

TEST(CliPower, ExitCodes) {
  EXPECT_EQ(run_cli({"power", sample("weighted_3_211.json"), "--engine", "mc",
                     "--samples", "0"}).code, 3);
  EXPECT_EQ(run_cli({"power", sample("weighted_3_211.json"), "--engine", "mc"}).code, 2);
  EXPECT_EQ(run_cli({"power", sample("weighted_3_211.json"), "--samples", "5"}).code, 2);
  EXPECT_EQ(run_cli({"power", sample("weighted_3_211.json"), "--method", "rollcall"}).code, 2);
  EXPECT_EQ(run_cli({"power", sample("weighted_3_211.json"), "--dist",
                     sample("uniform_3.json")}).code, 2);
  EXPECT_EQ(run_cli({"power", sample("weighted_3_211.json"), "--method", "banzhaf"}).code, 2);
  EXPECT_EQ(run_cli({"power", sample("weighted_3_211.json"), "--method", "rollcall",
                     "--dist", sample("uniform_2.json")}).code, 2);
  EXPECT_EQ(run_cli({"power", data("no_such_file.json")}).code, 2);
  EXPECT_EQ(run_cli({"power", sample("council_7.json"), "--method", "rollcall",
                     "--dist", sample("uniform_3.json")}).code, 2);
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
}

TEST(CliPower, GuardOnReferenceEngine) {
  TempFile dist(R"({"kind": "uniform", "n": 7})");
  const auto r = run_cli({"power", sample("council_7.json"), "--engine", "reference",
                          "--method", "rollcall", "--dist", dist.path()});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("limit"), std::string::npos);
}

TEST(CliPower, RejectsDecimalsAndReportsPosition) {
  TempFile game(R"({"kind": "weighted", "quota": "3", "weights": ["2", "1.0", "1"]})");
  const auto r = run_cli({"power", game.path()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("game.weights[1]"), std::string::npos) << r.err;
}

TEST(CliPower, InvalidGameIsAParseError) {
  TempFile game(R"({"kind": "explicit", "n": 1, "values": ["1", "1"]})");
  EXPECT_EQ(run_cli({"power", game.path()}).code, 2);
  TempFile short_table(R"({"kind": "explicit", "n": 2, "values": ["0", "1"]})");
  EXPECT_EQ(run_cli({"power", short_table.path()}).code, 2);
  TempFile unknown(R"({"kind": "majority", "n": 3})");
  EXPECT_EQ(run_cli({"power", unknown.path()}).code, 2);
}

TEST(CliPower, ExplicitSerializationRoundTrips) {
  testing::Rng rng(61);
  for (int n = 1; n <= 5; ++n) {
    const auto v = testing::random_game(rng, n);
    TempFile file(io::game_to_json(v).dump());
    EXPECT_EQ(io::parse_game(io::load_json_file(file.path())), v);
    const auto a = run_cli({"power", file.path(), "--format", "json"});
    ASSERT_EQ(a.code, 0);
    const auto j = io::Json::parse(a.out);
    const auto phi = shapley_by_coalitions(v);
    for (int i = 1; i <= n; ++i) EXPECT_EQ(j["values"][i - 1], to_string(phi(i)));
  }
}

TEST(CliCheckExchangeable, Examples) {
  const auto u = run_cli({"check-exchangeable", sample("uniform_3.json")});
  EXPECT_EQ(u.code, 0);
  EXPECT_EQ(u.out, "exchangeable\n");
  const auto p = run_cli({"check-exchangeable", sample("point_1_of_2.json")});
  EXPECT_EQ(p.code, 1);
  EXPECT_EQ(p.out, "violation: X=∅ i=1 j=2 p=1 vs 0\n");
  EXPECT_EQ(run_cli({"check-exchangeable", sample("size_profile_4.json")}).code, 0);
  EXPECT_EQ(run_cli({"check-exchangeable", data("malformed.json")}).code, 2);
  EXPECT_EQ(run_cli({"check-exchangeable", data("decimal_mass.json")}).code, 2);
  EXPECT_EQ(run_cli({"check-exchangeable", data("negative_mass.json")}).code, 2);
  EXPECT_EQ(run_cli({"check-exchangeable", data("uniform_30.json")}).code, 3);
}

TEST(CliWitness, PointMass) {
  const auto r = run_cli({"witness", sample("point_1_of_2.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out,
            "violation: X=∅ i=1 j=2 p=1 vs 0\n"
            "game: {\"kind\":\"explicit\",\"n\":2,\"values\":[\"0\",\"0\",\"0\",\"1\"]}\n"
            "players 1 and 2 are equivalent in the game\n"
            "rollcall value: (0, 1)\n"
            "shapley value:  (1/2, 1/2)\n");
}

TEST(CliWitness, JsonReport) {
  const auto r = run_cli({"witness", sample("independent_half_third.json"), "--format", "json"});
  EXPECT_EQ(r.code, 1);
  const auto j = io::Json::parse(r.out);
  EXPECT_EQ(j["exchangeable"], false);
  const auto v = io::parse_game(j["game"]);
  const int i = j["violation"]["i"];
  const int k = j["violation"]["j"];
  EXPECT_TRUE(are_equivalent(v, i, k));
  const auto p = independent_distribution(std::vector<Rational>{q(1, 2), q(1, 3)});
  const auto phi = rollcall_value_reference(v, p);
  EXPECT_EQ(j["rollcall_value"], io::rational_array(phi.entries()));
  EXPECT_NE(phi(i), phi(k));
}

TEST(CliWitness, ExchangeableAndGuard) {
  const auto r = run_cli({"witness", sample("uniform_2.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "exchangeable; no witness exists\n");
  const auto j = run_cli({"witness", sample("uniform_2.json"), "--format", "json"});
  EXPECT_EQ(j.code, 0);
  EXPECT_EQ(io::Json::parse(j.out), io::Json::parse(R"({"exchangeable": true})"));
  EXPECT_EQ(run_cli({"witness", sample("one_player.json")}).code, 3);
  EXPECT_EQ(run_cli({"witness", data("malformed.json")}).code, 2);
}

TEST(CliVerifyLemma, PassesAndGuards) {
  const auto r = run_cli({"verify-lemma", "--m", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  EXPECT_EQ(r.out.rfind("PASS lemma m=4", 0), 0u);
  EXPECT_EQ(run_cli({"verify-lemma", "--m", "0"}).code, 0);
  EXPECT_EQ(run_cli({"verify-lemma", "--m", "9"}).code, 3);
  EXPECT_EQ(run_cli({"verify-lemma", "--m", "-1"}).code, 3);
  EXPECT_EQ(run_cli({"verify-lemma"}).code, 2);
  EXPECT_EQ(run_cli({"verify-lemma", "--m", "four"}).code, 2);
}

TEST(CliHelp, PrintsUsage) {
  const auto r = run_cli({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verify-lemma"), std::string::npos);
}

}  // namespace
}  // namespace rollcall
