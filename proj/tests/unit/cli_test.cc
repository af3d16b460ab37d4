// Copyright 2026 The nlgames Authors
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

#include "commands.h"

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "nlgames/random.h"
#include "nlgames/serialization.h"

namespace nlgames::cli {
namespace {

const std::string kFixtures = NLGAMES_FIXTURE_DIR;

struct CliRun {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return kFixtures + "/" + name; }

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("nlgames_cli_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

TEST(Cli, classical_chsh) {
  const CliRun r = run({"value", "classical", fixture("chsh.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = r.json();
  EXPECT_EQ(j["command"], "value classical");
  EXPECT_EQ(j["results"]["value"], 0.75);
  EXPECT_EQ(j["results"]["exact"], true);
  EXPECT_EQ(j["version"], "0.1.0");
  EXPECT_FALSE(j.contains("seed"));
  std::ifstream in(fixture("chsh.json"));
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(j["inputs_digest"], sha256_hex(ss.str()));
}

TEST(Cli, sha256_known_vector) {
  EXPECT_EQ(sha256_hex("abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Cli, missing_file_is_io_error) {
  const CliRun r = run({"value", "classical", "/nonexistent/game.json"});
  EXPECT_EQ(r.code, kExitIo);
  EXPECT_NE(r.err.find("E_IO"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, malformed_game_is_parse_error) {
  const CliRun r = run({"value", "classical", temp_file("bad.json", "{\"inputs\": 2,")});
  EXPECT_EQ(r.code, kExitIo);
  EXPECT_NE(r.err.find("E_PARSE"), std::string::npos);
}

TEST(Cli, usage_errors_are_param_errors) {
  EXPECT_EQ(run({"value", "classical"}).code, kExitParam);
  EXPECT_EQ(run({"frobnicate"}).code, kExitParam);
  EXPECT_EQ(run({"verify", "nothing"}).code, kExitParam);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST(Cli, entangled_chsh) {
  const CliRun r = run({"value", "entangled", fixture("chsh.json"), "--dim", "2", "--restarts",
                     "20", "--seed", "7"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = r.json();
  const double v = j["results"]["value"];
  EXPECT_GE(v, 0.8525);
  EXPECT_LE(v, std::pow(std::cos(std::numbers::pi / 8), 2) + 1e-6);
  EXPECT_EQ(j["seed"], 7);
  EXPECT_EQ(j["results"]["lower_bound"], true);
}

TEST(Cli, sic_chsh_family) {
  const CliRun r = run({"sic", fixture("chsh-advice-family.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json s = r.json()["results"]["sic"];
  EXPECT_GT(s["sic"].get<double>(), 0.0);
  EXPECT_LT(std::abs(s["nonsuperposed_i_y"].get<double>()), 1e-9);
  EXPECT_LT(std::abs(s["nonsuperposed_i_x"].get<double>()), 1e-9);
}

TEST(Cli, sic_identical_family) {
  const CliRun r = run({"sic", fixture("identical-family.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NEAR(r.json()["results"]["sic"]["sic"].get<double>(), 0.0, 1e-9);
}

TEST(Cli, sic_product_doubles) {
  const double one = run({"sic", fixture("chsh-advice-family.json")}).json()["results"]["sic"]["sic"];
  const CliRun two = run({"sic", fixture("chsh-advice-family.json"), "--product", "2"});
  ASSERT_EQ(two.code, kExitOk) << two.err;
  EXPECT_NEAR(two.json()["results"]["sic"]["sic"].get<double>(), 2.0 * one, 1e-6);
}

TEST(Cli, sic_dimension_cap) {
  Rng rng = make_stream(1, 0);
  std::vector<ComplexVector> states;
  for (int i = 0; i < 16; ++i) states.push_back(random_unit_vector(16 * 17, rng));
  const AdviceFamily f(4, 16, 17, std::vector<double>(16, 1.0 / 16.0), states);
  const CliRun r = run({"sic", temp_file("big.json", family_to_json(f).dump())});
  EXPECT_EQ(r.code, kExitParam);
  EXPECT_NE(r.err.find("E_DIM"), std::string::npos);
}

TEST(Cli, sic_chain_with_game) {
  const CliRun r = run({"sic", fixture("chsh-advice-family.json"), "--game", fixture("chsh.json"),
                     "--meas", "basis", "--verify-chain", "--omega-star", "0.8535533905932737"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json chain = r.json()["results"]["chain"];
  EXPECT_EQ(chain["passed"], true);
  EXPECT_NEAR(chain["advice_value"].get<double>(), 1.0, 1e-12);
  EXPECT_EQ(chain["checks"].size(), 5u);
}

TEST(Cli, sic_chain_seesaw_omega_is_seeded) {
  const CliRun r = run({"sic", fixture("chsh-advice-family.json"), "--game", fixture("chsh.json"),
                     "--seed", "4"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = r.json();
  EXPECT_EQ(j["seed"], 4);
  EXPECT_EQ(j["results"]["chain"]["omega_star_is_lower_bound"], true);
}

TEST(Cli, sic_single_game_for_skewed_distribution) {
  const AdviceFamily chsh = chsh_advice_family();
  const AdviceFamily skewed(2, 2, 2, {0.3, 0.2, 0.2, 0.3}, chsh.states());
  const CliRun r = run({"sic", temp_file("skewed.json", family_to_json(skewed).dump()), "--game",
                        fixture("chsh-biased.json"), "--omega-star", "0.8535533905932737"});
  const Json j = r.json();
  ASSERT_TRUE(j["results"].contains("single_game")) << r.out;
  EXPECT_EQ(j["results"]["single_game"]["distance_ok"], false);
  EXPECT_EQ(r.code, kExitOk);
}

TEST(Cli, sic_verify_chain_needs_game) {
  EXPECT_EQ(run({"sic", fixture("chsh-advice-family.json"), "--verify-chain"}).code, kExitParam);
}

TEST(Cli, simulate_reports_both_checks) {
  const CliRun r = run({"simulate", fixture("chsh.json"), "--trials", "2000", "--seed", "5"});
  ASSERT_TRUE(r.code == kExitOk || r.code == kExitVerificationFailed) << r.err;
  const Json j = r.json();
  EXPECT_TRUE(j["results"]["efficiency"].contains("check_i"));
  EXPECT_TRUE(j["results"]["efficiency"].contains("check_ii"));
  EXPECT_EQ(j["results"]["simulation"]["params"]["v_capped"], true);
  EXPECT_EQ(j["seed"], 5);
}

TEST(Cli, simulate_without_checks) {
  const CliRun r = run({"simulate", fixture("chsh.json"), "--v", "0", "--trials", "500"});
  const Json j = r.json();
  EXPECT_EQ(j["results"]["simulation"]["p_not_abort"]["est"], 1.0);
  EXPECT_EQ(j["results"]["efficiency"]["check_i"]["passed"], true);
}

TEST(Cli, simulate_invalid_eps) {
  const CliRun r = run({"simulate", fixture("chsh.json"), "--eps", "1.5"});
  EXPECT_EQ(r.code, kExitParam);
  EXPECT_NE(r.err.find("E_PARAM"), std::string::npos);
}

TEST(Cli, simulate_strategy_file) {
  const CliRun r = run({"simulate", fixture("chsh.json"), "--strategy",
                     fixture("chsh-optimal-strategy.json"), "--v", "5", "--trials", "1000"});
  ASSERT_NE(r.code, kExitParam) << r.err;
  const Json j = r.json();
  EXPECT_EQ(j["results"]["strategy_source"], "file");
  EXPECT_NEAR(j["results"]["strategy_win"].get<double>(),
              std::pow(std::cos(std::numbers::pi / 8), 2), 1e-12);
}

TEST(Cli, simulate_synthetic_mode) {
  const CliRun r = run({"simulate", fixture("chsh.json"), "--v", "5", "--trials", "1000",
                     "--synthetic-corr", "0.5"});
  EXPECT_EQ(r.json()["results"]["simulation"]["mode"], "synthetic");
}

TEST(Cli, deterministic_canonical_reports) {
  const std::vector<std::vector<std::string>> commands = {
      {"simulate", fixture("chsh.json"), "--trials", "3000", "--seed", "9", "--timing"},
      {"value", "entangled", fixture("chsh.json"), "--restarts", "5", "--seed", "9", "--timing"},
      {"verify", "toolbox", "--samples", "50", "--seed", "9", "--timing"},
  };
  for (const auto& args : commands) {
    const CliRun a = run(args);
    const CliRun b = run(args);
    ASSERT_TRUE(a.json().contains("timing"));
    EXPECT_EQ(canonical_report(a.json()).dump(), canonical_report(b.json()).dump()) << args[0];
  }
  const CliRun plain_a = run({"simulate", fixture("chsh.json"), "--trials", "3000", "--seed", "9"});
  const CliRun plain_b = run({"simulate", fixture("chsh.json"), "--trials", "3000", "--seed", "9"});
  EXPECT_EQ(plain_a.out, plain_b.out);
}

TEST(Cli, pretty_is_the_same_document) {
  const CliRun compact = run({"value", "classical", fixture("chsh.json")});
  const CliRun pretty = run({"value", "classical", fixture("chsh.json"), "--pretty"});
  EXPECT_NE(compact.out, pretty.out);
  EXPECT_EQ(compact.json(), pretty.json());
}

TEST(Cli, verify_toolbox) {
  const CliRun r = run({"verify", "toolbox", "--samples", "200", "--seed", "1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.json()["results"]["passed"], true);
}

TEST(Cli, verify_sic_chain) {
  const CliRun r = run({"verify", "sic-chain", "--families", "10"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json cases = r.json()["results"]["suites"]["sic_chain"]["cases"];
  for (const auto& check : cases[0]["checks"]) {
    EXPECT_EQ(check["passed"], true) << check["name"];
  }
}

TEST(Cli, verify_all_aggregates) {
  const CliRun r = run({"verify", "all", "--samples", "50", "--families", "5"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json suites = r.json()["results"]["suites"];
  EXPECT_TRUE(suites.contains("toolbox"));
  EXPECT_TRUE(suites.contains("sic_chain"));
}

}  // namespace
}  // namespace nlgames::cli
