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

#include <openssl/evp.h>

#include <chrono>
#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "nlgames/advice_family.h"
#include "nlgames/error.h"
#include "nlgames/games.h"
#include "nlgames/random.h"
#include "nlgames/repetition_sim.h"
#include "nlgames/serialization.h"
#include "nlgames/sic.h"
#include "nlgames/toolbox.h"
#include "nlgames/values.h"

namespace nlgames::cli {
namespace {

constexpr const char* kVersion = NLGAMES_VERSION;

struct Input {
  std::string path;
  std::string content;
};

Input read_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIo, "cannot read " + path);
  return {path, ss.str()};
}

// sha256 of one input; for several, sha256 over the concatenated hex digests.
std::string digest_of(const std::vector<std::string>& contents) {
  if (contents.size() == 1) return sha256_hex(contents.front());
  std::string joined;
  for (const auto& c : contents) joined += sha256_hex(c);
  return sha256_hex(joined);
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIo:
    case ErrorCode::kParse:
    case ErrorCode::kShape:
    case ErrorCode::kNormalization:
      return kExitIo;
    default:
      return kExitParam;
  }
}

struct Report {
  std::string command;
  std::vector<std::string> inputs;
  Json results;
  std::optional<std::uint64_t> seed;
  bool passed = true;
};

struct GlobalFlags {
  bool pretty = false;
  bool timing = false;
};

SeesawConfig seesaw_config(std::size_t dim, std::size_t restarts, std::size_t iters, double tol,
                           std::uint64_t seed, bool classical_seed) {
  SeesawConfig cfg;
  cfg.dim = dim;
  cfg.restarts = restarts;
  cfg.max_iters = iters;
  cfg.tol = tol;
  cfg.seed = seed;
  cfg.include_classical_seed = classical_seed;
  return cfg;
}

// value classical|entangled

struct ValueArgs {
  std::string game_path;
  std::optional<std::size_t> samples;
  std::size_t dim = 2;
  std::size_t restarts = 10;
  std::size_t iters = 500;
  double tol = 1e-9;
  std::uint64_t seed = 0;
  bool classical_seed = true;
};

Report value_classical(const ValueArgs& a) {
  Report r;
  r.command = "value classical";
  const Input in = read_input(a.game_path);
  r.inputs = {in.content};
  const Game g = parse_game(in.content);
  if (a.samples) {
    r.results = to_json(classical_value_sampled(g, *a.samples, a.seed));
    r.seed = a.seed;
  } else {
    r.results = to_json(classical_value(g));
  }
  r.results["game"] = g.name();
  return r;
}

Report value_entangled(const ValueArgs& a) {
  Report r;
  r.command = "value entangled";
  const Input in = read_input(a.game_path);
  r.inputs = {in.content};
  const Game g = parse_game(in.content);
  const SeesawResult res = entangled_value_seesaw(
      g, seesaw_config(a.dim, a.restarts, a.iters, a.tol, a.seed, a.classical_seed));
  r.results = to_json(res);
  r.results["game"] = g.name();
  r.results["config"] = {{"dim", a.dim},
                         {"restarts", a.restarts},
                         {"iters", a.iters},
                         {"tol", a.tol},
                         {"classical_seed", a.classical_seed}};
  r.seed = a.seed;
  return r;
}

// sic

struct SicArgs {
  std::string family_path;
  std::size_t product = 1;
  std::optional<std::string> game_path;
  std::optional<std::string> meas;
  bool verify_chain = false;
  std::optional<double> omega_star;
  bool identity_unitaries = false;
  std::size_t dim = 2;
  std::size_t restarts = 10;
  std::uint64_t seed = 0;
};

std::pair<Measurement, Measurement> load_measurements(const std::string& spec,
                                                      const AdviceFamily& f, const Game& g,
                                                      std::vector<std::string>& inputs) {
  if (spec == "basis") {
    return {computational_basis_measurement(g.inputs(), g.outputs(), f.dim_a()),
            computational_basis_measurement(g.inputs(), g.outputs(), f.dim_b())};
  }
  const Input in = read_input(spec);
  inputs.push_back(in.content);
  const Json j = parse_json(in.content, "measurement");
  if (!j.is_object() || !j.contains("alice") || !j.contains("bob")) {
    throw Error(ErrorCode::kParse, "measurement file needs \"alice\" and \"bob\"");
  }
  return {measurement_from_json(j.at("alice"), f.dim_a()),
          measurement_from_json(j.at("bob"), f.dim_b())};
}

Report sic_command(const SicArgs& a) {
  Report r;
  r.command = "sic";
  const Input in = read_input(a.family_path);
  r.inputs = {in.content};
  AdviceFamily f = parse_family(in.content);
  if (a.product > 1) f = product_family(f, a.product);
  r.results["product"] = a.product;
  r.results["sic"] = to_json(sic_of_family(f));
  if (a.verify_chain && !a.game_path) {
    throw Error(ErrorCode::kParam, "--verify-chain needs --game");
  }
  if (!a.game_path) return r;
  if (a.product > 1) throw Error(ErrorCode::kParam, "--game cannot be combined with --product");
  const Input game_in = read_input(*a.game_path);
  r.inputs.push_back(game_in.content);
  const Game g = parse_game(game_in.content);
  if (g.inputs() != f.k()) throw Error(ErrorCode::kMismatch, "game and family input counts differ");
  const auto [alice, bob] = load_measurements(a.meas.value_or("basis"), f, g, r.inputs);
  ChainOptions opts;
  opts.omega_star = a.omega_star;
  opts.search_unitaries = !a.identity_unitaries;
  opts.seesaw.dim = a.dim;
  opts.seesaw.restarts = a.restarts;
  opts.seesaw.seed = a.seed;
  if (!a.omega_star) r.seed = a.seed;
  if (g.is_uniform()) {
    const ChainReport chain = verify_sic_chain(g, f, alice, bob, opts);
    r.results["chain"] = to_json(chain);
    r.passed = chain.passed();
  } else {
    const Game uniform(g.inputs(), g.outputs(),
                       std::vector<double>(g.inputs() * g.inputs(),
                                           1.0 / static_cast<double>(g.inputs() * g.inputs())),
                       g.predicate(), g.name() + "-uniform");
    const SingleGameReport single = verify_single_game(uniform, g, f, alice, bob, opts);
    r.results["single_game"] = to_json(single);
    r.passed = single.passed();
  }
  return r;
}

// simulate

struct SimulateArgs {
  std::string game_path;
  std::size_t n = 50;
  std::optional<double> eps;
  std::optional<double> t;
  std::optional<std::size_t> v;
  bool no_cap = false;
  std::size_t trials = 10000;
  std::uint64_t seed = 0;
  std::optional<double> synthetic_corr;
  std::optional<std::string> strategy_path;
  std::size_t dim = 2;
  std::size_t restarts = 10;
};

Report simulate_command(const SimulateArgs& a) {
  Report r;
  r.command = "simulate";
  const Input in = read_input(a.game_path);
  r.inputs = {in.content};
  const Game g = parse_game(in.content);
  QuantumStrategy strategy;
  std::string source;
  if (a.strategy_path) {
    const Input s = read_input(*a.strategy_path);
    r.inputs.push_back(s.content);
    strategy = strategy_from_json(parse_json(s.content, "strategy"));
    validate_strategy(g, strategy);
    source = "file";
  } else {
    SeesawConfig cfg;
    cfg.dim = a.dim;
    cfg.restarts = a.restarts;
    cfg.seed = a.seed;
    strategy = entangled_value_seesaw(g, cfg).strategy;
    source = "seesaw";
  }
  const double w = evaluate_strategy(g, strategy);
  const double eps = a.eps.value_or(1.0 - w);
  if (!(eps > 0.0 && eps < 1.0)) {
    throw Error(ErrorCode::kParam, "eps must lie in (0, 1); pass --eps for games won with certainty");
  }
  const double n = static_cast<double>(a.n);
  const double t = a.t.value_or(w > 0.0 ? std::max(0.0, -n * std::log2(w) - 1.0) : 0.0);
  ProtocolParams params = derive_params(a.n, eps, t, g.inputs(), g.outputs(), !a.no_cap);
  if (a.v) {
    params.v = *a.v;
    params.v_capped = false;
    params.m = static_cast<double>(params.v) *
               std::log2(static_cast<double>(g.inputs() * g.outputs()));
  }
  if (a.trials == 0) throw Error(ErrorCode::kParam, "--trials must be positive");
  params.trials = a.trials;
  params.seed = a.seed;
  params.synthetic_corr = a.synthetic_corr;
  const SimResult sim = simulate_protocol(g, strategy, params);
  const EfficiencyReport eff = verify_efficiency_bounds(sim, params);
  r.results = {{"game", g.name()},
               {"strategy_source", source},
               {"strategy_win", w},
               {"simulation", to_json(sim)},
               {"efficiency", to_json(eff)}};
  r.seed = a.seed;
  r.passed = eff.passed();
  return r;
}

// verify

struct VerifyArgs {
  std::string suite;
  std::size_t samples = 1000;
  std::size_t families = 50;
  std::uint64_t seed = 1;
  double tolerance = 1e-8;
};

Json chain_case(const std::string& name, const Game& g, const AdviceFamily& f,
                const Measurement& alice, const Measurement& bob, const ChainOptions& opts,
                bool& passed) {
  const ChainReport rep = verify_sic_chain(g, f, alice, bob, opts);
  passed = passed && rep.passed();
  Json j = to_json(rep);
  j["case"] = name;
  return j;
}

Json sic_chain_suite(const VerifyArgs& a, bool& passed, std::vector<std::string>& fixtures) {
  const Game chsh = make_chsh();
  const AdviceFamily chsh_family = chsh_advice_family();
  fixtures.push_back(emit_game(chsh));
  fixtures.push_back(family_to_json(chsh_family).dump());
  const Measurement basis = computational_basis_measurement(2, 2, 2);
  ChainOptions opts;
  opts.tolerance = a.tolerance;
  opts.omega_star = std::pow(std::cos(std::numbers::pi / 8.0), 2);

  Json cases = Json::array();
  cases.push_back(chain_case("chsh-advice-family", chsh, chsh_family, basis, basis, opts, passed));

  const double h = 1.0 / std::sqrt(2.0);
  const AdviceFamily identical = constant_family(2, 2, 2, {h, 0.0, 0.0, h});
  ChainOptions win_opts = opts;
  win_opts.omega_star = 1.0;
  cases.push_back(chain_case("identical-family-always-win", make_always_win(2, 2), identical,
                             basis, basis, win_opts, passed));

  // Random uniform qubit families against CHSH: checks (a) and (b) always
  // apply, (c) and (d) only when the advice wins with certainty.
  Rng rng = make_stream(a.seed, 0);
  std::size_t fuzz_failures = 0;
  double worst_a = -INFINITY, worst_b = -INFINITY;
  for (std::size_t i = 0; i < a.families; ++i) {
    std::vector<ComplexVector> states;
    for (std::size_t s = 0; s < 4; ++s) states.push_back(random_unit_vector(4, rng));
    const AdviceFamily f(2, 2, 2, std::vector<double>(4, 0.25), states);
    const ChainReport rep = verify_sic_chain(chsh, f, basis, basis, opts);
    if (!rep.passed()) ++fuzz_failures;
    worst_a = std::max(worst_a, rep.checks[0].rhs - rep.checks[0].lhs);
    worst_b = std::max(worst_b, rep.checks[1].rhs - rep.checks[1].lhs);
  }
  passed = passed && fuzz_failures == 0;

  const SingleGameReport single =
      verify_single_game(chsh, chsh, chsh_family, basis, basis, opts);
  passed = passed && single.passed();
  return {{"cases", cases},
          {"fuzz", {{"families", a.families},
                    {"failures", fuzz_failures},
                    {"worst_margin_a", a.families ? Json(worst_a) : Json(nullptr)},
                    {"worst_margin_b", a.families ? Json(worst_b) : Json(nullptr)}}},
          {"single_game", to_json(single)}};
}

Report verify_command(const VerifyArgs& a) {
  Report r;
  r.command = "verify " + a.suite;
  r.seed = a.seed;
  Json suites = Json::object();
  std::vector<std::string> fixtures;
  if (a.suite == "toolbox" || a.suite == "all") {
    const ToolboxReport rep = check_fidelity_toolbox(random_triples(a.samples, a.seed), a.tolerance);
    suites["toolbox"] = to_json(rep);
    suites["toolbox"]["samples"] = a.samples;
    r.passed = r.passed && rep.passed();
  }
  if (a.suite == "sic-chain" || a.suite == "all") {
    bool ok = true;
    suites["sic_chain"] = sic_chain_suite(a, ok, fixtures);
    suites["sic_chain"]["passed"] = ok;
    r.passed = r.passed && ok;
  }
  if (fixtures.empty()) fixtures.push_back("toolbox");
  r.inputs = fixtures;
  r.results = {{"passed", r.passed}, {"suites", suites}};
  return r;
}

Json assemble(const Report& r) {
  Json out = {{"command", r.command},
              {"inputs_digest", digest_of(r.inputs)},
              {"results", r.results},
              {"version", kVersion}};
  if (r.seed) out["seed"] = *r.seed;
  if (out["results"].is_object() && !out["results"].contains("passed")) {
    out["results"]["passed"] = r.passed;
  }
  return out;
}

}  // namespace

std::string sha256_hex(std::string_view data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorCode::kIo, "sha256 failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[md[i] >> 4]);
    out.push_back(kHex[md[i] & 0xf]);
  }
  return out;
}

Json canonical_report(const Json& report) {
  Json out = report;
  out.erase("timing");
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-player nonlocal game toolkit", "nlgames"};
  app.require_subcommand(1);
  // Global flags are accepted after the subcommand too.
  app.fallthrough();
  app.set_version_flag("--version", kVersion);
  GlobalFlags flags;
  app.add_flag("--pretty", flags.pretty, "Indent the JSON report");
  app.add_flag("--timing", flags.timing, "Add wall-clock time (not part of the canonical form)");

  ValueArgs value_args;
  auto* value = app.add_subcommand("value", "Classical or entangled game value");
  value->require_subcommand(1);
  auto* classical = value->add_subcommand("classical", "Exact classical value");
  classical->add_option("game", value_args.game_path, "Game JSON file")->required();
  classical->add_option("--samples", value_args.samples,
                        "Sample this many Alice tables instead of enumerating");
  classical->add_option("--seed", value_args.seed, "Seed for --samples");
  auto* entangled = value->add_subcommand("entangled", "See-saw lower bound on the entangled value");
  entangled->add_option("game", value_args.game_path, "Game JSON file")->required();
  entangled->add_option("--dim", value_args.dim, "Local dimension")->check(CLI::PositiveNumber);
  entangled->add_option("--restarts", value_args.restarts)->check(CLI::PositiveNumber);
  entangled->add_option("--iters", value_args.iters);
  entangled->add_option("--tol", value_args.tol)->check(CLI::PositiveNumber);
  entangled->add_option("--seed", value_args.seed);
  entangled->add_flag("--classical-seed,!--no-classical-seed", value_args.classical_seed,
                      "Start restart 0 from the optimal classical strategy");

  SicArgs sic_args;
  auto* sic = app.add_subcommand("sic", "Superposed information cost of an advice family");
  sic->add_option("family", sic_args.family_path, "Family JSON file")->required();
  sic->add_option("--product", sic_args.product, "Evaluate the n-fold product family")
      ->check(CLI::PositiveNumber);
  sic->add_option("--game", sic_args.game_path, "Game for the inequality chain");
  sic->add_option("--meas", sic_args.meas, "\"basis\" or a JSON file with alice/bob measurements");
  sic->add_flag("--verify-chain", sic_args.verify_chain, "Require the chain report");
  sic->add_option("--omega-star", sic_args.omega_star,
                  "Known entangled value; otherwise a see-saw lower bound is used");
  sic->add_flag("--identity-unitaries", sic_args.identity_unitaries,
                "Use identity local unitaries for check (b)");
  sic->add_option("--dim", sic_args.dim)->check(CLI::PositiveNumber);
  sic->add_option("--restarts", sic_args.restarts)->check(CLI::PositiveNumber);
  sic->add_option("--seed", sic_args.seed);

  SimulateArgs sim_args;
  auto* simulate = app.add_subcommand("simulate", "Monte-Carlo run of the spot-check protocol");
  simulate->add_option("game", sim_args.game_path, "Game JSON file")->required();
  simulate->add_option("--n", sim_args.n, "Instances")->check(CLI::PositiveNumber);
  simulate->add_option("--eps", sim_args.eps, "1 - omega* estimate (default from the strategy)");
  simulate->add_option("--t", sim_args.t, "Target exponent (default from the strategy)");
  simulate->add_option("--v", sim_args.v, "Checked indices (default from the formula)");
  simulate->add_flag("--no-cap", sim_args.no_cap, "Do not cap the formula v at n");
  simulate->add_option("--trials", sim_args.trials);
  simulate->add_option("--seed", sim_args.seed);
  simulate->add_option("--synthetic-corr", sim_args.synthetic_corr,
                       "Correlated win model with this pairwise correlation");
  simulate->add_option("--strategy", sim_args.strategy_path, "Strategy JSON file");
  simulate->add_option("--dim", sim_args.dim)->check(CLI::PositiveNumber);
  simulate->add_option("--restarts", sim_args.restarts)->check(CLI::PositiveNumber);

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Numeric verification suites");
  verify->add_option("suite", verify_args.suite)
      ->required()
      ->check(CLI::IsMember({"toolbox", "sic-chain", "all"}));
  verify->add_option("--samples", verify_args.samples, "Toolbox fuzz samples");
  verify->add_option("--families", verify_args.families, "Random families for the chain fuzz");
  verify->add_option("--seed", verify_args.seed);
  verify->add_option("--tolerance", verify_args.tolerance)->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParam;
  }

  const auto start = std::chrono::steady_clock::now();
  Report report;
  try {
    if (*classical) {
      report = value_classical(value_args);
    } else if (*entangled) {
      report = value_entangled(value_args);
    } else if (*sic) {
      report = sic_command(sic_args);
    } else if (*simulate) {
      report = simulate_command(sim_args);
    } else {
      report = verify_command(verify_args);
    }
  } catch (const Error& e) {
    err << error_code_name(e.code()) << ": " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const Json::exception& e) {
    err << error_code_name(ErrorCode::kParse) << ": " << e.what() << "\n";
    return kExitIo;
  }
  Json doc = assemble(report);
  if (flags.timing) {
    const auto elapsed = std::chrono::steady_clock::now() - start;
    doc["timing"] = {
        {"wall_ms", std::chrono::duration<double, std::milli>(elapsed).count()}};
  }
  out << (flags.pretty ? doc.dump(2) : doc.dump()) << "\n";
  return report.passed ? kExitOk : kExitVerificationFailed;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, out, err);
}

}  // namespace nlgames::cli
