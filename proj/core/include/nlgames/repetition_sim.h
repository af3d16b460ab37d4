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

#ifndef NLGAMES_REPETITION_SIM_H_
#define NLGAMES_REPETITION_SIM_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nlgames/games.h"
#include "nlgames/values.h"

namespace nlgames {

struct ProtocolParams {
  std::size_t n = 1;
  double eps = 0.5;
  double t = 0.0;
  std::size_t v = 0;              // checked indices
  std::size_t v_formula = 0;      // before any cap
  bool v_capped = false;
  double m = 0.0;                 // message bits
  std::size_t trials = 10000;
  std::uint64_t seed = 0;
  // Latent-mixture correlation between instance wins; absent for the
  // product model.
  std::optional<double> synthetic_corr;
};

// v = ceil((32/eps)((t+1) + |log2 eps| + 5)), m = v log2(|I||O|). With
// cap_at_n the checked-index count is limited to n and v_capped is set.
// Throws kParam unless 0 < eps < 1 and t >= 0.
ProtocolParams derive_params(std::size_t n, double eps, double t, std::size_t inputs,
                             std::size_t outputs, bool cap_at_n = true);
std::size_t formula_v(double eps, double t);

struct Estimate {
  double est = 0.0;
  double lo = 0.0;
  double hi = 1.0;
  std::uint64_t successes = 0;
  std::uint64_t trials = 0;
  // Wilson half-width over z.
  double sigma() const;
  double half_width() const { return 0.5 * (hi - lo); }
};

inline constexpr double kWilsonZ = 1.96;
Estimate wilson_interval(std::uint64_t successes, std::uint64_t trials, double z = kWilsonZ);

struct SimResult {
  Estimate p_not_abort;
  // Pr[win count <= (1 - eps/32) n | not abort]
  Estimate cond_low_win_frac;
  std::vector<std::uint64_t> histogram;  // win counts over all trials, size n+1
  std::uint64_t total_wins = 0;
  double per_instance_win = 0.0;         // exact for the strategy or model
  std::string mode;                      // product or synthetic
  ProtocolParams params;

  double measured_win_rate() const;
};

// Each trial draws n input pairs from the game's distribution and outcomes
// from the strategy's Born probabilities, independently per instance, then
// checks v indices drawn uniformly with replacement. With
// params.synthetic_corr set, the win bits instead come from an exchangeable
// latent mixture with the strategy's win probability as the marginal.
SimResult simulate_protocol(const Game& g, const QuantumStrategy& strategy,
                            const ProtocolParams& params);
// Synthetic model alone: marginal win probability w, pairwise correlation rho.
SimResult simulate_synthetic(double w, double rho, const ProtocolParams& params);

struct EfficiencyReport {
  double t_strategy = 0.0;   // -n log2(w) - 1 from the measured win rate
  double target = 0.0;       // 2^-(t_strategy + 1)
  bool check_i_applicable = true;
  bool check_i_passed = true;
  double check_i_margin = 0.0;  // p_not_abort - (target - 3 sigma)
  bool check_ii_skipped = false;
  bool check_ii_passed = true;
  double check_ii_bound = 0.0;  // eps/32 + 3 sigma
  std::vector<std::string> warnings;

  bool passed() const;
};

EfficiencyReport verify_efficiency_bounds(const SimResult& res, const ProtocolParams& params);

}  // namespace nlgames

#endif  // NLGAMES_REPETITION_SIM_H_
