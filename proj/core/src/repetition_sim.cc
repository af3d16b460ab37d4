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

#include "nlgames/repetition_sim.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nlgames/error.h"
#include "nlgames/parallel.h"
#include "nlgames/random.h"

namespace nlgames {
namespace {

double unit_draw(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::size_t index_draw(Rng& rng, std::size_t n) {
  const std::uint64_t range = n;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t r = rng();
  while (r >= limit) r = rng();
  return static_cast<std::size_t>(r % range);
}

// Inverse-CDF draw; weights need not be normalized.
std::size_t categorical(Rng& rng, const std::vector<double>& cdf) {
  const double u = unit_draw(rng) * cdf.back();
  const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
  return std::min<std::size_t>(it - cdf.begin(), cdf.size() - 1);
}

std::vector<double> cumulative(const std::vector<double>& w) {
  std::vector<double> out(w.size());
  double s = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = s += w[i];
  return out;
}

struct Counters {
  std::uint64_t not_abort = 0;
  std::uint64_t low = 0;
  std::uint64_t wins = 0;
  std::vector<std::uint64_t> histogram;
};

// Runs trials with a per-trial win-vector sampler and aggregates counters.
template <typename Sampler>
SimResult run_trials(const ProtocolParams& params, Sampler&& sample_wins) {
  if (params.n == 0) throw Error(ErrorCode::kParam, "protocol needs n >= 1");
  const std::size_t n = params.n;
  const std::size_t workers = std::max<std::size_t>(1, std::min(max_threads(), params.trials));
  std::vector<Counters> per_worker(workers);
  for (auto& c : per_worker) c.histogram.assign(n + 1, 0);
  const double low_cut = (1.0 - params.eps / 32.0) * static_cast<double>(n);

  parallel_chunks(
      params.trials,
      [&](std::size_t worker, std::size_t begin, std::size_t end) {
        Counters& c = per_worker[worker];
        std::vector<char> wins(n);
        for (std::size_t trial = begin; trial < end; ++trial) {
          Rng rng = make_stream(params.seed, trial);
          sample_wins(rng, wins);
          std::size_t count = 0;
          for (char w : wins) count += w;
          bool abort = false;
          for (std::size_t check = 0; check < params.v && !abort; ++check) {
            abort = !wins[index_draw(rng, n)];
          }
          c.wins += count;
          ++c.histogram[count];
          if (!abort) {
            ++c.not_abort;
            if (static_cast<double>(count) <= low_cut) ++c.low;
          }
        }
      },
      workers);

  Counters total;
  total.histogram.assign(n + 1, 0);
  for (const auto& c : per_worker) {
    total.not_abort += c.not_abort;
    total.low += c.low;
    total.wins += c.wins;
    for (std::size_t i = 0; i <= n; ++i) total.histogram[i] += c.histogram[i];
  }
  SimResult r;
  r.params = params;
  r.p_not_abort = wilson_interval(total.not_abort, params.trials);
  r.cond_low_win_frac = wilson_interval(total.low, total.not_abort);
  r.histogram = std::move(total.histogram);
  r.total_wins = total.wins;
  return r;
}

}  // namespace

std::size_t formula_v(double eps, double t) {
  if (!(eps > 0.0 && eps < 1.0)) throw Error(ErrorCode::kParam, "eps must lie in (0, 1)");
  if (!(t >= 0.0) || !std::isfinite(t)) throw Error(ErrorCode::kParam, "t must be >= 0");
  const double v = std::ceil((32.0 / eps) * ((t + 1.0) + std::abs(std::log2(eps)) + 5.0));
  return static_cast<std::size_t>(v);
}

ProtocolParams derive_params(std::size_t n, double eps, double t, std::size_t inputs,
                             std::size_t outputs, bool cap_at_n) {
  if (n == 0) throw Error(ErrorCode::kParam, "n must be positive");
  ProtocolParams p;
  p.n = n;
  p.eps = eps;
  p.t = t;
  p.v_formula = formula_v(eps, t);
  p.v = p.v_formula;
  if (cap_at_n && p.v > n) {
    p.v = n;
    p.v_capped = true;
  }
  p.m = static_cast<double>(p.v) * std::log2(static_cast<double>(inputs * outputs));
  return p;
}

double Estimate::sigma() const { return half_width() / kWilsonZ; }

Estimate wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
  Estimate e;
  e.successes = successes;
  e.trials = trials;
  if (trials == 0) return e;
  const double nt = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / nt;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nt;
  const double center = (p + z2 / (2.0 * nt)) / denom;
  const double half = z / denom * std::sqrt(p * (1.0 - p) / nt + z2 / (4.0 * nt * nt));
  e.est = p;
  e.lo = std::max(0.0, center - half);
  e.hi = std::min(1.0, center + half);
  return e;
}

double SimResult::measured_win_rate() const {
  const double slots = static_cast<double>(params.trials) * static_cast<double>(params.n);
  return slots == 0.0 ? 0.0 : static_cast<double>(total_wins) / slots;
}

SimResult simulate_protocol(const Game& g, const QuantumStrategy& strategy,
                            const ProtocolParams& params) {
  validate_strategy(g, strategy);
  const double w = std::clamp(evaluate_strategy(g, strategy), 0.0, 1.0);
  if (params.synthetic_corr) {
    SimResult r = simulate_synthetic(w, *params.synthetic_corr, params);
    return r;
  }
  const std::size_t k = g.inputs();
  const std::size_t m = g.outputs();
  const std::vector<double> input_cdf = cumulative(g.distribution());
  std::vector<std::vector<double>> outcome_cdf(k * k);
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = 0; y < k; ++y) {
      outcome_cdf[x * k + y] = cumulative(outcome_distribution(strategy, x, y));
    }
  }
  SimResult r = run_trials(params, [&](Rng& rng, std::vector<char>& wins) {
    for (auto& win : wins) {
      const std::size_t xy = categorical(rng, input_cdf);
      const std::size_t ab = categorical(rng, outcome_cdf[xy]);
      win = g.wins(ab / m, ab % m, xy / k, xy % k);
    }
  });
  r.mode = "product";
  r.per_instance_win = w;
  return r;
}

SimResult simulate_synthetic(double w, double rho, const ProtocolParams& params) {
  if (!(w >= 0.0 && w <= 1.0)) throw Error(ErrorCode::kParam, "win probability must lie in [0,1]");
  if (!(rho >= 0.0 && rho <= 1.0)) {
    throw Error(ErrorCode::kParam, "synthetic correlation must lie in [0,1]");
  }
  // Each bit copies a shared latent Bernoulli(w) with probability sqrt(rho),
  // which gives pairwise correlation rho.
  const double copy = std::sqrt(rho);
  SimResult r = run_trials(params, [&](Rng& rng, std::vector<char>& wins) {
    const bool latent = unit_draw(rng) < w;
    for (auto& win : wins) {
      win = unit_draw(rng) < copy ? latent : unit_draw(rng) < w;
    }
  });
  r.mode = "synthetic";
  r.per_instance_win = w;
  return r;
}

bool EfficiencyReport::passed() const {
  return (!check_i_applicable || check_i_passed) && (check_ii_skipped || check_ii_passed);
}

EfficiencyReport verify_efficiency_bounds(const SimResult& res, const ProtocolParams& params) {
  EfficiencyReport rep;
  const double n = static_cast<double>(params.n);
  const double w = res.measured_win_rate();
  if (w <= 0.0) {
    rep.check_i_applicable = false;
    rep.t_strategy = std::numeric_limits<double>::infinity();
    rep.warnings.push_back("no instance was won; check (i) not applicable");
  } else {
    rep.t_strategy = -n * std::log2(w) - 1.0;
    rep.target = std::exp2(-(rep.t_strategy + 1.0));
    const double bound = rep.target - 3.0 * res.p_not_abort.sigma();
    rep.check_i_margin = res.p_not_abort.est - bound;
    rep.check_i_passed = res.p_not_abort.est >= bound;
  }
  const Estimate& low = res.cond_low_win_frac;
  rep.check_ii_bound = params.eps / 32.0 + 3.0 * low.sigma();
  if (low.trials == 0 || low.half_width() > 0.1) {
    rep.check_ii_skipped = true;
    rep.warnings.push_back("too few non-aborting trials for a conditional estimate");
  } else {
    rep.check_ii_passed = low.est <= rep.check_ii_bound;
  }
  if (params.v_capped) {
    rep.warnings.push_back("v capped at n: formula gives " + std::to_string(params.v_formula));
  }
  return rep;
}

}  // namespace nlgames
