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

#ifndef NLGAMES_VALUES_H_
#define NLGAMES_VALUES_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "nlgames/advice_family.h"
#include "nlgames/games.h"
#include "nlgames/linalg.h"

namespace nlgames {

// One operator per outcome.
using Povm = std::vector<ComplexMatrix>;
// One POVM per input.
using Measurement = std::vector<Povm>;

struct ClassicalStrategy {
  std::vector<std::size_t> alice;  // x -> a
  std::vector<std::size_t> bob;    // y -> b
};

struct ClassicalResult {
  double value = 0.0;
  ClassicalStrategy strategy;
  // False for the sampled search, whose value is only a lower bound.
  bool exact = true;
};

// Enumeration budget on |O|^(2k).
inline constexpr std::uint64_t kClassicalBudget = std::uint64_t{1} << 26;

double classical_strategy_value(const Game& g, const ClassicalStrategy& s);
// Exact maximum over deterministic strategies; among maximizers the
// lexicographically smallest (alice, bob) tables. Throws kBudget past the
// enumeration budget.
ClassicalResult classical_value(const Game& g);
// Best response to `samples` random Alice tables.
ClassicalResult classical_value_sampled(const Game& g, std::size_t samples, std::uint64_t seed);

struct QuantumStrategy {
  std::size_t dim_a = 1;
  std::size_t dim_b = 1;
  ComplexVector state;  // on A (x) B, A most significant
  Measurement alice;
  Measurement bob;
};

// Throws kParam unless there is one POVM per input with one element per
// outcome, each d x d, PSD within 1e-9 and summing to I within `tol`.
void validate_measurement(const Measurement& meas, std::size_t inputs, std::size_t outputs,
                          std::size_t dim, double tol = 1e-8);
void validate_strategy(const Game& g, const QuantumStrategy& s);

// sum_xy p_xy sum_ab V(a,b|x,y) <phi|A^x_a (x) B^y_b|phi>
double evaluate_strategy(const Game& g, const QuantumStrategy& s);
// Pr[a, b | x, y] at index a * |O| + b.
std::vector<double> outcome_distribution(const QuantumStrategy& s, std::size_t x, std::size_t y);

// A^x_a = sum of |i><i| over i = a mod |O|, the same for every x.
Measurement computational_basis_measurement(std::size_t inputs, std::size_t outputs,
                                            std::size_t dim);

struct SeesawConfig {
  std::size_t dim = 2;
  std::size_t restarts = 10;
  std::size_t max_iters = 500;
  double tol = 1e-9;
  std::uint64_t seed = 0;
  // Restart 0 starts from the optimal classical strategy.
  bool include_classical_seed = true;
};

struct SeesawResult {
  double value = 0.0;
  QuantumStrategy strategy;
  std::size_t best_restart = 0;
  std::vector<double> trace;                // best restart
  std::vector<std::vector<double>> traces;  // every restart
};

// Alternates exact state updates (top eigenvector of the game operator) with
// measurement updates for each player. Projective measurements throughout.
// The value is the final strategy evaluated exactly: a lower bound on the
// entangled value at local dimension cfg.dim.
SeesawResult entangled_value_seesaw(const Game& g, const SeesawConfig& cfg);

// Win probability with per-input advice states. Throws kMismatch when the
// family's distribution differs from the game's by more than 1e-9.
double advice_value(const Game& g, const AdviceFamily& f, const Measurement& alice,
                    const Measurement& bob);

struct AdviceOptimum {
  double value = 0.0;
  Measurement alice;
  Measurement bob;
  std::size_t best_restart = 0;
  std::vector<double> trace;
  std::vector<std::vector<double>> traces;
};

// See-saw over measurements only; cfg.dim is ignored (the family fixes the
// local dimensions).
AdviceOptimum advice_value_optimized(const Game& g, const AdviceFamily& f, const SeesawConfig& cfg);

}  // namespace nlgames

#endif  // NLGAMES_VALUES_H_
