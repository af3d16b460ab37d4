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

#ifndef NLGAMES_SIC_H_
#define NLGAMES_SIC_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nlgames/advice_family.h"
#include "nlgames/games.h"
#include "nlgames/qmath.h"
#include "nlgames/values.h"

namespace nlgames {

// Cap on k * dimA * dimB * k.
inline constexpr std::size_t kMaxSicDimension = 4096;

// Both on registers X, A, B, Y. sigma_a is block-diagonal in Y and sigma_b
// in X; input pairs with zero marginal are left out.
struct SuperposedStates {
  DensityOperator sigma_a;
  DensityOperator sigma_b;
};

SuperposedStates superposed_states(const AdviceFamily& f);

// rho^A_y = Tr_B |L^A_y><L^A_y| on X (x) A, indexed by y. Entries with a zero
// marginal are empty matrices.
std::vector<ComplexMatrix> conditional_states_a(const AdviceFamily& f);
// rho^B_x = Tr_A |L^B_x><L^B_x| on B (x) Y, indexed by x.
std::vector<ComplexMatrix> conditional_states_b(const AdviceFamily& f);

struct SicReport {
  double i_y_xa = 0.0;  // I(Y:XA) on sigma^A
  double i_x_by = 0.0;  // I(X:BY) on sigma^B
  double sic = 0.0;
  // 1 - sum_{y,y'} p_y p_y' F^2(rho^A_y, rho^A_y'), and the same over x for B.
  double eps_a = 0.0;
  double eps_b = 0.0;
  // lambda_max(sum_xy p_xy |phi_xy><phi_xy|)
  double max_overlap = 0.0;
  // I(Y:XA) and I(X:BY) on the classical-input state without superposition.
  double nonsuperposed_i_y = 0.0;
  double nonsuperposed_i_x = 0.0;
};

// Throws kDimension when k * dimA * dimB * k exceeds the cap.
SicReport sic_of_family(const AdviceFamily& f);

// f^(x)n with registers regrouped as (A1 A2 ...)(B1 B2 ...).
AdviceFamily product_family(const AdviceFamily& f, std::size_t n);

// Local unitaries: alice[x] acts on A, bob[y] on B.
struct LocalUnitaries {
  std::vector<ComplexMatrix> alice;
  std::vector<ComplexMatrix> bob;
  // Reference inputs used by the construction (Alice's x, Bob's y).
  std::size_t i = 0;
  std::size_t j = 0;
};

LocalUnitaries identity_unitaries(const AdviceFamily& f);
// Bob's unitaries align each |L^A_y> with |L^A_j> on B (Uhlmann), then
// Alice's align each rotated |M^B_x> with |M^B_i> on A. The references j and
// i maximize sum_y' p_y' F^2 against the rest.
LocalUnitaries uhlmann_unitaries(const AdviceFamily& f);

// (alice[x] (x) bob[y]) |phi_xy>
std::vector<ComplexVector> rotated_states(const AdviceFamily& f, const LocalUnitaries& u);
// lambda_max(sum_xy p_xy |Omega_xy><Omega_xy|)
double rotated_overlap(const AdviceFamily& f, const LocalUnitaries& u);

struct AlignmentOverlaps {
  double along_a = 0.0;  // sum_xy p_xy |<Omega_xy|Omega_xj>|^2
  double along_b = 0.0;  // sum_xy p_xy |<Omega_xy|Omega_iy>|^2
};
AlignmentOverlaps alignment_overlaps(const AdviceFamily& f, const LocalUnitaries& u);

struct BoundCheck {
  std::string name;
  std::string relation;  // ">=" or "<="
  double lhs = 0.0;
  double rhs = 0.0;
  bool applicable = true;
  // Reported without affecting the verdict.
  bool informational = false;
  bool passed = true;
  std::string note;
};

struct ChainOptions {
  // When absent, a see-saw lower bound on the game's entangled value is used.
  std::optional<double> omega_star;
  SeesawConfig seesaw;
  // Used for check (b) when set; otherwise Uhlmann or identity unitaries.
  std::optional<LocalUnitaries> unitaries;
  bool search_unitaries = true;
  double tolerance = 1e-8;
};

struct ChainReport {
  SicReport sic;
  double advice_value = 0.0;
  double omega_star = 0.0;
  bool omega_star_is_lower_bound = false;
  std::string unitaries_source;  // supplied, uhlmann or identity
  double rotated_overlap = 0.0;
  std::vector<BoundCheck> checks;

  bool passed() const;
};

// Runs checks (a)-(d) for a uniform game. Throws kParam on non-uniform games.
ChainReport verify_sic_chain(const Game& g, const AdviceFamily& f, const Measurement& alice,
                                  const Measurement& bob, const ChainOptions& options = {});

inline constexpr double kSingleGameC0 = 1.0 / 8092.0;

struct SingleGameReport {
  double distance = 0.0;  // 1/2 sum |p'_xy - 1/k^2|
  double c0 = kSingleGameC0;
  double eps = 0.0;       // 1 - omega*
  double omega_star = 0.0;
  bool omega_star_is_lower_bound = false;
  double advice_value = 0.0;
  bool distance_ok = false;
  bool advice_ok = false;
  bool hypotheses_met = false;
  bool degenerate = false;  // eps == 0
  double sic = 0.0;
  bool sic_positive = false;

  // True unless the hypotheses hold and the SIC is not positive.
  bool passed() const;
};

// g_prime carries the family's distribution; both games must share alphabets
// and predicate (kMismatch otherwise).
SingleGameReport verify_single_game(const Game& g_uniform, const Game& g_prime,
                                           const AdviceFamily& f, const Measurement& alice,
                                           const Measurement& bob,
                                           const ChainOptions& options = {});

}  // namespace nlgames

#endif  // NLGAMES_SIC_H_
