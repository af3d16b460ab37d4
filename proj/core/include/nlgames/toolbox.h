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

#ifndef NLGAMES_TOOLBOX_H_
#define NLGAMES_TOOLBOX_H_

#include <cstdint>
#include <string>
#include <vector>

#include "nlgames/qmath.h"

namespace nlgames {

// Three states of a common shape plus the mixing weights used for the
// classical-quantum constructions
//   rho  = p |0><0| (x) a + (1-p) |1><1| (x) b
//   rho' = q |0><0| (x) c + (1-q) |1><1| (x) a.
struct StateTriple {
  DensityOperator a;
  DensityOperator b;
  DensityOperator c;
  double p = 0.5;
  double q = 0.5;
};

// Residual convention: lhs - rhs of an inequality written as lhs <= rhs, so a
// positive residual is a violation.
struct InequalityResult {
  std::string name;
  std::size_t checked = 0;
  double max_residual = -1e300;
  std::size_t violations = 0;  // residual > tolerance
  // Reported but not counted in passed(); used for statements that are not
  // valid as written.
  bool informational = false;

  void record(double residual, double tolerance);
  double max_violation() const { return checked == 0 ? 0.0 : std::max(0.0, max_residual); }
};

struct ToolboxReport {
  double tolerance = 1e-8;
  std::vector<InequalityResult> results;

  bool passed() const;
  const InequalityResult& find(const std::string& name) const;
};

// Checks, per triple:
//   fuchs_vdg_lower / fuchs_vdg_upper   1-F <= D <= sqrt(1-F^2) on (a,b)
//   fidelity_squared_triangle                 F^2(a,b) + F^2(b,c) <= 1 + F(a,c)
//   fidelity_deficit_triangle                (1-F(a,c))/2 <= (1-F(a,b)) + (1-F(b,c))
//   pure_triangle                                pure triples, by direct inner products
//   info_vs_product_fidelity                            I(R0:rest) >= (2/ln 2)(1 - F(rho, rho_0 (x) rho_rest))
//   cq_fidelity_decomposition                       cq decomposition of F, rho vs rho'
//   subadditivity_conditional           H(R0 R1|rest) <= H(R0|rest) + H(R1|rest), >= 3 registers
//   hmin_le_h                           H_min(X|Y) <= H(X|Y) on the binary cq state rho
//   entropy_gap_pinsker                      D(diag a, Unif) <= sqrt(eps ln2 / 2), eps = log d - H
//   entropy_gap_linear                       D(diag a, Unif) <= eps   (informational)
ToolboxReport check_fidelity_toolbox(const std::vector<StateTriple>& triples,
                                     double tolerance = 1e-8);

// Random triples on shapes with 1-3 registers of local dimension 2-4 (total
// at most 32); roughly a quarter of the triples are pure.
std::vector<StateTriple> random_triples(std::size_t count, std::uint64_t seed);

}  // namespace nlgames

#endif  // NLGAMES_TOOLBOX_H_
