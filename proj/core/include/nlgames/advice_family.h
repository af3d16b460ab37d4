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

#ifndef NLGAMES_ADVICE_FAMILY_H_
#define NLGAMES_ADVICE_FAMILY_H_

#include <cstddef>
#include <vector>

#include "nlgames/linalg.h"

namespace nlgames {

// Pure advice states |phi_xy> on A (x) B with input distribution p_xy.
class AdviceFamily {
 public:
  // p and states are k*k row-major. Each state has dim_a * dim_b amplitudes
  // with A as the more significant factor.
  AdviceFamily(std::size_t k, std::size_t dim_a, std::size_t dim_b, std::vector<double> p,
               std::vector<ComplexVector> states);

  std::size_t k() const { return k_; }
  std::size_t dim_a() const { return dim_a_; }
  std::size_t dim_b() const { return dim_b_; }
  double p(std::size_t x, std::size_t y) const { return p_[x * k_ + y]; }
  const std::vector<double>& distribution() const { return p_; }
  const ComplexVector& state(std::size_t x, std::size_t y) const { return states_[x * k_ + y]; }
  const std::vector<ComplexVector>& states() const { return states_; }
  double p_x(std::size_t x) const;
  double p_y(std::size_t y) const;
  bool is_uniform(double tol = 1e-12) const;

 private:
  std::size_t k_;
  std::size_t dim_a_;
  std::size_t dim_b_;
  std::vector<double> p_;
  std::vector<ComplexVector> states_;
};

// Three copies of |Phi+> and |Psi+> on (x, y) = (1, 1), uniform p.
AdviceFamily chsh_advice_family();
// The same state for every input pair, uniform p.
AdviceFamily constant_family(std::size_t k, std::size_t dim_a, std::size_t dim_b,
                             const ComplexVector& state);

}  // namespace nlgames

#endif  // NLGAMES_ADVICE_FAMILY_H_
