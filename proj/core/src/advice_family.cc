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

#include "nlgames/advice_family.h"

#include <algorithm>
#include <cmath>

#include "nlgames/error.h"
#include "nlgames/qmath.h"

namespace nlgames {

AdviceFamily::AdviceFamily(std::size_t k, std::size_t dim_a, std::size_t dim_b,
                           std::vector<double> p, std::vector<ComplexVector> states)
    : k_(k), dim_a_(dim_a), dim_b_(dim_b), p_(std::move(p)), states_(std::move(states)) {
  if (k_ == 0 || dim_a_ == 0 || dim_b_ == 0) {
    throw Error(ErrorCode::kShape, "advice family dimensions must be positive");
  }
  if (p_.size() != k_ * k_ || states_.size() != k_ * k_) {
    throw Error(ErrorCode::kShape, "advice family needs k*k probabilities and states");
  }
  double sum = 0.0;
  for (double v : p_) {
    if (!std::isfinite(v) || v < 0.0) {
      throw Error(ErrorCode::kNormalization, "advice distribution entries must be >= 0");
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw Error(ErrorCode::kNormalization, "advice distribution not normalized");
  }
  for (const auto& s : states_) {
    if (s.size() != dim_a_ * dim_b_) {
      throw Error(ErrorCode::kShape, "advice state has the wrong number of amplitudes");
    }
    if (std::abs(norm(s) * norm(s) - 1.0) > kStateTolerance) {
      throw Error(ErrorCode::kNormalization, "advice state not normalized");
    }
  }
}

double AdviceFamily::p_x(std::size_t x) const {
  double s = 0.0;
  for (std::size_t y = 0; y < k_; ++y) s += p(x, y);
  return s;
}

double AdviceFamily::p_y(std::size_t y) const {
  double s = 0.0;
  for (std::size_t x = 0; x < k_; ++x) s += p(x, y);
  return s;
}

bool AdviceFamily::is_uniform(double tol) const {
  const double u = 1.0 / static_cast<double>(k_ * k_);
  return std::all_of(p_.begin(), p_.end(), [&](double v) { return std::abs(v - u) <= tol; });
}

AdviceFamily chsh_advice_family() {
  const double h = 1.0 / std::sqrt(2.0);
  const ComplexVector phi_plus{h, 0.0, 0.0, h};
  const ComplexVector psi_plus{0.0, h, h, 0.0};
  return AdviceFamily(2, 2, 2, std::vector<double>(4, 0.25),
                      {phi_plus, phi_plus, phi_plus, psi_plus});
}

AdviceFamily constant_family(std::size_t k, std::size_t dim_a, std::size_t dim_b,
                             const ComplexVector& state) {
  return AdviceFamily(k, dim_a, dim_b,
                      std::vector<double>(k * k, 1.0 / static_cast<double>(k * k)),
                      std::vector<ComplexVector>(k * k, state));
}

}  // namespace nlgames
