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

#include "nlgames/toolbox.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "nlgames/error.h"
#include "nlgames/random.h"

namespace nlgames {
namespace {

bool is_pure(const DensityOperator& rho) {
  return std::abs((rho.matrix() * rho.matrix()).trace().real() - 1.0) < 1e-9;
}

ComplexVector top_vector(const DensityOperator& rho) {
  return hermitian_eig(rho.matrix()).vectors.column(0);
}

std::vector<std::size_t> range(std::size_t begin, std::size_t end) {
  std::vector<std::size_t> r;
  for (std::size_t i = begin; i < end; ++i) r.push_back(i);
  return r;
}

}  // namespace

void InequalityResult::record(double residual, double tolerance) {
  ++checked;
  max_residual = std::max(max_residual, residual);
  if (residual > tolerance) ++violations;
}

bool ToolboxReport::passed() const {
  return std::all_of(results.begin(), results.end(), [](const InequalityResult& r) {
    return r.informational || r.violations == 0;
  });
}

const InequalityResult& ToolboxReport::find(const std::string& name) const {
  for (const auto& r : results) {
    if (r.name == name) return r;
  }
  throw Error(ErrorCode::kParam, "no toolbox result named " + name);
}

ToolboxReport check_fidelity_toolbox(const std::vector<StateTriple>& triples, double tolerance) {
  ToolboxReport report;
  report.tolerance = tolerance;
  InequalityResult fuchs_lo{"fuchs_vdg_lower"}, fuchs_hi{"fuchs_vdg_upper"};
  InequalityResult fid_ineq{"fidelity_squared_triangle"}, fid_ineq2{"fidelity_deficit_triangle"};
  InequalityResult pure_triangle{"pure_triangle"}, dc{"info_vs_product_fidelity"}, last{"cq_fidelity_decomposition"};
  InequalityResult subadd{"subadditivity_conditional"}, hmin{"hmin_le_h"};
  InequalityResult vadhan{"entropy_gap_pinsker"}, entropy_gap_linear{"entropy_gap_linear"};
  entropy_gap_linear.informational = true;

  for (const auto& t : triples) {
    if (t.a.shape() != t.b.shape() || t.a.shape() != t.c.shape()) {
      throw Error(ErrorCode::kShape, "toolbox: triple members differ in shape");
    }
    const double f_ab = fidelity(t.a, t.b);
    const double f_bc = fidelity(t.b, t.c);
    const double f_ac = fidelity(t.a, t.c);
    const double d_ab = trace_distance(t.a, t.b);

    fuchs_lo.record((1.0 - f_ab) - d_ab, tolerance);
    fuchs_hi.record(d_ab - std::sqrt(std::max(0.0, 1.0 - f_ab * f_ab)), tolerance);
    fid_ineq.record(f_ab * f_ab + f_bc * f_bc - (1.0 + f_ac), tolerance);
    fid_ineq2.record(0.5 * (1.0 - f_ac) - ((1.0 - f_ab) + (1.0 - f_bc)), tolerance);

    if (is_pure(t.a) && is_pure(t.b) && is_pure(t.c)) {
      const auto va = top_vector(t.a);
      const auto vb = top_vector(t.b);
      const auto vc = top_vector(t.c);
      const double ab = std::abs(inner(va, vb));
      const double bc = std::abs(inner(vb, vc));
      const double ac = std::abs(inner(va, vc));
      pure_triangle.record(ab * ab + bc * bc - 1.0 - ac, tolerance);
    }

    const std::size_t regs = t.a.shape().size();
    if (regs >= 2) {
      const std::vector<std::size_t> first{0};
      const auto rest = range(1, regs);
      const double info = mutual_information(t.a, first, rest);
      const DensityOperator product = tensor(partial_trace(t.a, first), partial_trace(t.a, rest));
      const double rhs = (2.0 / std::numbers::ln2) * (1.0 - fidelity(t.a, product));
      dc.record(rhs - info, tolerance);
    }
    if (regs >= 3) {
      const std::vector<std::size_t> a{0}, b{1}, ab{0, 1};
      const auto c = range(2, regs);
      subadd.record(conditional_entropy(t.a, ab, c) -
                        (conditional_entropy(t.a, a, c) + conditional_entropy(t.a, b, c)),
                    tolerance);
    }

    const double w_rho[2] = {t.p, 1.0 - t.p};
    const double w_rho2[2] = {t.q, 1.0 - t.q};
    const DensityOperator rho = classical_quantum(w_rho, {t.a, t.b});
    const DensityOperator rho2 = classical_quantum(w_rho2, {t.c, t.a});
    const double decomposed =
        std::sqrt(w_rho[0] * w_rho2[0]) * f_ac + std::sqrt(w_rho[1] * w_rho2[1]) * f_ab;
    last.record(std::abs(fidelity(rho, rho2) - decomposed), tolerance);

    const std::vector<std::size_t> x{0};
    const auto y = range(1, rho.shape().size());
    const MinEntropyResult h_min = min_entropy_cq(rho, 0);
    hmin.record(h_min.value - conditional_entropy(rho, x, y), tolerance);

    std::vector<double> dist(t.a.dim());
    for (std::size_t i = 0; i < dist.size(); ++i) dist[i] = t.a.matrix()(i, i).real();
    const double d = static_cast<double>(dist.size());
    double delta = 0.0;
    for (double p : dist) delta += 0.5 * std::abs(p - 1.0 / d);
    const double eps = std::max(0.0, std::log2(d) - shannon_entropy(dist));
    vadhan.record(delta - std::sqrt(eps * std::numbers::ln2 / 2.0), tolerance);
    entropy_gap_linear.record(delta - eps, tolerance);
  }

  report.results = {fuchs_lo, fuchs_hi, fid_ineq, fid_ineq2, pure_triangle,   dc,
                    last,     subadd,   hmin,     vadhan,    entropy_gap_linear};
  return report;
}

std::vector<StateTriple> random_triples(std::size_t count, std::uint64_t seed) {
  std::vector<StateTriple> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Rng rng = make_stream(seed, i);
    std::uniform_int_distribution<std::size_t> regs_dist(1, 3);
    std::uniform_int_distribution<std::size_t> dim_dist(2, 4);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const std::size_t regs = regs_dist(rng);
    std::vector<std::size_t> dims;
    std::size_t total = 1;
    for (std::size_t r = 0; r < regs; ++r) {
      std::size_t d = dim_dist(rng);
      while (total * d > 32) --d;
      dims.push_back(d);
      total *= d;
    }
    const RegisterShape shape(dims);
    const bool pure = unit(rng) < 0.25;
    auto draw = [&]() {
      if (pure) return random_pure_density(shape, rng);
      std::uniform_int_distribution<std::size_t> rank_dist(1, total);
      return random_density(shape, rank_dist(rng), rng);
    };
    DensityOperator a = draw();
    DensityOperator b = draw();
    DensityOperator c = draw();
    const double p = unit(rng);
    const double q = unit(rng);
    out.push_back(StateTriple{std::move(a), std::move(b), std::move(c), p, q});
  }
  return out;
}

}  // namespace nlgames
