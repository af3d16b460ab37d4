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

#include "nlgames/sic.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "nlgames/error.h"

namespace nlgames {
namespace {

void check_dimension(const AdviceFamily& f) {
  const std::size_t dim = f.k() * f.dim_a() * f.dim_b() * f.k();
  if (dim > kMaxSicDimension) {
    throw Error(ErrorCode::kDimension, "k*dimA*dimB*k = " + std::to_string(dim) +
                                           " exceeds the 4096 cap");
  }
}

// |L^A_y> on X (x) A (x) B.
ComplexVector superposed_a(const AdviceFamily& f, std::size_t y) {
  const std::size_t d = f.dim_a() * f.dim_b();
  const double py = f.p_y(y);
  ComplexVector out(f.k() * d);
  for (std::size_t x = 0; x < f.k(); ++x) {
    const double w = std::sqrt(f.p(x, y) / py);
    for (std::size_t i = 0; i < d; ++i) out[x * d + i] = w * f.state(x, y)[i];
  }
  return out;
}

// |L^B_x> on A (x) B (x) Y.
ComplexVector superposed_b(const AdviceFamily& f, std::size_t x) {
  const std::size_t d = f.dim_a() * f.dim_b();
  const std::size_t k = f.k();
  const double px = f.p_x(x);
  ComplexVector out(d * k);
  for (std::size_t y = 0; y < k; ++y) {
    const double w = std::sqrt(f.p(x, y) / px);
    for (std::size_t i = 0; i < d; ++i) out[i * k + y] = w * f.state(x, y)[i];
  }
  return out;
}

// sum_c w_c blocks[c] (x) |c><c| with the classical register last.
ComplexMatrix classical_last(const std::vector<double>& weights,
                             const std::vector<ComplexMatrix>& blocks, std::size_t block_dim) {
  const std::size_t k = weights.size();
  ComplexMatrix out(block_dim * k, block_dim * k);
  for (std::size_t c = 0; c < k; ++c) {
    if (weights[c] == 0.0) continue;
    for (std::size_t i = 0; i < block_dim; ++i) {
      for (std::size_t j = 0; j < block_dim; ++j) {
        out(i * k + c, j * k + c) = weights[c] * blocks[c](i, j);
      }
    }
  }
  return out;
}

// sum_c w_c |c><c| (x) blocks[c] with the classical register first.
ComplexMatrix classical_first(const std::vector<double>& weights,
                              const std::vector<ComplexMatrix>& blocks, std::size_t block_dim) {
  const std::size_t k = weights.size();
  ComplexMatrix out(block_dim * k, block_dim * k);
  for (std::size_t c = 0; c < k; ++c) {
    if (weights[c] == 0.0) continue;
    for (std::size_t i = 0; i < block_dim; ++i) {
      for (std::size_t j = 0; j < block_dim; ++j) {
        out(c * block_dim + i, c * block_dim + j) = weights[c] * blocks[c](i, j);
      }
    }
  }
  return out;
}

double weighted_fidelity_deficit(const std::vector<ComplexMatrix>& states,
                                 const std::vector<double>& weights) {
  double s = 0.0;
  for (std::size_t u = 0; u < states.size(); ++u) {
    if (weights[u] == 0.0) continue;
    s += weights[u] * weights[u];
    for (std::size_t v = u + 1; v < states.size(); ++v) {
      if (weights[v] == 0.0) continue;
      const double fid = fidelity(states[u], states[v]);
      s += 2.0 * weights[u] * weights[v] * fid * fid;
    }
  }
  return 1.0 - s;
}

// Index maximizing sum_v w_v F^2(states[u], states[v]) among positive weights.
std::size_t reference_index(const std::vector<ComplexMatrix>& states,
                            const std::vector<double>& weights) {
  std::size_t best = 0;
  double best_score = -1.0;
  for (std::size_t u = 0; u < states.size(); ++u) {
    if (weights[u] == 0.0) continue;
    double score = 0.0;
    for (std::size_t v = 0; v < states.size(); ++v) {
      if (weights[v] == 0.0) continue;
      const double fid = u == v ? 1.0 : fidelity(states[u], states[v]);
      score += weights[v] * fid * fid;
    }
    if (score > best_score) {
      best_score = score;
      best = u;
    }
  }
  return best;
}

double mixture_top_eigenvalue(const std::vector<ComplexVector>& states,
                              const std::vector<double>& weights, std::size_t dim) {
  ComplexMatrix mix(dim, dim);
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (weights[i] == 0.0) continue;
    mix.add_scaled(ComplexMatrix::outer(states[i], states[i]), weights[i]);
  }
  return hermitian_eigenvalues(hermitian_part(mix)).front();
}

std::vector<double> marginals_y(const AdviceFamily& f) {
  std::vector<double> w(f.k());
  for (std::size_t y = 0; y < f.k(); ++y) w[y] = f.p_y(y);
  return w;
}

std::vector<double> marginals_x(const AdviceFamily& f) {
  std::vector<double> w(f.k());
  for (std::size_t x = 0; x < f.k(); ++x) w[x] = f.p_x(x);
  return w;
}

BoundCheck make_check(std::string name, std::string relation, double lhs, double rhs, double tol) {
  BoundCheck c;
  c.name = std::move(name);
  c.relation = std::move(relation);
  c.lhs = lhs;
  c.rhs = rhs;
  c.passed = c.relation == ">=" ? lhs >= rhs - tol : lhs <= rhs + tol;
  return c;
}

struct OmegaStar {
  double value;
  bool lower_bound;
};

OmegaStar resolve_omega_star(const Game& g, const ChainOptions& options) {
  if (options.omega_star) return {*options.omega_star, false};
  return {entangled_value_seesaw(g, options.seesaw).value, true};
}

}  // namespace

SuperposedStates superposed_states(const AdviceFamily& f) {
  check_dimension(f);
  const std::size_t k = f.k();
  const std::size_t d = f.dim_a() * f.dim_b();
  const RegisterShape shape({k, f.dim_a(), f.dim_b(), k});
  const std::size_t total = k * d * k;
  ComplexMatrix sigma_a(total, total);
  ComplexMatrix sigma_b(total, total);
  bool any = false;
  for (std::size_t y = 0; y < k; ++y) {
    const double py = f.p_y(y);
    if (py == 0.0) continue;
    any = true;
    const ComplexVector l = superposed_a(f, y);
    for (std::size_t i = 0; i < l.size(); ++i) {
      for (std::size_t j = 0; j < l.size(); ++j) {
        sigma_a(i * k + y, j * k + y) = py * l[i] * std::conj(l[j]);
      }
    }
  }
  for (std::size_t x = 0; x < k; ++x) {
    const double px = f.p_x(x);
    if (px == 0.0) continue;
    const ComplexVector l = superposed_b(f, x);
    const std::size_t off = x * l.size();
    for (std::size_t i = 0; i < l.size(); ++i) {
      for (std::size_t j = 0; j < l.size(); ++j) {
        sigma_b(off + i, off + j) = px * l[i] * std::conj(l[j]);
      }
    }
  }
  if (!any) throw Error(ErrorCode::kParam, "degenerate advice family");
  return {DensityOperator::from_psd_construction(std::move(sigma_a), shape),
          DensityOperator::from_psd_construction(std::move(sigma_b), shape)};
}

std::vector<ComplexMatrix> conditional_states_a(const AdviceFamily& f) {
  const RegisterShape shape({f.k(), f.dim_a(), f.dim_b()});
  std::vector<ComplexMatrix> out(f.k());
  for (std::size_t y = 0; y < f.k(); ++y) {
    if (f.p_y(y) == 0.0) continue;
    out[y] = reduced_state(superposed_a(f, y), shape, {0, 1});
  }
  return out;
}

std::vector<ComplexMatrix> conditional_states_b(const AdviceFamily& f) {
  const RegisterShape shape({f.dim_a(), f.dim_b(), f.k()});
  std::vector<ComplexMatrix> out(f.k());
  for (std::size_t x = 0; x < f.k(); ++x) {
    if (f.p_x(x) == 0.0) continue;
    out[x] = reduced_state(superposed_b(f, x), shape, {1, 2});
  }
  return out;
}

SicReport sic_of_family(const AdviceFamily& f) {
  check_dimension(f);
  const std::size_t k = f.k();
  const std::size_t da = f.dim_a();
  const std::size_t db = f.dim_b();
  const std::vector<double> wy = marginals_y(f);
  const std::vector<double> wx = marginals_x(f);
  const auto rho_a = conditional_states_a(f);
  const auto rho_b = conditional_states_b(f);

  auto filled = [](std::vector<ComplexMatrix> blocks, std::size_t dim) {
    for (auto& b : blocks) {
      if (b.empty()) b = ComplexMatrix(dim, dim);
    }
    return blocks;
  };

  SicReport r;
  const DensityOperator xi_a = DensityOperator::from_psd_construction(
      classical_last(wy, filled(rho_a, k * da), k * da), RegisterShape({k, da, k}));
  const DensityOperator xi_b = DensityOperator::from_psd_construction(
      classical_first(wx, filled(rho_b, db * k), db * k), RegisterShape({k, db, k}));
  r.i_y_xa = mutual_information(xi_a, {0, 1}, {2});
  r.i_x_by = mutual_information(xi_b, {0}, {1, 2});
  r.sic = r.i_y_xa + r.i_x_by;
  r.eps_a = weighted_fidelity_deficit(rho_a, wy);
  r.eps_b = weighted_fidelity_deficit(rho_b, wx);
  r.max_overlap = mixture_top_eigenvalue(f.states(), f.distribution(), da * db);

  // sum_xy p_xy |x><x| (x) Tr_other(phi_xy) (x) |y><y|
  const RegisterShape ab({da, db});
  auto classical_state = [&](std::size_t keep, std::size_t dim) {
    ComplexMatrix out(k * dim * k, k * dim * k);
    for (std::size_t x = 0; x < k; ++x) {
      for (std::size_t y = 0; y < k; ++y) {
        if (f.p(x, y) == 0.0) continue;
        const ComplexMatrix local = reduced_state(f.state(x, y), ab, {keep});
        for (std::size_t i = 0; i < dim; ++i) {
          for (std::size_t j = 0; j < dim; ++j) {
            out((x * dim + i) * k + y, (x * dim + j) * k + y) = f.p(x, y) * local(i, j);
          }
        }
      }
    }
    return DensityOperator::from_psd_construction(std::move(out), RegisterShape({k, dim, k}));
  };
  r.nonsuperposed_i_y = mutual_information(classical_state(0, da), {0, 1}, {2});
  r.nonsuperposed_i_x = mutual_information(classical_state(1, db), {0}, {1, 2});
  return r;
}

AdviceFamily product_family(const AdviceFamily& f, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kParam, "product family needs n >= 1");
  if (n == 1) return f;
  std::size_t k = 1, da = 1, db = 1;
  for (std::size_t i = 0; i < n; ++i) {
    k *= f.k();
    da *= f.dim_a();
    db *= f.dim_b();
    if (k * k * da * db > kMaxSicDimension) {
      throw Error(ErrorCode::kDimension, "product family exceeds the 4096 dimension cap");
    }
  }
  std::vector<double> p(k * k);
  std::vector<ComplexVector> states(k * k, ComplexVector(da * db));
  std::vector<std::size_t> xs(n), ys(n), as(n), bs(n);
  auto split = [](std::size_t v, std::size_t base, std::vector<std::size_t>& out) {
    for (std::size_t i = out.size(); i-- > 0;) {
      out[i] = v % base;
      v /= base;
    }
  };
  for (std::size_t x = 0; x < k; ++x) {
    split(x, f.k(), xs);
    for (std::size_t y = 0; y < k; ++y) {
      split(y, f.k(), ys);
      double q = 1.0;
      for (std::size_t i = 0; i < n; ++i) q *= f.p(xs[i], ys[i]);
      p[x * k + y] = q;
      ComplexVector& out = states[x * k + y];
      for (std::size_t a = 0; a < da; ++a) {
        split(a, f.dim_a(), as);
        for (std::size_t b = 0; b < db; ++b) {
          split(b, f.dim_b(), bs);
          Complex amp = 1.0;
          for (std::size_t i = 0; i < n && amp != 0.0; ++i) {
            amp *= f.state(xs[i], ys[i])[as[i] * f.dim_b() + bs[i]];
          }
          out[a * db + b] = amp;
        }
      }
    }
  }
  return AdviceFamily(k, da, db, std::move(p), std::move(states));
}

LocalUnitaries identity_unitaries(const AdviceFamily& f) {
  LocalUnitaries u;
  u.alice.assign(f.k(), ComplexMatrix::identity(f.dim_a()));
  u.bob.assign(f.k(), ComplexMatrix::identity(f.dim_b()));
  return u;
}

LocalUnitaries uhlmann_unitaries(const AdviceFamily& f) {
  const std::size_t k = f.k();
  const std::size_t da = f.dim_a();
  const std::size_t db = f.dim_b();
  LocalUnitaries u = identity_unitaries(f);

  const std::vector<double> wy = marginals_y(f);
  u.j = reference_index(conditional_states_a(f), wy);
  const ComplexMatrix ref_a = reshape(superposed_a(f, u.j), k * da, db);
  for (std::size_t y = 0; y < k; ++y) {
    if (y == u.j || wy[y] == 0.0) continue;
    const ComplexMatrix m = reshape(superposed_a(f, y), k * da, db);
    u.bob[y] = polar_unitary(ref_a.adjoint() * m).transpose();
  }

  // |M^B_x> = sum_y sqrt(p_xy / p_x) (I (x) U_y)|phi_xy> |y>
  const std::vector<double> wx = marginals_x(f);
  std::vector<ComplexVector> m_b(k);
  std::vector<ComplexMatrix> nu(k);
  const RegisterShape aby({da, db, k});
  for (std::size_t x = 0; x < k; ++x) {
    if (wx[x] == 0.0) continue;
    ComplexVector v(da * db * k);
    for (std::size_t y = 0; y < k; ++y) {
      const double w = std::sqrt(f.p(x, y) / wx[x]);
      if (w == 0.0) continue;
      const ComplexMatrix xi = reshape(f.state(x, y), da, db) * u.bob[y].transpose();
      for (std::size_t a = 0; a < da; ++a) {
        for (std::size_t b = 0; b < db; ++b) v[(a * db + b) * k + y] = w * xi(a, b);
      }
    }
    nu[x] = reduced_state(v, aby, {1, 2});
    m_b[x] = std::move(v);
  }
  u.i = reference_index(nu, wx);
  const ComplexMatrix ref_b = reshape(m_b[u.i], da, db * k);
  for (std::size_t x = 0; x < k; ++x) {
    if (x == u.i || wx[x] == 0.0) continue;
    const ComplexMatrix m = reshape(m_b[x], da, db * k);
    u.alice[x] = polar_unitary(m * ref_b.adjoint());
  }
  return u;
}

std::vector<ComplexVector> rotated_states(const AdviceFamily& f, const LocalUnitaries& u) {
  const std::size_t k = f.k();
  if (u.alice.size() != k || u.bob.size() != k) {
    throw Error(ErrorCode::kShape, "need one local unitary per input for each player");
  }
  std::vector<ComplexVector> out;
  out.reserve(k * k);
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = 0; y < k; ++y) {
      const ComplexMatrix omega =
          u.alice[x] * reshape(f.state(x, y), f.dim_a(), f.dim_b()) * u.bob[y].transpose();
      out.emplace_back(omega.entries().begin(), omega.entries().end());
    }
  }
  return out;
}

double rotated_overlap(const AdviceFamily& f, const LocalUnitaries& u) {
  return mixture_top_eigenvalue(rotated_states(f, u), f.distribution(), f.dim_a() * f.dim_b());
}

AlignmentOverlaps alignment_overlaps(const AdviceFamily& f, const LocalUnitaries& u) {
  const auto omega = rotated_states(f, u);
  const std::size_t k = f.k();
  AlignmentOverlaps out;
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = 0; y < k; ++y) {
      const auto& o = omega[x * k + y];
      out.along_a += f.p(x, y) * std::norm(inner(o, omega[x * k + u.j]));
      out.along_b += f.p(x, y) * std::norm(inner(o, omega[u.i * k + y]));
    }
  }
  return out;
}

bool ChainReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) {
    return !c.applicable || c.informational || c.passed;
  });
}

ChainReport verify_sic_chain(const Game& g, const AdviceFamily& f, const Measurement& alice,
                                  const Measurement& bob, const ChainOptions& options) {
  if (!g.is_uniform()) {
    throw Error(ErrorCode::kParam, "the chain applies to games with a uniform input distribution");
  }
  ChainReport r;
  r.advice_value = advice_value(g, f, alice, bob);
  r.sic = sic_of_family(f);
  const OmegaStar omega = resolve_omega_star(g, options);
  r.omega_star = omega.value;
  r.omega_star_is_lower_bound = omega.lower_bound;
  const double tol = options.tolerance;
  const double ln2 = std::numbers::ln2;

  r.checks.push_back(make_check("a_sic_vs_eps", ">=", r.sic.sic,
                                (r.sic.eps_a + r.sic.eps_b) / (4.0 * ln2), tol));

  LocalUnitaries u;
  if (options.unitaries) {
    u = *options.unitaries;
    r.unitaries_source = "supplied";
  } else if (options.search_unitaries) {
    u = uhlmann_unitaries(f);
    r.unitaries_source = "uhlmann";
  } else {
    u = identity_unitaries(f);
    r.unitaries_source = "identity";
  }
  r.rotated_overlap = rotated_overlap(f, u);
  BoundCheck b = make_check("b_eps_vs_rotated_overlap", ">=", r.sic.eps_a + r.sic.eps_b,
                            (1.0 - r.rotated_overlap) / 8.0, tol);
  if (r.unitaries_source == "identity") b.note = "identity unitaries: weaker sufficient check";
  r.checks.push_back(std::move(b));

  const bool perfect = r.advice_value >= 1.0 - 1e-6;
  BoundCheck c = make_check("c_max_overlap_vs_omega", "<=", r.sic.max_overlap, r.omega_star, tol);
  BoundCheck c2 =
      make_check("c_rotated_overlap_vs_omega", "<=", r.rotated_overlap, r.omega_star, tol);
  for (BoundCheck* check : {&c, &c2}) {
    check->applicable = perfect;
    if (!perfect) check->note = "advice value below 1 - 1e-6";
    if (omega.lower_bound) check->note += check->note.empty() ? "" : "; ";
    if (omega.lower_bound) check->note += "omega* is a see-saw lower bound";
  }
  r.checks.push_back(std::move(c));
  r.checks.push_back(std::move(c2));

  BoundCheck d = make_check("d_sic_vs_value_gap", ">=", r.sic.sic,
                            (1.0 - r.omega_star) / (32.0 * ln2), tol);
  d.applicable = perfect;
  d.informational = omega.lower_bound;
  if (!perfect) d.note = "advice value below 1 - 1e-6";
  if (omega.lower_bound) d.note += d.note.empty() ? "" : "; ";
  if (omega.lower_bound) d.note += "omega* is a see-saw lower bound";
  r.checks.push_back(std::move(d));
  return r;
}

bool SingleGameReport::passed() const {
  return !hypotheses_met || degenerate || sic_positive;
}

SingleGameReport verify_single_game(const Game& g_uniform, const Game& g_prime,
                                           const AdviceFamily& f, const Measurement& alice,
                                           const Measurement& bob, const ChainOptions& options) {
  if (!g_uniform.is_uniform()) {
    throw Error(ErrorCode::kParam, "reference game must have a uniform input distribution");
  }
  if (g_uniform.inputs() != g_prime.inputs() || g_uniform.outputs() != g_prime.outputs() ||
      g_uniform.predicate() != g_prime.predicate()) {
    throw Error(ErrorCode::kMismatch, "games differ in alphabets or predicate");
  }
  SingleGameReport r;
  const double u = 1.0 / static_cast<double>(g_prime.inputs() * g_prime.inputs());
  for (double p : g_prime.distribution()) r.distance += 0.5 * std::abs(p - u);
  const OmegaStar omega = resolve_omega_star(g_uniform, options);
  r.omega_star = omega.value;
  r.omega_star_is_lower_bound = omega.lower_bound;
  r.eps = std::max(0.0, 1.0 - omega.value);
  r.degenerate = r.eps <= 1e-12;
  r.advice_value = advice_value(g_prime, f, alice, bob);
  r.distance_ok = r.distance <= r.c0 * r.eps;
  r.advice_ok = r.advice_value >= 1.0 - r.eps / 4.0;
  r.hypotheses_met = r.distance_ok && r.advice_ok;
  r.sic = sic_of_family(f).sic;
  r.sic_positive = r.sic > 1e-12;
  return r;
}

}  // namespace nlgames
