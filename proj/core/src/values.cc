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

#include "nlgames/values.h"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "nlgames/error.h"
#include "nlgames/parallel.h"
#include "nlgames/qmath.h"
#include "nlgames/random.h"

namespace nlgames {
namespace {

std::uint64_t int_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t cap) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (out > cap / base) return cap + 1;
    out *= base;
  }
  return out;
}

// Best Bob table against a fixed Alice table; smallest b on ties.
double best_response(const Game& g, const std::vector<std::size_t>& alice,
                     std::vector<std::size_t>& bob) {
  const std::size_t k = g.inputs();
  const std::size_t m = g.outputs();
  double total = 0.0;
  for (std::size_t y = 0; y < k; ++y) {
    double best = -1.0;
    for (std::size_t b = 0; b < m; ++b) {
      double s = 0.0;
      for (std::size_t x = 0; x < k; ++x) {
        if (g.wins(alice[x], b, x, y)) s += g.p(x, y);
      }
      if (s > best) {
        best = s;
        bob[y] = b;
      }
    }
    total += best;
  }
  return total;
}

// <phi| A (x) B |phi> = tr(Phi^dagger A Phi B^T), Phi the dA x dB reshape.
double expectation(const ComplexMatrix& phi, const ComplexMatrix& a, const ComplexMatrix& b) {
  return (phi.adjoint() * a * phi * b.transpose()).trace().real();
}

ComplexMatrix projector_sum(const ComplexMatrix& vectors, std::size_t outcome, std::size_t outputs) {
  const std::size_t d = vectors.rows();
  ComplexMatrix out(d, d);
  for (std::size_t c = outcome; c < vectors.cols(); c += outputs) {
    const auto v = vectors.column(c);
    out += ComplexMatrix::outer(v, v);
  }
  return out;
}

Measurement random_projective(std::size_t inputs, std::size_t outputs, std::size_t dim,
                              Rng& rng) {
  Measurement meas(inputs);
  for (auto& povm : meas) {
    const ComplexMatrix u = random_unitary(dim, rng);
    for (std::size_t a = 0; a < outputs; ++a) povm.push_back(projector_sum(u, a, outputs));
  }
  return meas;
}

Measurement deterministic_measurement(const std::vector<std::size_t>& table, std::size_t outputs,
                                      std::size_t dim) {
  Measurement meas(table.size());
  for (std::size_t x = 0; x < table.size(); ++x) {
    for (std::size_t a = 0; a < outputs; ++a) {
      meas[x].push_back(a == table[x] ? ComplexMatrix::identity(dim) : ComplexMatrix(dim, dim));
    }
  }
  return meas;
}

ClassicalStrategy classical_start(const Game& g) {
  const std::uint64_t size = int_pow(g.outputs(), 2 * g.inputs(), kClassicalBudget);
  if (size <= kClassicalBudget) return classical_value(g).strategy;
  return classical_value_sampled(g, 4096, 0).strategy;
}

// The advice states (or one shared state) as dA x dB coefficient matrices.
struct StateTable {
  std::vector<ComplexMatrix> phi;
  std::size_t k = 1;
  bool shared = true;
  const ComplexMatrix& at(std::size_t x, std::size_t y) const {
    return shared ? phi.front() : phi[x * k + y];
  }
};

double table_objective(const Game& g, const StateTable& states, const Measurement& alice,
                       const Measurement& bob) {
  const std::size_t k = g.inputs();
  const std::size_t m = g.outputs();
  double total = 0.0;
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = 0; y < k; ++y) {
      if (g.p(x, y) == 0.0) continue;
      const ComplexMatrix& phi = states.at(x, y);
      double s = 0.0;
      for (std::size_t a = 0; a < m; ++a) {
        const ComplexMatrix left = phi.adjoint() * alice[x][a] * phi;
        for (std::size_t b = 0; b < m; ++b) {
          if (g.wins(a, b, x, y)) s += (left * bob[y][b].transpose()).trace().real();
        }
      }
      total += g.p(x, y) * s;
    }
  }
  return total;
}

// R^x_a = sum_{y,b} p_xy V(a,b|x,y) Phi (B^y_b)^T Phi^dagger
std::vector<Povm> alice_operators(const Game& g, const StateTable& states, const Measurement& bob,
                                  std::size_t dim_a) {
  const std::size_t k = g.inputs();
  const std::size_t m = g.outputs();
  std::vector<Povm> r(k, Povm(m, ComplexMatrix(dim_a, dim_a)));
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = 0; y < k; ++y) {
      if (g.p(x, y) == 0.0) continue;
      const ComplexMatrix& phi = states.at(x, y);
      for (std::size_t b = 0; b < m; ++b) {
        const ComplexMatrix block = phi * bob[y][b].transpose() * phi.adjoint();
        for (std::size_t a = 0; a < m; ++a) {
          if (g.wins(a, b, x, y)) r[x][a].add_scaled(block, g.p(x, y));
        }
      }
    }
  }
  return r;
}

// S^y_b = sum_{x,a} p_xy V(a,b|x,y) Phi^T (A^x_a)^T conj(Phi)
std::vector<Povm> bob_operators(const Game& g, const StateTable& states, const Measurement& alice,
                                std::size_t dim_b) {
  const std::size_t k = g.inputs();
  const std::size_t m = g.outputs();
  std::vector<Povm> s(k, Povm(m, ComplexMatrix(dim_b, dim_b)));
  for (std::size_t y = 0; y < k; ++y) {
    for (std::size_t x = 0; x < k; ++x) {
      if (g.p(x, y) == 0.0) continue;
      const ComplexMatrix& phi = states.at(x, y);
      for (std::size_t a = 0; a < m; ++a) {
        const ComplexMatrix block = phi.transpose() * alice[x][a].transpose() * phi.conjugate();
        for (std::size_t b = 0; b < m; ++b) {
          if (g.wins(a, b, x, y)) s[y][b].add_scaled(block, g.p(x, y));
        }
      }
    }
  }
  return s;
}

double povm_gain(const Povm& povm, const Povm& reduced) {
  double s = 0.0;
  for (std::size_t a = 0; a < povm.size(); ++a) s += (povm[a] * reduced[a]).trace().real();
  return s;
}

// Orthonormal basis of the range of a projector, as columns. Empty when the
// operator is not (numerically) a projector.
std::optional<ComplexMatrix> range_basis(const ComplexMatrix& p) {
  const EigenDecomposition eig = hermitian_eig(p);
  std::vector<std::size_t> cols;
  for (std::size_t i = 0; i < eig.values.size(); ++i) {
    const double v = eig.values[i];
    if (v > 1e-6 && v < 1.0 - 1e-6) return std::nullopt;
    if (v > 0.5) cols.push_back(i);
  }
  ComplexMatrix q(p.rows(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (std::size_t r = 0; r < p.rows(); ++r) q(r, c) = eig.vectors(r, cols[c]);
  }
  return q;
}

// Maximizes sum_a tr(P_a R_a) over projective measurements by re-splitting
// the range of P_a + P_a' for each outcome pair. For two outcomes this is the
// exact optimum; otherwise each pass is monotone.
void refine_povm(Povm& povm, const Povm& reduced, double tol) {
  const std::size_t m = povm.size();
  const std::size_t passes = m == 2 ? 1 : 50;
  double previous = povm_gain(povm, reduced);
  for (std::size_t pass = 0; pass < passes; ++pass) {
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = a + 1; b < m; ++b) {
        const auto q = range_basis(povm[a] + povm[b]);
        if (!q || q->cols() == 0) continue;
        const ComplexMatrix qd = q->adjoint();
        const EigenDecomposition eig =
            hermitian_eig(hermitian_part(qd * (reduced[a] - reduced[b]) * *q));
        const double cutoff = 1e-12 * std::max(1.0, std::abs(eig.values.front()));
        const std::size_t r = q->cols();
        ComplexMatrix inner_upper(r, r), inner_lower(r, r);
        for (std::size_t i = 0; i < r; ++i) {
          const auto v = eig.vectors.column(i);
          (eig.values[i] > cutoff ? inner_upper : inner_lower) += ComplexMatrix::outer(v, v);
        }
        ComplexMatrix upper = *q * inner_upper * qd;
        ComplexMatrix lower = *q * inner_lower * qd;
        const double before = (povm[a] * reduced[a]).trace().real() +
                              (povm[b] * reduced[b]).trace().real();
        const double after = (upper * reduced[a]).trace().real() +
                             (lower * reduced[b]).trace().real();
        if (after > before) {
          povm[a] = std::move(upper);
          povm[b] = std::move(lower);
        }
      }
    }
    const double current = povm_gain(povm, reduced);
    if (current - previous < tol) break;
    previous = current;
  }
}

void refine_all(Measurement& meas, const std::vector<Povm>& reduced, double tol) {
  for (std::size_t x = 0; x < meas.size(); ++x) refine_povm(meas[x], reduced[x], tol);
}

// Top eigenvector of sum_xy p_xy sum_ab V(a,b|x,y) A^x_a (x) B^y_b.
ComplexVector optimal_state(const Game& g, const Measurement& alice, const Measurement& bob) {
  const std::size_t da = alice.front().front().rows();
  const std::size_t db = bob.front().front().rows();
  ComplexMatrix w(da * db, da * db);
  for (std::size_t x = 0; x < g.inputs(); ++x) {
    for (std::size_t y = 0; y < g.inputs(); ++y) {
      if (g.p(x, y) == 0.0) continue;
      for (std::size_t a = 0; a < g.outputs(); ++a) {
        for (std::size_t b = 0; b < g.outputs(); ++b) {
          if (g.wins(a, b, x, y)) w.add_scaled(tensor(alice[x][a], bob[y][b]), g.p(x, y));
        }
      }
    }
  }
  return hermitian_eig(hermitian_part(w)).vectors.column(0);
}

struct RestartOutcome {
  double value = -1.0;
  ComplexVector state;
  Measurement alice;
  Measurement bob;
  std::vector<double> trace;
};

template <typename Restart>
std::vector<RestartOutcome> run_restarts(std::size_t restarts, Restart&& restart) {
  std::vector<RestartOutcome> out(restarts);
  parallel_chunks(restarts, [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t r = begin; r < end; ++r) out[r] = restart(r);
  });
  return out;
}

std::size_t best_index(const std::vector<RestartOutcome>& outcomes) {
  std::size_t best = 0;
  for (std::size_t r = 1; r < outcomes.size(); ++r) {
    if (outcomes[r].value > outcomes[best].value) best = r;
  }
  return best;
}

void check_family_matches(const Game& g, const AdviceFamily& f) {
  if (f.k() != g.inputs()) {
    throw Error(ErrorCode::kMismatch, "advice family and game have different input alphabets");
  }
  for (std::size_t i = 0; i < g.distribution().size(); ++i) {
    if (std::abs(g.distribution()[i] - f.distribution()[i]) > 1e-9) {
      throw Error(ErrorCode::kMismatch, "advice family distribution differs from the game's");
    }
  }
}

StateTable family_table(const AdviceFamily& f) {
  StateTable t;
  t.k = f.k();
  t.shared = false;
  for (const auto& s : f.states()) t.phi.push_back(reshape(s, f.dim_a(), f.dim_b()));
  return t;
}

}  // namespace

double classical_strategy_value(const Game& g, const ClassicalStrategy& s) {
  if (s.alice.size() != g.inputs() || s.bob.size() != g.inputs()) {
    throw Error(ErrorCode::kShape, "classical strategy tables must have one entry per input");
  }
  double total = 0.0;
  for (std::size_t x = 0; x < g.inputs(); ++x) {
    for (std::size_t y = 0; y < g.inputs(); ++y) {
      if (s.alice[x] >= g.outputs() || s.bob[y] >= g.outputs()) {
        throw Error(ErrorCode::kParam, "classical strategy output out of range");
      }
      if (g.wins(s.alice[x], s.bob[y], x, y)) total += g.p(x, y);
    }
  }
  return total;
}

ClassicalResult classical_value(const Game& g) {
  const std::size_t k = g.inputs();
  const std::size_t m = g.outputs();
  if (int_pow(m, 2 * k, kClassicalBudget) > kClassicalBudget) {
    throw Error(ErrorCode::kBudget,
                "|O|^(2k) exceeds the 2^26 enumeration budget; use the sampled mode");
  }
  const std::uint64_t tables = int_pow(m, k, kClassicalBudget);
  ClassicalResult best;
  best.value = -1.0;
  std::vector<std::size_t> alice(k), bob(k);
  for (std::uint64_t index = 0; index < tables; ++index) {
    std::uint64_t rest = index;
    for (std::size_t x = k; x-- > 0;) {
      alice[x] = rest % m;
      rest /= m;
    }
    const double v = best_response(g, alice, bob);
    if (v > best.value + 1e-12) {
      best.value = v;
      best.strategy = {alice, bob};
    }
  }
  best.value = classical_strategy_value(g, best.strategy);
  return best;
}

ClassicalResult classical_value_sampled(const Game& g, std::size_t samples, std::uint64_t seed) {
  const std::size_t k = g.inputs();
  Rng rng = make_stream(seed, 0);
  std::uniform_int_distribution<std::size_t> pick(0, g.outputs() - 1);
  ClassicalResult best;
  best.value = -1.0;
  best.exact = false;
  std::vector<std::size_t> alice(k), bob(k);
  for (std::size_t s = 0; s < std::max<std::size_t>(samples, 1); ++s) {
    for (auto& a : alice) a = pick(rng);
    const double v = best_response(g, alice, bob);
    if (v > best.value + 1e-12) {
      best.value = v;
      best.strategy = {alice, bob};
    }
  }
  best.value = classical_strategy_value(g, best.strategy);
  return best;
}

void validate_measurement(const Measurement& meas, std::size_t inputs, std::size_t outputs,
                          std::size_t dim, double tol) {
  if (meas.size() != inputs) {
    throw Error(ErrorCode::kParam, "measurement needs one POVM per input");
  }
  for (const auto& povm : meas) {
    if (povm.size() != outputs) throw Error(ErrorCode::kParam, "POVM needs one element per outcome");
    ComplexMatrix sum(dim, dim);
    for (const auto& e : povm) {
      if (e.rows() != dim || e.cols() != dim) {
        throw Error(ErrorCode::kParam, "POVM element has the wrong dimension");
      }
      if (!is_hermitian(e, 1e-9) ||
          hermitian_eigenvalues(hermitian_part(e)).back() < -1e-9) {
        throw Error(ErrorCode::kParam, "POVM element is not positive semidefinite");
      }
      sum += e;
    }
    if (max_abs_diff(sum, ComplexMatrix::identity(dim)) > tol) {
      throw Error(ErrorCode::kParam, "POVM elements do not sum to the identity");
    }
  }
}

void validate_strategy(const Game& g, const QuantumStrategy& s) {
  if (s.state.size() != s.dim_a * s.dim_b) {
    throw Error(ErrorCode::kParam, "shared state has the wrong dimension");
  }
  if (std::abs(norm(s.state) - 1.0) > kStateTolerance) {
    throw Error(ErrorCode::kNormalization, "shared state not normalized");
  }
  validate_measurement(s.alice, g.inputs(), g.outputs(), s.dim_a);
  validate_measurement(s.bob, g.inputs(), g.outputs(), s.dim_b);
}

double evaluate_strategy(const Game& g, const QuantumStrategy& s) {
  StateTable t;
  t.phi.push_back(reshape(s.state, s.dim_a, s.dim_b));
  return table_objective(g, t, s.alice, s.bob);
}

std::vector<double> outcome_distribution(const QuantumStrategy& s, std::size_t x, std::size_t y) {
  const ComplexMatrix phi = reshape(s.state, s.dim_a, s.dim_b);
  const std::size_t m = s.alice[x].size();
  std::vector<double> probs(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      probs[a * m + b] = std::max(0.0, expectation(phi, s.alice[x][a], s.bob[y][b]));
    }
  }
  return probs;
}

Measurement computational_basis_measurement(std::size_t inputs, std::size_t outputs,
                                            std::size_t dim) {
  return Measurement(inputs, [&] {
    Povm povm;
    const ComplexMatrix id = ComplexMatrix::identity(dim);
    for (std::size_t a = 0; a < outputs; ++a) povm.push_back(projector_sum(id, a, outputs));
    return povm;
  }());
}

SeesawResult entangled_value_seesaw(const Game& g, const SeesawConfig& cfg) {
  if (cfg.dim == 0 || cfg.restarts == 0 || !(cfg.tol > 0.0)) {
    throw Error(ErrorCode::kParam, "see-saw needs dim >= 1, restarts >= 1 and tol > 0");
  }
  const std::size_t d = cfg.dim;
  const std::size_t k = g.inputs();
  const std::size_t m = g.outputs();
  const bool seeded = cfg.include_classical_seed;
  const ClassicalStrategy start = seeded ? classical_start(g) : ClassicalStrategy{};

  auto restart = [&](std::size_t r) {
    RestartOutcome out;
    Rng rng = make_stream(cfg.seed, r);
    if (seeded && r == 0) {
      out.alice = deterministic_measurement(start.alice, m, d);
      out.bob = deterministic_measurement(start.bob, m, d);
      out.state.assign(d * d, 0.0);
      out.state[0] = 1.0;
    } else {
      out.alice = random_projective(k, m, d, rng);
      out.bob = random_projective(k, m, d, rng);
      out.state = random_unit_vector(d * d, rng);
    }
    StateTable t;
    t.phi.push_back(reshape(out.state, d, d));
    double value = table_objective(g, t, out.alice, out.bob);
    out.trace.push_back(value);
    for (std::size_t it = 0; it < cfg.max_iters; ++it) {
      const ComplexVector next = optimal_state(g, out.alice, out.bob);
      StateTable candidate;
      candidate.phi.push_back(reshape(next, d, d));
      if (table_objective(g, candidate, out.alice, out.bob) > value) {
        out.state = next;
        t = std::move(candidate);
      }
      refine_all(out.alice, alice_operators(g, t, out.bob, d), cfg.tol);
      refine_all(out.bob, bob_operators(g, t, out.alice, d), cfg.tol);
      const double current = table_objective(g, t, out.alice, out.bob);
      out.trace.push_back(current);
      const bool converged = current - value < cfg.tol;
      value = std::max(value, current);
      if (converged) break;
    }
    out.value = value;
    return out;
  };

  auto outcomes = run_restarts(cfg.restarts, restart);
  const std::size_t best = best_index(outcomes);
  SeesawResult result;
  result.best_restart = best;
  result.strategy = QuantumStrategy{d, d, outcomes[best].state, outcomes[best].alice,
                                    outcomes[best].bob};
  validate_strategy(g, result.strategy);
  result.value = evaluate_strategy(g, result.strategy);
  result.trace = outcomes[best].trace;
  for (auto& o : outcomes) result.traces.push_back(std::move(o.trace));
  return result;
}

double advice_value(const Game& g, const AdviceFamily& f, const Measurement& alice,
                    const Measurement& bob) {
  check_family_matches(g, f);
  validate_measurement(alice, g.inputs(), g.outputs(), f.dim_a());
  validate_measurement(bob, g.inputs(), g.outputs(), f.dim_b());
  return table_objective(g, family_table(f), alice, bob);
}

AdviceOptimum advice_value_optimized(const Game& g, const AdviceFamily& f,
                                     const SeesawConfig& cfg) {
  check_family_matches(g, f);
  if (cfg.restarts == 0 || !(cfg.tol > 0.0)) {
    throw Error(ErrorCode::kParam, "see-saw needs restarts >= 1 and tol > 0");
  }
  const std::size_t k = g.inputs();
  const std::size_t m = g.outputs();
  const StateTable t = family_table(f);
  const bool seeded = cfg.include_classical_seed;
  const ClassicalStrategy start = seeded ? classical_start(g) : ClassicalStrategy{};

  auto restart = [&](std::size_t r) {
    RestartOutcome out;
    Rng rng = make_stream(cfg.seed, r);
    if (seeded && r == 0) {
      out.alice = deterministic_measurement(start.alice, m, f.dim_a());
      out.bob = deterministic_measurement(start.bob, m, f.dim_b());
    } else {
      out.alice = random_projective(k, m, f.dim_a(), rng);
      out.bob = random_projective(k, m, f.dim_b(), rng);
    }
    double value = table_objective(g, t, out.alice, out.bob);
    out.trace.push_back(value);
    for (std::size_t it = 0; it < cfg.max_iters; ++it) {
      refine_all(out.alice, alice_operators(g, t, out.bob, f.dim_a()), cfg.tol);
      refine_all(out.bob, bob_operators(g, t, out.alice, f.dim_b()), cfg.tol);
      const double current = table_objective(g, t, out.alice, out.bob);
      out.trace.push_back(current);
      const bool converged = current - value < cfg.tol;
      value = std::max(value, current);
      if (converged) break;
    }
    out.value = value;
    return out;
  };

  auto outcomes = run_restarts(cfg.restarts, restart);
  const std::size_t best = best_index(outcomes);
  AdviceOptimum result;
  result.best_restart = best;
  result.alice = outcomes[best].alice;
  result.bob = outcomes[best].bob;
  result.value = advice_value(g, f, result.alice, result.bob);
  result.trace = outcomes[best].trace;
  for (auto& o : outcomes) result.traces.push_back(std::move(o.trace));
  return result;
}

}  // namespace nlgames
