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

#include "nlgames/qmath.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <utility>

#include "nlgames/error.h"

namespace nlgames {
namespace {

constexpr std::size_t kMaxDimension = 4096;
constexpr int kMaxSweeps = 100;
constexpr double kJacobiTolerance = 1e-12;
// Spectral values this small are treated as exact zeros inside square roots.
constexpr double kSqrtCutoff = 1e-14;

std::vector<std::size_t> strides(const RegisterShape& shape) {
  std::vector<std::size_t> s(shape.size(), 1);
  for (std::size_t i = shape.size(); i-- > 1;) s[i - 1] = s[i] * shape.dims[i];
  return s;
}

// Flat offsets of every multi-index over `registers`, enumerated row-major.
std::vector<std::size_t> offsets(const RegisterShape& shape,
                                 const std::vector<std::size_t>& registers) {
  const auto s = strides(shape);
  std::vector<std::size_t> out{0};
  for (std::size_t r : registers) {
    std::vector<std::size_t> next;
    next.reserve(out.size() * shape.dims[r]);
    for (std::size_t base : out) {
      for (std::size_t d = 0; d < shape.dims[r]; ++d) next.push_back(base + d * s[r]);
    }
    out = std::move(next);
  }
  return out;
}

std::vector<std::size_t> normalized_registers(const RegisterShape& shape,
                                              const std::vector<std::size_t>& regs,
                                              bool allow_empty) {
  std::set<std::size_t> seen;
  for (std::size_t r : regs) {
    if (r >= shape.size()) {
      throw Error(ErrorCode::kShape, "register index " + std::to_string(r) +
                                         " out of range for a " +
                                         std::to_string(shape.size()) + "-register shape");
    }
    if (!seen.insert(r).second) {
      throw Error(ErrorCode::kShape, "register index listed twice");
    }
  }
  if (seen.empty() && !allow_empty) {
    throw Error(ErrorCode::kShape, "register set must be nonempty");
  }
  return {seen.begin(), seen.end()};
}

std::vector<std::size_t> complement(const RegisterShape& shape,
                                    const std::vector<std::size_t>& regs) {
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (std::find(regs.begin(), regs.end(), i) == regs.end()) rest.push_back(i);
  }
  return rest;
}

void require_square_match(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
    throw Error(ErrorCode::kShape, std::string(what) + ": dimension mismatch");
  }
}

}  // namespace

RegisterShape::RegisterShape(std::vector<std::size_t> d) : dims(std::move(d)) {
  for (std::size_t x : dims) {
    if (x == 0) throw Error(ErrorCode::kShape, "register dimensions must be positive");
  }
}

std::size_t RegisterShape::total() const {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1},
                         std::multiplies<std::size_t>());
}

RegisterShape RegisterShape::subset(const std::vector<std::size_t>& registers) const {
  std::vector<std::size_t> d;
  for (std::size_t r : registers) d.push_back(dims.at(r));
  return RegisterShape(std::move(d));
}

RegisterShape RegisterShape::concat(const RegisterShape& other) const {
  std::vector<std::size_t> d = dims;
  d.insert(d.end(), other.dims.begin(), other.dims.end());
  return RegisterShape(std::move(d));
}

PureState::PureState(ComplexVector amplitudes, RegisterShape shape)
    : amplitudes_(std::move(amplitudes)), shape_(std::move(shape)) {
  if (shape_.total() != amplitudes_.size()) {
    throw Error(ErrorCode::kShape, "pure state: amplitude count does not match shape");
  }
  const double n = norm(amplitudes_);
  if (std::abs(n * n - 1.0) > kStateTolerance) {
    throw Error(ErrorCode::kNormalization, "pure state is not normalized");
  }
}

DensityOperator::DensityOperator(Trusted, ComplexMatrix matrix, RegisterShape shape)
    : matrix_(std::move(matrix)), shape_(std::move(shape)) {
  if (!matrix_.is_square()) {
    throw Error(ErrorCode::kShape, "density operator must be square");
  }
  if (shape_.total() != matrix_.rows()) {
    throw Error(ErrorCode::kShape, "density operator: register shape does not match dimension");
  }
  if (!is_hermitian(matrix_, kStateTolerance)) {
    throw Error(ErrorCode::kNotHermitian, "density operator is not Hermitian");
  }
  if (std::abs(matrix_.trace() - Complex(1.0)) > kStateTolerance) {
    throw Error(ErrorCode::kNormalization, "density operator trace is not 1");
  }
  matrix_ = hermitian_part(matrix_);
}

DensityOperator DensityOperator::from_psd_construction(ComplexMatrix matrix,
                                                       RegisterShape shape) {
  return DensityOperator(Trusted{}, std::move(matrix), std::move(shape));
}

DensityOperator::DensityOperator(ComplexMatrix matrix, RegisterShape shape)
    : matrix_(std::move(matrix)), shape_(std::move(shape)) {
  if (!matrix_.is_square()) {
    throw Error(ErrorCode::kShape, "density operator must be square");
  }
  if (shape_.total() != matrix_.rows()) {
    throw Error(ErrorCode::kShape, "density operator: register shape does not match dimension");
  }
  if (!is_hermitian(matrix_, kStateTolerance)) {
    throw Error(ErrorCode::kNotHermitian, "density operator is not Hermitian");
  }
  if (std::abs(matrix_.trace() - Complex(1.0)) > kStateTolerance) {
    throw Error(ErrorCode::kNormalization, "density operator trace is not 1");
  }
  const auto ev = hermitian_eigenvalues(matrix_);
  if (!ev.empty() && ev.back() < -kStateTolerance) {
    throw Error(ErrorCode::kParam, "density operator has a negative eigenvalue");
  }
  matrix_ = hermitian_part(matrix_);
}

DensityOperator::DensityOperator(ComplexMatrix matrix)
    : DensityOperator(matrix, RegisterShape::single(matrix.rows())) {}

DensityOperator DensityOperator::from_pure(const PureState& state) {
  return from_psd_construction(ComplexMatrix::outer(state.amplitudes(), state.amplitudes()),
                               state.shape());
}

DensityOperator DensityOperator::maximally_mixed(std::size_t dim) {
  ComplexMatrix m = ComplexMatrix::identity(dim);
  m *= 1.0 / static_cast<double>(dim);
  return DensityOperator(std::move(m));
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex(0.0)) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
      }
    }
  }
  return out;
}

DensityOperator tensor(const DensityOperator& a, const DensityOperator& b) {
  return DensityOperator::from_psd_construction(tensor(a.matrix(), b.matrix()),
                                                a.shape().concat(b.shape()));
}

ComplexMatrix partial_trace(const ComplexMatrix& op, const RegisterShape& shape,
                            const std::vector<std::size_t>& keep) {
  if (!op.is_square() || op.rows() != shape.total()) {
    throw Error(ErrorCode::kShape, "partial trace: shape does not match operator");
  }
  const auto kept = normalized_registers(shape, keep, false);
  const auto traced = complement(shape, kept);
  const auto ko = offsets(shape, kept);
  const auto to = offsets(shape, traced);
  ComplexMatrix out(ko.size(), ko.size());
  for (std::size_t r = 0; r < ko.size(); ++r) {
    for (std::size_t c = 0; c < ko.size(); ++c) {
      Complex acc = 0.0;
      for (std::size_t t : to) acc += op(ko[r] + t, ko[c] + t);
      out(r, c) = acc;
    }
  }
  return out;
}

DensityOperator partial_trace(const DensityOperator& op, const std::vector<std::size_t>& keep) {
  const auto kept = normalized_registers(op.shape(), keep, false);
  return DensityOperator::from_psd_construction(partial_trace(op.matrix(), op.shape(), kept),
                                                op.shape().subset(kept));
}

ComplexMatrix reduced_state(std::span<const Complex> psi, const RegisterShape& shape,
                            const std::vector<std::size_t>& keep) {
  if (psi.size() != shape.total()) {
    throw Error(ErrorCode::kShape, "reduced state: shape does not match vector");
  }
  const auto kept = normalized_registers(shape, keep, false);
  const auto traced = complement(shape, kept);
  const auto ko = offsets(shape, kept);
  const auto to = offsets(shape, traced);
  ComplexMatrix out(ko.size(), ko.size());
  for (std::size_t r = 0; r < ko.size(); ++r) {
    for (std::size_t c = r; c < ko.size(); ++c) {
      Complex acc = 0.0;
      for (std::size_t t : to) acc += psi[ko[r] + t] * std::conj(psi[ko[c] + t]);
      out(r, c) = acc;
      out(c, r) = std::conj(acc);
    }
  }
  return out;
}

EigenDecomposition hermitian_eig(const ComplexMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::kShape, "eigendecomposition needs a square matrix");
  if (m.rows() > kMaxDimension) {
    throw Error(ErrorCode::kDimension, "eigendecomposition dimension exceeds 4096");
  }
  const double scale = std::max(1.0, max_abs_entry(m));
  if (!is_hermitian(m, kStateTolerance * scale)) {
    throw Error(ErrorCode::kNotHermitian, "hermitian_eig: matrix is not Hermitian");
  }
  const std::size_t n = m.rows();
  ComplexMatrix a = hermitian_part(m);
  ComplexMatrix vt = ComplexMatrix::identity(n);
  const double threshold = kJacobiTolerance * std::max(1.0, frobenius_norm(a));

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) off += std::norm(a(i, j));
      }
    }
    if (std::sqrt(off) < threshold) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double r = std::abs(apq);
        if (r == 0.0) continue;
        const Complex phase = apq / r;  // e^{i phi}
        const Complex cphase = std::conj(phase);
        const double theta = 0.5 * std::atan2(2.0 * r, a(q, q).real() - a(p, p).real());
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        // J = [[c, s], [-s e^{-i phi}, c e^{-i phi}]] on (p, q); A <- J^dagger A J.
        // A stays Hermitian, so rows p and q are updated and mirrored into
        // the columns.
        const Complex sp = s * phase;
        const Complex cp = c * phase;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          const Complex np = c * apk - sp * aqk;
          const Complex nq = s * apk + cp * aqk;
          a(p, k) = np;
          a(q, k) = nq;
          a(k, p) = std::conj(np);
          a(k, q) = std::conj(nq);
        }
        a(p, p) = c * c * app - 2.0 * c * s * r + s * s * aqq;
        a(q, q) = s * s * app + 2.0 * c * s * r + c * c * aqq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        // V is kept transposed so the update touches two contiguous rows.
        for (std::size_t k = 0; k < n; ++k) {
          const Complex vpk = vt(p, k);
          const Complex vqk = vt(q, k);
          vt(p, k) = c * vpk - s * cphase * vqk;
          vt(q, k) = s * vpk + c * cphase * vqk;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() > a(j, j).real();
  });
  EigenDecomposition out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = vt(order[k], i);
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
  return hermitian_eig(m).values;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
  return spectral_apply(hermitian_eig(m),
                        [](double x) { return x > kSqrtCutoff ? std::sqrt(x) : 0.0; });
}

ComplexMatrix polar_unitary(const ComplexMatrix& c) {
  if (!c.is_square()) throw Error(ErrorCode::kShape, "polar_unitary needs a square matrix");
  const std::size_t n = c.rows();
  // C = X S Y^dagger; W = Y X^dagger gives tr(W C) = tr(S).
  const auto eig = hermitian_eig(c.adjoint() * c);
  const double smax = std::sqrt(std::max(eig.values.empty() ? 0.0 : eig.values[0], 0.0));
  const double cutoff = 1e-12 * std::max(smax, 1e-300);

  std::vector<ComplexVector> xs;
  std::vector<ComplexVector> ys;
  for (std::size_t k = 0; k < n; ++k) {
    const double s = std::sqrt(std::max(eig.values[k], 0.0));
    if (s <= cutoff) break;
    ComplexVector y = eig.vectors.column(k);
    ComplexVector x = c * std::span<const Complex>(y);
    for (auto& z : x) z /= s;
    // Re-orthogonalize against earlier left vectors to absorb rounding.
    for (const auto& prev : xs) {
      const Complex proj = inner(prev, x);
      for (std::size_t i = 0; i < n; ++i) x[i] -= proj * prev[i];
    }
    const double len = norm(x);
    for (auto& z : x) z /= len;
    xs.push_back(std::move(x));
    ys.push_back(std::move(y));
  }
  for (std::size_t k = ys.size(); k < n; ++k) ys.push_back(eig.vectors.column(k));
  // Complete the left singular vectors with Gram-Schmidt on the standard basis.
  for (std::size_t e = 0; e < n && xs.size() < n; ++e) {
    ComplexVector x(n, 0.0);
    x[e] = 1.0;
    for (const auto& prev : xs) {
      const Complex proj = inner(prev, x);
      for (std::size_t i = 0; i < n; ++i) x[i] -= proj * prev[i];
    }
    const double len = norm(x);
    if (len < 1e-8) continue;
    for (auto& z : x) z /= len;
    xs.push_back(std::move(x));
  }
  ComplexMatrix w(n, n);
  for (std::size_t k = 0; k < n; ++k) w += ComplexMatrix::outer(ys[k], xs[k]);
  return w;
}

double fidelity(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
  require_square_match(rho, sigma, "fidelity");
  const ComplexMatrix root = psd_sqrt(rho);
  const ComplexMatrix inner_form = hermitian_part(root * sigma * root);
  double f = 0.0;
  for (double x : hermitian_eigenvalues(inner_form)) {
    if (x > kSqrtCutoff) f += std::sqrt(x);
  }
  return std::clamp(f, 0.0, 1.0);
}

double fidelity(const DensityOperator& rho, const DensityOperator& sigma) {
  return fidelity(rho.matrix(), sigma.matrix());
}

double pure_fidelity(std::span<const Complex> phi, std::span<const Complex> psi) {
  return std::abs(inner(phi, psi));
}

double trace_norm(const ComplexMatrix& hermitian) {
  double s = 0.0;
  for (double x : hermitian_eigenvalues(hermitian)) s += std::abs(x);
  return s;
}

double trace_distance(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
  require_square_match(rho, sigma, "trace distance");
  return std::clamp(0.5 * trace_norm(hermitian_part(rho - sigma)), 0.0, 1.0);
}

double trace_distance(const DensityOperator& rho, const DensityOperator& sigma) {
  return trace_distance(rho.matrix(), sigma.matrix());
}

double shannon_entropy(std::span<const double> probabilities) {
  double h = 0.0;
  for (double p : probabilities) {
    if (p >= kEntropyCutoff) h -= p * std::log2(p);
  }
  return h;
}

double entropy_of(const ComplexMatrix& hermitian) {
  const auto ev = hermitian_eigenvalues(hermitian);
  return std::max(0.0, shannon_entropy(ev));
}

double von_neumann_entropy(const DensityOperator& rho) { return entropy_of(rho.matrix()); }

double marginal_entropy(const DensityOperator& rho, const std::vector<std::size_t>& registers) {
  const auto regs = normalized_registers(rho.shape(), registers, true);
  if (regs.empty()) return 0.0;
  if (regs.size() == rho.shape().size()) return von_neumann_entropy(rho);
  return entropy_of(partial_trace(rho.matrix(), rho.shape(), regs));
}

double conditional_entropy(const DensityOperator& rho, const std::vector<std::size_t>& target,
                           const std::vector<std::size_t>& given) {
  std::vector<std::size_t> joint = target;
  joint.insert(joint.end(), given.begin(), given.end());
  return marginal_entropy(rho, joint) - marginal_entropy(rho, given);
}

double mutual_information(const DensityOperator& rho, const std::vector<std::size_t>& part_a,
                          const std::vector<std::size_t>& part_b) {
  const auto a = normalized_registers(rho.shape(), part_a, false);
  const auto b = normalized_registers(rho.shape(), part_b, false);
  for (std::size_t r : a) {
    if (std::find(b.begin(), b.end(), r) != b.end()) {
      throw Error(ErrorCode::kShape, "mutual information: parts overlap");
    }
  }
  if (a.size() + b.size() != rho.shape().size()) {
    throw Error(ErrorCode::kShape, "mutual information: parts must cover every register");
  }
  return marginal_entropy(rho, a) + marginal_entropy(rho, b) - von_neumann_entropy(rho);
}

MinEntropyResult min_entropy_cq(const DensityOperator& rho, std::size_t x_register) {
  const RegisterShape& shape = rho.shape();
  if (x_register >= shape.size()) {
    throw Error(ErrorCode::kShape, "min-entropy: X register out of range");
  }
  const std::vector<std::size_t> xs{x_register};
  const auto rest = complement(shape, xs);
  const auto xo = offsets(shape, xs);
  const auto ro = offsets(shape, rest);
  const ComplexMatrix& m = rho.matrix();
  const std::size_t dx = xo.size();
  const std::size_t dr = ro.size();

  for (std::size_t x = 0; x < dx; ++x) {
    for (std::size_t x2 = 0; x2 < dx; ++x2) {
      if (x == x2) continue;
      for (std::size_t r = 0; r < dr; ++r) {
        for (std::size_t c = 0; c < dr; ++c) {
          if (std::abs(m(xo[x] + ro[r], xo[x2] + ro[c])) > kStateTolerance) {
            throw Error(ErrorCode::kNotClassicalQuantum,
                        "min-entropy: state is not block-diagonal in the X basis");
          }
        }
      }
    }
  }

  std::vector<ComplexMatrix> blocks(dx, ComplexMatrix(dr, dr));
  for (std::size_t x = 0; x < dx; ++x) {
    for (std::size_t r = 0; r < dr; ++r) {
      for (std::size_t c = 0; c < dr; ++c) blocks[x](r, c) = m(xo[x] + ro[r], xo[x] + ro[c]);
    }
  }

  MinEntropyResult out;
  if (dx == 1) {
    out.guessing_probability = 1.0;
  } else if (dx == 2) {
    out.guessing_probability = 0.5 * (1.0 + trace_norm(hermitian_part(blocks[0] - blocks[1])));
  } else {
    ComplexMatrix avg(dr, dr);
    for (const auto& b : blocks) avg += b;
    const ComplexMatrix inv_root = spectral_apply(hermitian_eig(hermitian_part(avg)), [](double v) {
      return v > kEntropyCutoff ? 1.0 / std::sqrt(v) : 0.0;
    });
    double p = 0.0;
    for (const auto& b : blocks) {
      const ComplexMatrix e = inv_root * b * inv_root;
      p += (b * e).trace().real();
    }
    out.guessing_probability = p;
    out.exact = false;
  }
  out.guessing_probability = std::clamp(out.guessing_probability, 0.0, 1.0);
  out.value = out.guessing_probability > 0.0 ? -std::log2(out.guessing_probability) : 0.0;
  if (out.value < 0.0) out.value = 0.0;
  return out;
}

DensityOperator classical_quantum(std::span<const double> weights,
                                  const std::vector<DensityOperator>& blocks) {
  if (weights.size() != blocks.size() || blocks.empty()) {
    throw Error(ErrorCode::kShape, "classical_quantum: weight/block count mismatch");
  }
  const std::size_t d = blocks[0].dim();
  const std::size_t k = blocks.size();
  ComplexMatrix m(k * d, k * d);
  for (std::size_t x = 0; x < k; ++x) {
    if (weights[x] < 0.0) throw Error(ErrorCode::kParam, "classical_quantum: negative weight");
    if (blocks[x].shape() != blocks[0].shape()) {
      throw Error(ErrorCode::kShape, "classical_quantum: blocks differ in shape");
    }
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) m(x * d + r, x * d + c) = weights[x] * blocks[x].matrix()(r, c);
    }
  }
  return DensityOperator::from_psd_construction(
      std::move(m), RegisterShape::single(k).concat(blocks[0].shape()));
}

}  // namespace nlgames
