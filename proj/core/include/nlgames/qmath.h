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

#ifndef NLGAMES_QMATH_H_
#define NLGAMES_QMATH_H_

#include <cstddef>
#include <vector>

#include "nlgames/linalg.h"

namespace nlgames {

// Local dimensions of an ordered list of registers. The last register is the
// fastest-varying index of the ambient space.
struct RegisterShape {
  std::vector<std::size_t> dims;

  RegisterShape() = default;
  explicit RegisterShape(std::vector<std::size_t> d);
  static RegisterShape single(std::size_t dim) { return RegisterShape({dim}); }

  std::size_t total() const;
  std::size_t size() const { return dims.size(); }
  // Shape made of the listed registers in their original order.
  RegisterShape subset(const std::vector<std::size_t>& registers) const;
  RegisterShape concat(const RegisterShape& other) const;

  friend bool operator==(const RegisterShape&, const RegisterShape&) = default;
};

inline constexpr double kStateTolerance = 1e-9;

class PureState {
 public:
  // Throws kShape when the amplitude count does not match the shape and
  // kNormalization when the squared norm is more than 1e-9 away from 1.
  PureState(ComplexVector amplitudes, RegisterShape shape);

  const ComplexVector& amplitudes() const { return amplitudes_; }
  const RegisterShape& shape() const { return shape_; }
  std::size_t dim() const { return amplitudes_.size(); }

 private:
  ComplexVector amplitudes_;
  RegisterShape shape_;
};

// Hermitian, PSD, unit-trace operator with register structure. Construction
// validates all three properties at 1e-9.
class DensityOperator {
 public:
  DensityOperator(ComplexMatrix matrix, RegisterShape shape);
  explicit DensityOperator(ComplexMatrix matrix);

  // For operators that are PSD by construction (mixtures of projectors,
  // partial traces, tensor products). Only Hermiticity and trace are checked.
  static DensityOperator from_psd_construction(ComplexMatrix matrix, RegisterShape shape);

  static DensityOperator from_pure(const PureState& state);
  static DensityOperator maximally_mixed(std::size_t dim);

  const ComplexMatrix& matrix() const { return matrix_; }
  const RegisterShape& shape() const { return shape_; }
  std::size_t dim() const { return matrix_.rows(); }

 private:
  struct Trusted {};
  DensityOperator(Trusted, ComplexMatrix matrix, RegisterShape shape);

  ComplexMatrix matrix_;
  RegisterShape shape_;
};

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
DensityOperator tensor(const DensityOperator& a, const DensityOperator& b);

// Traces out every register not in `keep`. The result carries the kept
// registers in their original order.
DensityOperator partial_trace(const DensityOperator& op,
                              const std::vector<std::size_t>& keep);
ComplexMatrix partial_trace(const ComplexMatrix& op, const RegisterShape& shape,
                            const std::vector<std::size_t>& keep);
// Tr_rest |psi><psi| without forming the full projector.
ComplexMatrix reduced_state(std::span<const Complex> psi, const RegisterShape& shape,
                            const std::vector<std::size_t>& keep);

struct EigenDecomposition {
  std::vector<double> values;  // descending
  ComplexMatrix vectors;       // column i pairs with values[i]
};

// Cyclic Jacobi sweeps; stops when the off-diagonal Frobenius mass drops
// below 1e-12 (relative to the matrix norm when that exceeds 1).
EigenDecomposition hermitian_eig(const ComplexMatrix& m);
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

// f(M) = V f(Lambda) V^dagger for Hermitian M.
template <typename Fn>
ComplexMatrix spectral_apply(const EigenDecomposition& eig, Fn&& fn) {
  const std::size_t n = eig.values.size();
  ComplexMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const double f = fn(eig.values[k]);
    if (f == 0.0) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const Complex vik = eig.vectors(i, k) * f;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += vik * std::conj(eig.vectors(j, k));
    }
  }
  return out;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m);

// Unitary W with tr(W C) = ||C||_1, i.e. the conjugate of the polar factor.
ComplexMatrix polar_unitary(const ComplexMatrix& c);

double fidelity(const DensityOperator& rho, const DensityOperator& sigma);
double fidelity(const ComplexMatrix& rho, const ComplexMatrix& sigma);
// |<phi|psi>|
double pure_fidelity(std::span<const Complex> phi, std::span<const Complex> psi);

double trace_distance(const DensityOperator& rho, const DensityOperator& sigma);
double trace_distance(const ComplexMatrix& rho, const ComplexMatrix& sigma);
double trace_norm(const ComplexMatrix& hermitian);

// Entropies are in bits. Eigenvalues below 1e-12 contribute exactly zero.
inline constexpr double kEntropyCutoff = 1e-12;
double shannon_entropy(std::span<const double> probabilities);
double entropy_of(const ComplexMatrix& hermitian);
double von_neumann_entropy(const DensityOperator& rho);
// H of the marginal on `registers`.
double marginal_entropy(const DensityOperator& rho, const std::vector<std::size_t>& registers);
// H(target | given) = H(target, given) - H(given).
double conditional_entropy(const DensityOperator& rho, const std::vector<std::size_t>& target,
                           const std::vector<std::size_t>& given);
// I(A:B) for a disjoint partition of rho's registers.
double mutual_information(const DensityOperator& rho, const std::vector<std::size_t>& part_a,
                          const std::vector<std::size_t>& part_b);

struct MinEntropyResult {
  double value = 0.0;                // bits
  double guessing_probability = 1.0;
  // False when |X| > 2: the pretty-good measurement lower-bounds the guessing
  // probability, so `value` is then an upper bound on H_min.
  bool exact = true;
};

// H_min(X|rest) of a state classical on register `x_register`.
MinEntropyResult min_entropy_cq(const DensityOperator& rho, std::size_t x_register);

// Block-diagonal  sum_x weights[x] |x><x| (x) blocks[x]  with X as the first register.
DensityOperator classical_quantum(std::span<const double> weights,
                                  const std::vector<DensityOperator>& blocks);

}  // namespace nlgames

#endif  // NLGAMES_QMATH_H_
