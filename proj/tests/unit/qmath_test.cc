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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "nlgames/error.h"
#include "nlgames/random.h"
#include "test_util.h"

namespace nlgames {
namespace {

using testing::diag_state;
using testing::pure_projector;

const double kH = 1.0 / std::sqrt(2.0);

ComplexMatrix pauli_x() { return ComplexMatrix(2, 2, {0.0, 1.0, 1.0, 0.0}); }

DensityOperator bell_state() {
  return DensityOperator::from_pure(PureState({kH, 0.0, 0.0, kH}, RegisterShape({2, 2})));
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorCode::kIo;
}

TEST(Tensor, identities) {
  EXPECT_LT(max_abs_diff(tensor(ComplexMatrix::identity(2), ComplexMatrix::identity(2)),
                         ComplexMatrix::identity(4)),
            0.0 + 1e-15);
}

TEST(Tensor, basis_projectors) {
  const std::vector<double> p0{1, 0}, p1{0, 1}, expected{0, 1, 0, 0};
  EXPECT_EQ(max_abs_diff(tensor(ComplexMatrix::diagonal(p0), ComplexMatrix::diagonal(p1)),
                         ComplexMatrix::diagonal(expected)),
            0.0);
}

TEST(Tensor, xx_flips_both_qubits) {
  const ComplexVector zero_zero{1.0, 0.0, 0.0, 0.0};
  const ComplexVector out = tensor(pauli_x(), pauli_x()) * zero_zero;
  EXPECT_EQ(out, (ComplexVector{0.0, 0.0, 0.0, 1.0}));
}

TEST(PartialTrace, bell_marginal_is_maximally_mixed) {
  const DensityOperator r = partial_trace(bell_state(), {0});
  EXPECT_LT(max_abs_diff(r.matrix(), ComplexMatrix::identity(2) * Complex(0.5)), 1e-15);
  EXPECT_EQ(r.shape().dims, (std::vector<std::size_t>{2}));
}

TEST(PartialTrace, product_factors) {
  Rng rng = make_stream(1, 0);
  const DensityOperator a = random_density(RegisterShape::single(3), 3, rng);
  const DensityOperator b = random_density(RegisterShape::single(2), 2, rng);
  const DensityOperator ab = tensor(a, b);
  EXPECT_LT(max_abs_diff(partial_trace(ab, {0}).matrix(), a.matrix()), 1e-14);
  EXPECT_LT(max_abs_diff(partial_trace(ab, {1}).matrix(), b.matrix()), 1e-14);
}

TEST(PartialTrace, keep_all_is_identity) {
  Rng rng = make_stream(1, 1);
  const DensityOperator r = random_density(RegisterShape({2, 3}), 6, rng);
  EXPECT_EQ(max_abs_diff(partial_trace(r, {0, 1}).matrix(), r.matrix()), 0.0);
}

TEST(PartialTrace, middle_register_matches_index_sum) {
  Rng rng = make_stream(1, 2);
  const DensityOperator r = random_density(RegisterShape({2, 3, 2}), 5, rng);
  const DensityOperator kept = partial_trace(r, {0, 2});
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      Complex s = 0.0;
      const std::size_t a = i / 2, c = i % 2, a2 = j / 2, c2 = j % 2;
      for (std::size_t b = 0; b < 3; ++b) s += r.matrix()((a * 3 + b) * 2 + c, (a2 * 3 + b) * 2 + c2);
      EXPECT_LT(std::abs(kept.matrix()(i, j) - s), 1e-14);
    }
  }
}

TEST(PartialTrace, preserves_trace_and_positivity) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    Rng rng = make_stream(2, s);
    const DensityOperator r = random_density(RegisterShape({2, 2, 3}), 4, rng);
    for (const auto& keep : std::vector<std::vector<std::size_t>>{{0}, {1, 2}, {0, 2}}) {
      const DensityOperator p = partial_trace(r, keep);
      EXPECT_NEAR(p.matrix().trace().real(), 1.0, 1e-12);
      EXPECT_GT(testing::oracle_eigenvalues(p.matrix()).minCoeff(), -1e-12);
    }
  }
}

TEST(PartialTrace, invalid_register_is_shape_error) {
  EXPECT_EQ(code_of([] { partial_trace(bell_state(), {2}); }), ErrorCode::kShape);
  EXPECT_EQ(code_of([] { partial_trace(bell_state(), {}); }), ErrorCode::kShape);
}

TEST(ReducedState, matches_partial_trace_of_projector) {
  Rng rng = make_stream(3, 0);
  const RegisterShape shape({2, 3, 2});
  const ComplexVector psi = random_unit_vector(12, rng);
  const DensityOperator full = DensityOperator::from_pure(PureState(psi, shape));
  for (const auto& keep : std::vector<std::vector<std::size_t>>{{0, 1}, {1}, {1, 2}, {0, 2}}) {
    EXPECT_LT(max_abs_diff(reduced_state(psi, shape, keep), partial_trace(full, keep).matrix()),
              1e-14);
  }
}

TEST(HermitianEig, diagonal) {
  const std::vector<double> d{3, 1, 2};
  const auto eig = hermitian_eig(ComplexMatrix::diagonal(d));
  EXPECT_EQ(eig.values, (std::vector<double>{3, 2, 1}));
}

TEST(HermitianEig, pauli_x) {
  const auto eig = hermitian_eig(pauli_x());
  EXPECT_NEAR(eig.values[0], 1.0, 1e-14);
  EXPECT_NEAR(eig.values[1], -1.0, 1e-14);
  const ComplexVector plus{kH, kH}, minus{kH, -kH};
  EXPECT_NEAR(std::abs(inner(eig.vectors.column(0), plus)), 1.0, 1e-12);
  EXPECT_NEAR(std::abs(inner(eig.vectors.column(1), minus)), 1.0, 1e-12);
}

TEST(HermitianEig, identity) {
  for (double v : hermitian_eig(ComplexMatrix::identity(5)).values) EXPECT_EQ(v, 1.0);
}

TEST(HermitianEig, random_reconstruction_and_oracle) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    Rng rng = make_stream(4, s);
    const std::size_t n = 2 + 3 * s;
    ComplexMatrix g(n, n, random_gaussian_vector(n * n, rng));
    const ComplexMatrix h = hermitian_part(g);
    const auto eig = hermitian_eig(h);
    ComplexMatrix rebuilt = spectral_apply(eig, [](double v) { return v; });
    EXPECT_LT(max_abs_diff(rebuilt, h), 1e-8);
    EXPECT_LT(max_abs_diff(eig.vectors.adjoint() * eig.vectors, ComplexMatrix::identity(n)),
              1e-8);
    const auto oracle = testing::oracle_eigenvalues(h);
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(eig.values[i], oracle(n - 1 - i), 1e-9);
  }
}

TEST(HermitianEig, rejects_non_hermitian) {
  ComplexMatrix m(2, 2, {0.0, 1.0, 0.0, 0.0});
  EXPECT_EQ(code_of([&] { hermitian_eig(m); }), ErrorCode::kNotHermitian);
}

TEST(HermitianEig, degenerate_spectrum) {
  Rng rng = make_stream(4, 99);
  const ComplexMatrix u = random_unitary(6, rng);
  const std::vector<double> d{2, 2, 2, -1, -1, 0};
  const ComplexMatrix h = u * ComplexMatrix::diagonal(d) * u.adjoint();
  const auto eig = hermitian_eig(hermitian_part(h));
  EXPECT_LT(max_abs_diff(spectral_apply(eig, [](double v) { return v; }), h), 1e-10);
}

TEST(PolarUnitary, attains_trace_norm) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    Rng rng = make_stream(5, s);
    const std::size_t n = 1 + s % 5;
    ComplexMatrix c(n, n, random_gaussian_vector(n * n, rng));
    if (s % 3 == 0) c = c * ComplexMatrix::diagonal(std::vector<double>(n, 0.0));  // rank 0
    if (s % 3 == 1 && n > 1) {
      ComplexMatrix r(n, n);
      r(0, 0) = 1.0;
      c = c * r;  // rank 1
    }
    const ComplexMatrix w = polar_unitary(c);
    EXPECT_LT(max_abs_diff(w.adjoint() * w, ComplexMatrix::identity(n)), 1e-10);
    const double tn = testing::oracle_sqrt(testing::to_eigen(c.adjoint() * c)).trace().real();
    EXPECT_NEAR((w * c).trace().real(), tn, 1e-9);
    EXPECT_NEAR((w * c).trace().imag(), 0.0, 1e-9);
  }
}

TEST(Fidelity, identical_states) {
  Rng rng = make_stream(6, 0);
  const DensityOperator r = random_density(RegisterShape::single(4), 2, rng);
  EXPECT_NEAR(fidelity(r, r), 1.0, 1e-8);
}

TEST(Fidelity, orthogonal_states) {
  EXPECT_NEAR(fidelity(diag_state({1, 0}), diag_state({0, 1})), 0.0, 1e-12);
}

TEST(Fidelity, zero_and_plus) {
  const DensityOperator plus(pure_projector({kH, kH}));
  EXPECT_NEAR(fidelity(diag_state({1, 0}), plus), 1.0 / std::sqrt(2.0), 1e-12);
}

TEST(Fidelity, symmetric_and_matches_oracle) {
  for (std::uint64_t s = 0; s < 30; ++s) {
    Rng rng = make_stream(6, s + 1);
    const std::size_t d = 2 + s % 7;
    const DensityOperator a = random_density(RegisterShape::single(d), 1 + s % d, rng);
    const DensityOperator b = random_density(RegisterShape::single(d), 1 + (s / 2) % d, rng);
    const double f = fidelity(a, b);
    EXPECT_NEAR(f, fidelity(b, a), 1e-8);
    EXPECT_NEAR(f, testing::oracle_fidelity(a.matrix(), b.matrix()), 1e-7);
  }
}

TEST(Fidelity, pure_states_match_overlap) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    Rng rng = make_stream(7, s);
    const std::size_t d = 2 + s % 6;
    const ComplexVector u = random_unit_vector(d, rng);
    const ComplexVector v = random_unit_vector(d, rng);
    EXPECT_NEAR(fidelity(DensityOperator(pure_projector(u)), DensityOperator(pure_projector(v))),
                std::abs(inner(u, v)), 1e-8);
    EXPECT_NEAR(pure_fidelity(u, v), std::abs(inner(u, v)), 1e-15);
  }
}

TEST(Fidelity, dimension_mismatch) {
  EXPECT_EQ(code_of([] { fidelity(diag_state({1, 0}), diag_state({1, 0, 0})); }),
            ErrorCode::kShape);
}

TEST(TraceDistance, examples) {
  const DensityOperator mixed = DensityOperator::maximally_mixed(2);
  EXPECT_NEAR(trace_distance(mixed, mixed), 0.0, 1e-15);
  EXPECT_NEAR(trace_distance(diag_state({1, 0}), diag_state({0, 1})), 1.0, 1e-15);
  EXPECT_NEAR(trace_distance(mixed, diag_state({1, 0})), 0.5, 1e-15);
}

TEST(TraceDistance, matches_oracle) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    Rng rng = make_stream(8, s);
    const std::size_t d = 2 + s % 6;
    const DensityOperator a = random_density(RegisterShape::single(d), d, rng);
    const DensityOperator b = random_density(RegisterShape::single(d), 1, rng);
    EXPECT_NEAR(trace_distance(a, b), testing::oracle_trace_distance(a.matrix(), b.matrix()),
                1e-10);
  }
}

TEST(Entropy, examples) {
  Rng rng = make_stream(9, 0);
  EXPECT_NEAR(von_neumann_entropy(random_pure_density(RegisterShape::single(3), rng)), 0.0, 1e-9);
  EXPECT_NEAR(von_neumann_entropy(DensityOperator::maximally_mixed(2)), 1.0, 1e-12);
  // h(1/4) = -(3/4) log2(3/4) - (1/4) log2(1/4)
  const double h = -0.75 * std::log2(0.75) - 0.25 * std::log2(0.25);
  EXPECT_NEAR(von_neumann_entropy(diag_state({0.75, 0.25})), h, 1e-12);
  EXPECT_NEAR(h, 0.8112781244591328, 1e-15);
}

TEST(Entropy, bounded_and_matches_oracle) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    Rng rng = make_stream(9, s + 1);
    const std::size_t d = 2 + s % 7;
    const DensityOperator r = random_density(RegisterShape::single(d), 1 + s % d, rng);
    const double h = von_neumann_entropy(r);
    EXPECT_GE(h, -1e-8);
    EXPECT_LE(h, std::log2(static_cast<double>(d)) + 1e-8);
    EXPECT_NEAR(h, testing::oracle_entropy(r.matrix()), 1e-9);
  }
}

TEST(MutualInformation, examples) {
  Rng rng = make_stream(10, 0);
  const DensityOperator a = random_density(RegisterShape::single(2), 2, rng);
  const DensityOperator b = random_density(RegisterShape::single(3), 3, rng);
  EXPECT_NEAR(mutual_information(tensor(a, b), {0}, {1}), 0.0, 1e-8);
  EXPECT_NEAR(mutual_information(bell_state(), {0}, {1}), 2.0, 1e-10);
  const DensityOperator correlated(ComplexMatrix::diagonal(std::vector<double>{0.5, 0, 0, 0.5}),
                                   RegisterShape({2, 2}));
  EXPECT_NEAR(mutual_information(correlated, {0}, {1}), 1.0, 1e-12);
}

TEST(MutualInformation, overlapping_parts) {
  EXPECT_EQ(code_of([] { mutual_information(bell_state(), {0}, {0, 1}); }), ErrorCode::kShape);
}

TEST(MutualInformation, nonnegative_on_random_states) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    Rng rng = make_stream(10, s + 1);
    const DensityOperator r = random_density(RegisterShape({2, 3}), 1 + s % 6, rng);
    EXPECT_GE(mutual_information(r, {0}, {1}), -1e-8);
  }
}

DensityOperator binary_cq(const DensityOperator& r0, const DensityOperator& r1) {
  const double w[2] = {0.5, 0.5};
  return classical_quantum(w, {r0, r1});
}

TEST(MinEntropy, identical_states) {
  const DensityOperator r = diag_state({0.3, 0.7});
  const auto h = min_entropy_cq(binary_cq(r, r), 0);
  EXPECT_NEAR(h.value, 1.0, 1e-12);
  EXPECT_TRUE(h.exact);
}

TEST(MinEntropy, orthogonal_states) {
  EXPECT_NEAR(min_entropy_cq(binary_cq(diag_state({1, 0}), diag_state({0, 1})), 0).value, 0.0,
              1e-12);
}

TEST(MinEntropy, zero_versus_plus) {
  const DensityOperator plus(pure_projector({kH, kH}));
  const auto h = min_entropy_cq(binary_cq(diag_state({1, 0}), plus), 0);
  EXPECT_NEAR(h.value, -std::log2(0.5 + std::sqrt(2.0) / 4.0), 1e-10);
  EXPECT_NEAR(h.value, 0.22844669683638807, 1e-10);
  EXPECT_NEAR(h.guessing_probability, 0.5 + std::sqrt(2.0) / 4.0, 1e-10);
}

TEST(MinEntropy, x_register_last) {
  const DensityOperator plus(pure_projector({kH, kH}));
  const DensityOperator x_first = binary_cq(diag_state({1, 0}), plus);
  // Move X to the second register: rho = sum_x rho_x (x) |x><x|.
  ComplexMatrix swapped(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      swapped((i % 2) * 2 + i / 2, (j % 2) * 2 + j / 2) = x_first.matrix()(i, j);
  const auto h = min_entropy_cq(DensityOperator(swapped, RegisterShape({2, 2})), 1);
  EXPECT_NEAR(h.value, 0.22844669683638807, 1e-10);
}

TEST(MinEntropy, pretty_good_mode_for_larger_alphabets) {
  const double w[3] = {1.0 / 3, 1.0 / 3, 1.0 / 3};
  const DensityOperator r = classical_quantum(
      w, {diag_state({1, 0, 0}), diag_state({0, 1, 0}), diag_state({0, 0, 1})});
  const auto h = min_entropy_cq(r, 0);
  EXPECT_FALSE(h.exact);
  EXPECT_NEAR(h.value, 0.0, 1e-10);
}

TEST(MinEntropy, rejects_non_cq) {
  EXPECT_EQ(code_of([] { min_entropy_cq(bell_state(), 0); }), ErrorCode::kNotClassicalQuantum);
}

TEST(DensityOperator, validation) {
  EXPECT_EQ(code_of([] { DensityOperator(ComplexMatrix::diagonal(std::vector<double>{0.5, 0.4})); }),
            ErrorCode::kNormalization);
  EXPECT_EQ(code_of([] { DensityOperator(ComplexMatrix(2, 2, {0.5, 1.0, 0.0, 0.5})); }),
            ErrorCode::kNotHermitian);
  EXPECT_THROW(DensityOperator(ComplexMatrix::diagonal(std::vector<double>{1.5, -0.5})), Error);
  EXPECT_EQ(code_of([] { PureState({1.0, 1.0}, RegisterShape::single(2)); }),
            ErrorCode::kNormalization);
}

}  // namespace
}  // namespace nlgames
