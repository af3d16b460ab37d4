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

#include "nlgames/linalg.h"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "nlgames/error.h"
#include "nlgames/random.h"
#include "test_util.h"

namespace nlgames {
namespace {

TEST(ComplexMatrix, rejects_wrong_entry_count) {
  try {
    ComplexMatrix(2, 2, std::vector<Complex>(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kShape);
  }
}

TEST(ComplexMatrix, rejects_non_finite) {
  std::vector<Complex> entries(4, 1.0);
  entries[2] = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(ComplexMatrix(2, 2, entries), Error);
}

TEST(ComplexMatrix, product_matches_eigen) {
  Rng rng = make_stream(3, 0);
  const ComplexMatrix a = random_unitary(5, rng);
  ComplexMatrix b(5, 3, random_gaussian_vector(15, rng));
  const ComplexMatrix ab = a * b;
  const testing::EigenMatrix oracle = testing::to_eigen(a) * testing::to_eigen(b);
  EXPECT_LT(max_abs_diff(ab, testing::from_eigen(oracle)), 1e-12);
}

TEST(ComplexMatrix, adjoint_and_trace) {
  ComplexMatrix m(2, 2, {{1, 2}, {3, 4}, {5, 6}, {7, 8}});
  EXPECT_EQ(m.adjoint()(0, 1), Complex(5, -6));
  EXPECT_EQ(m.transpose()(0, 1), Complex(5, 6));
  EXPECT_EQ(m.trace(), Complex(8, 10));
  EXPECT_FALSE(is_hermitian(m, 1e-9));
  EXPECT_TRUE(is_hermitian(hermitian_part(m), 1e-12));
}

TEST(Kron, vector_order) {
  const ComplexVector a{1.0, 2.0};
  const ComplexVector b{3.0, 5.0};
  EXPECT_EQ(kron(a, b), (ComplexVector{3.0, 5.0, 6.0, 10.0}));
}

TEST(Reshape, coefficient_matrix) {
  const ComplexVector v{1.0, 2.0, 3.0, 4.0, 5.0, 6.0};
  const ComplexMatrix m = reshape(v, 2, 3);
  EXPECT_EQ(m(1, 0), Complex(4.0));
  EXPECT_THROW(reshape(v, 4, 2), Error);
}

TEST(Random, unitary_is_unitary) {
  Rng rng = make_stream(11, 4);
  const ComplexMatrix u = random_unitary(6, rng);
  EXPECT_LT(max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(6)), 1e-12);
}

TEST(Random, streams_are_reproducible) {
  Rng a = make_stream(5, 9);
  Rng b = make_stream(5, 9);
  Rng c = make_stream(5, 10);
  const auto x = a();
  EXPECT_EQ(x, b());
  EXPECT_NE(x, c());
}

}  // namespace
}  // namespace nlgames
