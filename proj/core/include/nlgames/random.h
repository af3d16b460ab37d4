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

#ifndef NLGAMES_RANDOM_H_
#define NLGAMES_RANDOM_H_

#include <cstdint>
#include <random>

#include "nlgames/linalg.h"
#include "nlgames/qmath.h"

namespace nlgames {

using Rng = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x);

// Independent stream for (seed, index): restarts and trials each get one so
// results do not depend on scheduling.
Rng make_stream(std::uint64_t seed, std::uint64_t index);

ComplexVector random_gaussian_vector(std::size_t n, Rng& rng);
// Normalized complex Gaussian vector (Haar-distributed pure state).
ComplexVector random_unit_vector(std::size_t n, Rng& rng);
// Gram-Schmidt orthonormalized complex Gaussian matrix.
ComplexMatrix random_unitary(std::size_t n, Rng& rng);
// G G^dagger / tr for a dim x rank Ginibre matrix G.
DensityOperator random_density(const RegisterShape& shape, std::size_t rank, Rng& rng);
DensityOperator random_pure_density(const RegisterShape& shape, Rng& rng);

}  // namespace nlgames

#endif  // NLGAMES_RANDOM_H_
