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

#include "nlgames/random.h"

#include <cmath>

namespace nlgames {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng make_stream(std::uint64_t seed, std::uint64_t index) {
  return Rng(splitmix64(splitmix64(seed) + index));
}

ComplexVector random_gaussian_vector(std::size_t n, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexVector v(n);
  for (auto& z : v) {
    const double re = normal(rng);
    const double im = normal(rng);
    z = Complex(re, im);
  }
  return v;
}

ComplexVector random_unit_vector(std::size_t n, Rng& rng) {
  ComplexVector v = random_gaussian_vector(n, rng);
  const double len = norm(v);
  for (auto& z : v) z /= len;
  return v;
}

ComplexMatrix random_unitary(std::size_t n, Rng& rng) {
  ComplexMatrix u(n, n);
  std::vector<ComplexVector> cols;
  while (cols.size() < n) {
    ComplexVector v = random_gaussian_vector(n, rng);
    for (const auto& prev : cols) {
      const Complex proj = inner(prev, v);
      for (std::size_t i = 0; i < n; ++i) v[i] -= proj * prev[i];
    }
    const double len = norm(v);
    if (len < 1e-10) continue;
    for (auto& z : v) z /= len;
    cols.push_back(std::move(v));
  }
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < n; ++r) u(r, c) = cols[c][r];
  }
  return u;
}

DensityOperator random_density(const RegisterShape& shape, std::size_t rank, Rng& rng) {
  const std::size_t d = shape.total();
  ComplexMatrix m(d, d);
  for (std::size_t k = 0; k < rank; ++k) {
    const ComplexVector g = random_gaussian_vector(d, rng);
    m += ComplexMatrix::outer(g, g);
  }
  m *= 1.0 / m.trace().real();
  return DensityOperator::from_psd_construction(std::move(m), shape);
}

DensityOperator random_pure_density(const RegisterShape& shape, Rng& rng) {
  const ComplexVector v = random_unit_vector(shape.total(), rng);
  return DensityOperator::from_psd_construction(ComplexMatrix::outer(v, v), shape);
}

}  // namespace nlgames
