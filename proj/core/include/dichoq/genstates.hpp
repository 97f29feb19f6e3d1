// Copyright 2026 The dichoq Authors
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

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

#include "dichoq/frames.hpp"
#include "dichoq/matcore.hpp"

namespace dichoq {

struct Seed {
  std::uint64_t value;
};

/// xoshiro256** seeded through splitmix64. The stream is fully determined by the seed:
///   splitmix64: z += 0x9E3779B97F4A7C15; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9;
///               z = (z ^ (z >> 27)) * 0x94D049BB133111EB; z ^= z >> 31
///   uniform():  (next() >> 11) * 2^-53, in [0, 1)
///   complex_normal(): Box-Muller on u1 = 1 - uniform(), u2 = uniform();
///               r = sqrt(-2 ln u1), returns (r cos 2 pi u2, r sin 2 pi u2)
/// Not shareable across threads; use one generator per thread.
class Rng {
 public:
  explicit Rng(Seed seed) noexcept;

  std::uint64_t next() noexcept;
  double uniform() noexcept;
  Complex complex_normal() noexcept;

 private:
  std::array<std::uint64_t, 4> s_;
};

/// |psi><psi| for a normalized complex-Gaussian vector. Throws DimensionMismatch for dim < 2.
DensityMatrix random_pure(std::size_t dim, Rng& rng);
DensityMatrix random_pure(std::size_t dim, Seed seed);

/// G G^dagger / Tr(G G^dagger) for complex-Gaussian G (Hilbert-Schmidt measure).
DensityMatrix random_mixed(std::size_t dim, Rng& rng);
DensityMatrix random_mixed(std::size_t dim, Seed seed);

struct ProductState {
  DensityMatrix state;
  DensityMatrix first;
  DensityMatrix second;
};
/// A (x) B with A, B drawn from random_mixed, in that order.
ProductState random_product(std::size_t n, std::size_t m, Rng& rng);
ProductState random_product(std::size_t n, std::size_t m, Seed seed);

/// (G + G^dagger) / 2 for complex-Gaussian G; any dim >= 1.
HermitianMatrix random_hermitian(std::size_t dim, Rng& rng);

/// Uniformly distributed rotation from a normalized Gaussian quaternion.
Rotation random_rotation(Rng& rng);

}  // namespace dichoq
