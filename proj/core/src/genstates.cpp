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

#include "dichoq/genstates.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace dichoq {

namespace {

std::uint64_t splitmix64(std::uint64_t& z) noexcept {
  z += 0x9E3779B97F4A7C15ULL;
  std::uint64_t x = z;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept { return (x << k) | (x >> (64 - k)); }

void require_dim(std::size_t dim) {
  if (dim < 2) throw DimensionMismatch("random states need dimension >= 2");
}

// Fills entries (j, k) for j <= k from f and mirrors them.
template <class F>
ComplexMatrix hermitian_from_upper(std::size_t dim, F&& f) {
  ComplexMatrix m(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    m(j, j) = f(j, j).real();
    for (std::size_t k = j + 1; k < dim; ++k) {
      m(j, k) = f(j, k);
      m(k, j) = std::conj(m(j, k));
    }
  }
  return m;
}

}  // namespace

Rng::Rng(Seed seed) noexcept {
  std::uint64_t z = seed.value;
  for (auto& word : s_) word = splitmix64(z);
}

std::uint64_t Rng::next() noexcept {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Rng::uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

Complex Rng::complex_normal() noexcept {
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double phase = 2.0 * std::numbers::pi * u2;
  return {r * std::cos(phase), r * std::sin(phase)};
}

DensityMatrix random_pure(std::size_t dim, Rng& rng) {
  require_dim(dim);
  std::vector<Complex> psi(dim);
  double norm2 = 0.0;
  for (auto& z : psi) {
    z = rng.complex_normal();
    norm2 += std::norm(z);
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& z : psi) z *= inv;
  auto m = hermitian_from_upper(dim, [&](std::size_t j, std::size_t k) {
    return psi[j] * std::conj(psi[k]);
  });
  return validate_density(make_hermitian(std::move(m)));
}

DensityMatrix random_pure(std::size_t dim, Seed seed) {
  Rng rng(seed);
  return random_pure(dim, rng);
}

DensityMatrix random_mixed(std::size_t dim, Rng& rng) {
  require_dim(dim);
  ComplexMatrix g(dim);
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t k = 0; k < dim; ++k) g(j, k) = rng.complex_normal();
  auto w = hermitian_from_upper(dim, [&](std::size_t j, std::size_t k) {
    Complex s = 0.0;
    for (std::size_t l = 0; l < dim; ++l) s += g(j, l) * std::conj(g(k, l));
    return s;
  });
  w *= 1.0 / w.trace().real();
  return validate_density(make_hermitian(std::move(w)));
}

DensityMatrix random_mixed(std::size_t dim, Seed seed) {
  Rng rng(seed);
  return random_mixed(dim, rng);
}

ProductState random_product(std::size_t n, std::size_t m, Rng& rng) {
  auto a = random_mixed(n, rng);
  auto b = random_mixed(m, rng);
  auto state = validate_density(make_hermitian(kron(a.matrix(), b.matrix())));
  return {std::move(state), std::move(a), std::move(b)};
}

ProductState random_product(std::size_t n, std::size_t m, Seed seed) {
  Rng rng(seed);
  return random_product(n, m, rng);
}

HermitianMatrix random_hermitian(std::size_t dim, Rng& rng) {
  ComplexMatrix g(dim);
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t k = 0; k < dim; ++k) g(j, k) = rng.complex_normal();
  auto h = hermitian_from_upper(dim, [&](std::size_t j, std::size_t k) {
    return 0.5 * (g(j, k) + std::conj(g(k, j)));
  });
  return make_hermitian(std::move(h));
}

Rotation random_rotation(Rng& rng) {
  const Complex a = rng.complex_normal();
  const Complex b = rng.complex_normal();
  const double len = std::sqrt(std::norm(a) + std::norm(b));
  const double w = a.real() / len, x = a.imag() / len, y = b.real() / len, z = b.imag() / len;
  return Rotation::from_rows({{{1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)},
                               {2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)},
                               {2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)}}});
}

}  // namespace dichoq
