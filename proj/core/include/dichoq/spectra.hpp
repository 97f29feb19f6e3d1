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
#include <span>
#include <vector>

#include "dichoq/inequality.hpp"
#include "dichoq/matcore.hpp"
#include "dichoq/reduction.hpp"

namespace dichoq {

/// det(rho - lambda I) = sum_k c_k lambda^k, with c_N = (-1)^N and c_0 = det rho.
class CharPoly {
 public:
  explicit CharPoly(std::vector<double> coefficients) : c_(std::move(coefficients)) {}

  std::size_t dim() const noexcept { return c_.size() - 1; }
  /// c_0 .. c_N.
  std::span<const double> coefficients() const noexcept { return c_; }
  double operator[](std::size_t k) const noexcept { return c_[k]; }
  double evaluate(double lambda) const noexcept;

 private:
  std::vector<double> c_;
};

/// Faddeev-LeVerrier recursion on trace powers; independent of the eigensolver.
CharPoly char_poly(const HermitianMatrix& m);
CharPoly char_poly(const DensityMatrix& rho);

EigenProbability eigen_probability(const DensityMatrix& rho);

struct ReductionSpectra {
  /// Spectrum of rho1, size n.
  EigenProbability first;
  /// Spectrum of rho2, size m.
  EigenProbability second;
};
ReductionSpectra reduction_spectra(const DensityMatrix& rho, const Factorization& f);

/// Eigenvalues 1/2 (1 +- sqrt(1 - 4 det)) of a 2x2 trace-one matrix, larger first.
std::array<double, 2> qubit_spectrum_from_determinant(double det);

/// 0 <= det rho1 <= 1/4 and both block-trace inequalities for n == 2, plus
/// 0 <= det rho2 <= 1/4 when m == 2. Accepts Hermitian trace-one input that need not be
/// positive. Throws BadFactorization unless n == 2.
InequalityReport det_bounds_check(const HermitianMatrix& rho, const Factorization& f);
InequalityReport det_bounds_check(const DensityMatrix& rho, const Factorization& f);

}  // namespace dichoq
