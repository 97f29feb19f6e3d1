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

#include "dichoq/spectra.hpp"

#include <algorithm>
#include <cmath>

namespace dichoq {

double CharPoly::evaluate(double lambda) const noexcept {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lambda + *it;
  return acc;
}

CharPoly char_poly(const HermitianMatrix& m) {
  const std::size_t n = m.dim();
  const auto& a = m.matrix();
  // monic[k] is the coefficient of lambda^k in det(lambda I - A).
  std::vector<double> monic(n + 1, 0.0);
  monic[n] = 1.0;
  ComplexMatrix aux(n);
  for (std::size_t k = 1; k <= n; ++k) {
    aux = a * aux;
    for (std::size_t i = 0; i < n; ++i) aux(i, i) += monic[n - k + 1];
    monic[n - k] = -(a * aux).trace().real() / static_cast<double>(k);
  }
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  for (double& c : monic) c *= sign;
  return CharPoly(std::move(monic));
}

CharPoly char_poly(const DensityMatrix& rho) { return char_poly(rho.hermitian()); }

EigenProbability eigen_probability(const DensityMatrix& rho) { return rho.spectrum(); }

ReductionSpectra reduction_spectra(const DensityMatrix& rho, const Factorization& f) {
  return {reduce_rho1(rho, f).spectrum(), reduce_rho2(rho, f).spectrum()};
}

std::array<double, 2> qubit_spectrum_from_determinant(double det) {
  const double root = std::sqrt(std::max(0.0, 1.0 - 4.0 * det));
  return {0.5 * (1.0 + root), 0.5 * (1.0 - root)};
}

InequalityReport det_bounds_check(const HermitianMatrix& rho, const Factorization& f) {
  if (f.n() != 2) throw BadFactorization("determinant bounds need a two-dimensional first factor");
  if (rho.dim() != f.total()) throw BadFactorization("matrix dimension does not match factorization");

  const auto traces = trace_blocks(rho.matrix(), f);
  const double tr11 = traces(0, 0).real();
  const double tr22 = traces(1, 1).real();
  const double off = (traces(0, 1) * traces(1, 0)).real();
  const double det1 = determinant(make_hermitian(traces));

  InequalityReport report;
  report.add_lower_bound("det_rho1_lower", det1, 0.0);
  report.add_upper_bound("det_rho1_upper", det1, 0.25);
  report.add_lower_bound("block_traces_lower", tr11 * tr22, off);
  report.add_lower_bound("block_traces_upper", off + 0.25, tr11 * tr22);
  report.set_diagnostic("abs_tr_R12", std::abs(traces(0, 1)));
  if (f.m() == 2) {
    const double det2 = determinant(make_hermitian(sum_diagonal_blocks(rho.matrix(), f)));
    report.add_lower_bound("det_rho2_lower", det2, 0.0);
    report.add_upper_bound("det_rho2_upper", det2, 0.25);
  }
  return report;
}

InequalityReport det_bounds_check(const DensityMatrix& rho, const Factorization& f) {
  return det_bounds_check(rho.hermitian(), f);
}

}  // namespace dichoq
