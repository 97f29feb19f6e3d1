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
#include <span>

#include "dichoq/frames.hpp"
#include "dichoq/inequality.hpp"
#include "dichoq/matcore.hpp"
#include "dichoq/reduction.hpp"

namespace dichoq {

/// Tsallis deformation q in (0, 1) or (1, kMaxQ].
class EntropyParams {
 public:
  static constexpr double kMaxQ = 10.0;
  /// Throws InvalidParameter.
  static EntropyParams make(double q);
  double q() const noexcept { return q_; }

 private:
  explicit EntropyParams(double q) : q_(q) {}
  double q_;
};

/// q values used by the inequality suites when none are given.
inline constexpr std::array<double, 3> kDefaultTsallisQ = {0.5, 2.0, 5.0};

/// -[p ln p + (1 - p) ln(1 - p)], natural log, 0 ln 0 = 0. Throws OutOfRange unless p in [0, 1].
double dichotomic_entropy(double p);

/// -[p ln(p / (1 - p)) + ln(1 - p)], the same quantity written as in the inequality; 0 at the
/// endpoints. Throws OutOfRange.
double vn_inequality_lhs(double p);

/// (q - 1)^-1 [pa^q pb^(1-q) + (1 - pa)^q (1 - pb)^(1-q) - 1] >= 0, with 0^q x^(1-q) = 0.
/// Returns +inf when pb is 0 or 1 against a pa that puts mass there and q > 1.
double tsallis_relative_entropy(double pa, double pb, double q);

/// Kullback-Leibler divergence of (pa, 1 - pa) from (pb, 1 - pb).
double dichotomic_kl(double pa, double pb);

/// Qubit matrix-element forms of the von Neumann inequality (each <= 0).
/// ln sqrt(1/4 - x^2) + x ln((1/2 + x)/(1/2 - x)) for x = Re rho_12.
double qubit_vn_real_form(double re_rho12);
/// Same template with y = Im rho_12 in both places.
double qubit_vn_imag_form(double im_rho12);
/// Variant with Im in the radical but Re in the logarithm; diagnostic only.
double qubit_vn_imag_form_mixed(double re_rho12, double im_rho12);
/// Tsallis relative entropy of (p1, 1 - p1) against (p2, 1 - p2) in terms of rho_12.
double qubit_tsallis_xy_form(double re_rho12, double im_rho12, double q);

/// One entry per plane and axis: the von Neumann form is >= 0. For dim 2 also the matrix-element
/// forms, with their agreement with the probability forms recorded in diagnostics.
InequalityReport vn_inequality_suite(const DensityMatrix& rho);

/// Per-plane Tsallis relative entropy between axes a and b. Throws InvalidParameter if a == b.
InequalityReport tsallis_inequality(const DensityMatrix& rho, Axis a, Axis b,
                                    const EntropyParams& params);

/// The matrix-element inequalities evaluated on rho1 built from block traces, for n == 2.
/// Throws BadFactorization.
InequalityReport reduced_state_inequalities(const DensityMatrix& rho, const Factorization& f,
                                            std::span<const EntropyParams> params);

}  // namespace dichoq
