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

#include "dichoq/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "dichoq/codec.hpp"

namespace dichoq {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    std::ostringstream os;
    os << "probability " << p << " outside [0, 1]";
    throw OutOfRange(os.str());
  }
}

double x_log_x(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

// x^q y^(1-q) with 0^q y^(1-q) = 0 and x^q 0^(1-q) = 0 (q < 1) or +inf (q > 1).
double tsallis_term(double x, double y, double q) {
  if (x == 0.0) return 0.0;
  if (y == 0.0) return q < 1.0 ? 0.0 : kInf;
  return std::pow(x, q) * std::pow(y, 1.0 - q);
}

// ln sqrt(1/4 - u^2) + v ln((1/2 + w)/(1/2 - w)); the template of the qubit forms.
double qubit_form(double radical, double weight, double ratio) {
  return 0.5 * std::log(0.25 - radical * radical) +
         weight * std::log((0.5 + ratio) / (0.5 - ratio));
}

std::string format_q(double q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

std::string plane_suffix(const PlaneIndex& p) {
  return ",j=" + std::to_string(p.j() + 1) + ",k=" + std::to_string(p.k() + 1) + "]";
}

void add_nonnegative(InequalityReport& report, std::string name, double value) {
  if (std::isinf(value) && value > 0.0) {
    report.add({std::move(name), kInf, 0.0, kInf, true});
  } else {
    report.add_lower_bound(std::move(name), value, 0.0);
  }
}

double axis_probability(const DichotomicTable& t, const PlaneIndex& plane, Axis a) {
  switch (a) {
    case Axis::X:
      return t.plane(plane).p1;
    case Axis::Y:
      return t.plane(plane).p2;
    case Axis::Z:
      return t.diagonal(plane.j());
  }
  return 0.0;
}

}  // namespace

EntropyParams EntropyParams::make(double q) {
  if (!(q > 0.0 && q <= kMaxQ) || q == 1.0) {
    std::ostringstream os;
    os << "Tsallis q must lie in (0, 1) or (1, " << kMaxQ << "], got " << q;
    throw InvalidParameter(os.str());
  }
  return EntropyParams(q);
}

double dichotomic_entropy(double p) {
  require_probability(p);
  return -(x_log_x(p) + x_log_x(1.0 - p));
}

double vn_inequality_lhs(double p) {
  require_probability(p);
  if (p == 0.0 || p == 1.0) return 0.0;
  return -(p * std::log(p / (1.0 - p)) + std::log(1.0 - p));
}

double tsallis_relative_entropy(double pa, double pb, double q) {
  require_probability(pa);
  require_probability(pb);
  const double sum = tsallis_term(pa, pb, q) + tsallis_term(1.0 - pa, 1.0 - pb, q);
  if (std::isinf(sum)) return kInf;
  return (sum - 1.0) / (q - 1.0);
}

double dichotomic_kl(double pa, double pb) {
  require_probability(pa);
  require_probability(pb);
  auto term = [](double x, double y) {
    if (x == 0.0) return 0.0;
    if (y == 0.0) return kInf;
    return x * std::log(x / y);
  };
  return term(pa, pb) + term(1.0 - pa, 1.0 - pb);
}

double qubit_vn_real_form(double re_rho12) {
  if (std::abs(re_rho12) >= 0.5) return 0.0;
  return qubit_form(re_rho12, re_rho12, re_rho12);
}

double qubit_vn_imag_form(double im_rho12) {
  if (std::abs(im_rho12) >= 0.5) return 0.0;
  return qubit_form(im_rho12, im_rho12, im_rho12);
}

double qubit_vn_imag_form_mixed(double re_rho12, double im_rho12) {
  if (std::abs(re_rho12) >= 0.5 || std::abs(im_rho12) >= 0.5)
    return std::numeric_limits<double>::quiet_NaN();
  return qubit_form(im_rho12, im_rho12, re_rho12);
}

double qubit_tsallis_xy_form(double re_rho12, double im_rho12, double q) {
  const double a = std::clamp(0.5 + re_rho12, 0.0, 1.0);
  const double b = std::clamp(0.5 - im_rho12, 0.0, 1.0);
  const double sum = tsallis_term(a, b, q) + tsallis_term(1.0 - a, 1.0 - b, q);
  if (std::isinf(sum)) return kInf;
  return (sum - 1.0) / (q - 1.0);
}

InequalityReport vn_inequality_suite(const DensityMatrix& rho) {
  const auto table = encode(rho);
  InequalityReport report;
  int degenerate = 0;
  for (const auto& pp : table.planes()) {
    for (Axis a : kAxes) {
      const double p = axis_probability(table, pp.plane, a);
      if (p == 0.0 || p == 1.0) ++degenerate;
      report.add_lower_bound("vn[a=" + std::to_string(static_cast<int>(a)) + plane_suffix(pp.plane),
                             vn_inequality_lhs(p), 0.0);
    }
  }
  report.set_diagnostic("degenerate_entries", degenerate);

  if (rho.dim() == 2) {
    const double x = rho(0, 1).real();
    const double y = rho(0, 1).imag();
    const double real_form = qubit_vn_real_form(x);
    const double imag_form = qubit_vn_imag_form(y);
    report.add_upper_bound("qubit_vn_real", real_form, 0.0);
    report.add_upper_bound("qubit_vn_imag", imag_form, 0.0);
    const auto& pp = table.planes()[0];
    report.set_diagnostic("qubit_vn_real_pspace_error", std::abs(real_form + vn_inequality_lhs(pp.p1)));
    report.set_diagnostic("qubit_vn_imag_pspace_error", std::abs(imag_form + vn_inequality_lhs(pp.p2)));
    const double mixed = qubit_vn_imag_form_mixed(x, y);
    if (!std::isnan(mixed)) {
      report.set_diagnostic("qubit_vn_imag_mixed_lhs", mixed);
      report.set_diagnostic("qubit_vn_imag_mixed_minus_consistent", mixed - imag_form);
    }
  }
  return report;
}

InequalityReport tsallis_inequality(const DensityMatrix& rho, Axis a, Axis b,
                                    const EntropyParams& params) {
  if (a == b) throw InvalidParameter("Tsallis inequality needs two different axes");
  const auto table = encode(rho);
  const std::string prefix = "tsallis[q=" + format_q(params.q()) +
                             ",a=" + std::to_string(static_cast<int>(a)) +
                             ",b=" + std::to_string(static_cast<int>(b));
  InequalityReport report;
  int zero_support = 0;
  for (const auto& pp : table.planes()) {
    const double value = tsallis_relative_entropy(axis_probability(table, pp.plane, a),
                                                  axis_probability(table, pp.plane, b), params.q());
    if (std::isinf(value)) ++zero_support;
    add_nonnegative(report, prefix + plane_suffix(pp.plane), value);
  }
  report.set_diagnostic("zero_support_entries", zero_support);
  return report;
}

InequalityReport reduced_state_inequalities(const DensityMatrix& rho, const Factorization& f,
                                            std::span<const EntropyParams> params) {
  if (f.n() != 2) throw BadFactorization("reduced-state inequalities need n == 2");
  const auto traces = trace_blocks(rho.matrix(), f);
  const double x = traces(0, 1).real();
  const double y = traces(0, 1).imag();
  InequalityReport report;
  report.add_upper_bound("reduced:qubit_vn_real", qubit_vn_real_form(x), 0.0);
  report.add_upper_bound("reduced:qubit_vn_imag", qubit_vn_imag_form(y), 0.0);
  for (const auto& p : params)
    add_nonnegative(report, "reduced:qubit_tsallis_xy[q=" + format_q(p.q()) + "]", qubit_tsallis_xy_form(x, y, p.q()));
  return report;
}

}  // namespace dichoq
