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

#include "dichoq/codec.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace dichoq {

namespace {

constexpr double kRangeTol = 1e-10;

bool in_unit_range(double p) noexcept { return p >= -kRangeTol && p <= 1.0 + kRangeTol; }

double checked_probability(double p, const char* what) {
  if (!in_unit_range(p)) {
    std::ostringstream os;
    os << what << " probability " << p << " outside [0, 1]";
    throw InternalInvariantViolation(os.str());
  }
  return std::clamp(p, 0.0, 1.0);
}

}  // namespace

DichotomicTable DichotomicTable::make(std::size_t dim, std::vector<double> p3,
                                      std::vector<PlaneProbabilities> planes) {
  if (dim < 2) throw InvalidTable("table dimension must be >= 2");
  if (p3.size() != dim - 1) {
    std::ostringstream os;
    os << "expected " << dim - 1 << " p3 values for dimension " << dim << ", got " << p3.size();
    throw InvalidTable(os.str());
  }
  const std::size_t plane_count = dim * (dim - 1) / 2;
  if (planes.size() != plane_count) {
    std::ostringstream os;
    os << "expected " << plane_count << " planes for dimension " << dim << ", got "
       << planes.size();
    throw InvalidTable(os.str());
  }
  std::sort(planes.begin(), planes.end(),
            [](const auto& a, const auto& b) { return a.plane < b.plane; });
  for (std::size_t i = 0; i < planes.size(); ++i) {
    if (planes[i].plane.k() >= dim || (i > 0 && planes[i].plane == planes[i - 1].plane))
      throw InvalidTable("planes must list every (j, k) with j < k exactly once");
  }

  auto clamp_checked = [](double& p, const char* what) {
    if (!std::isfinite(p) || !in_unit_range(p)) {
      std::ostringstream os;
      os << what << " value " << p << " outside [0, 1]";
      throw InvalidTable(os.str());
    }
    p = std::clamp(p, 0.0, 1.0);
  };
  double diag_sum = 0.0;
  for (double& p : p3) {
    clamp_checked(p, "p3");
    diag_sum += p;
  }
  if (diag_sum > 1.0 + kRangeTol) {
    std::ostringstream os;
    os << "p3 values sum to " << diag_sum << " > 1";
    throw InvalidTable(os.str());
  }
  for (auto& pp : planes) {
    clamp_checked(pp.p1, "p1");
    clamp_checked(pp.p2, "p2");
  }
  return DichotomicTable(dim, std::move(p3), std::move(planes));
}

double DichotomicTable::diagonal(std::size_t j) const noexcept {
  if (j + 1 < dim_) return p3_[j];
  double s = 0.0;
  for (double p : p3_) s += p;
  return 1.0 - s;
}

std::optional<DichotomicTable> PlaneTable::to_dichotomic(double tol) const {
  std::vector<double> p3(dim_ - 1);
  std::vector<PlaneProbabilities> planes;
  planes.reserve(entries_.size());
  for (const auto& e : entries_) {
    if (e.plane.k() == e.plane.j() + 1) p3[e.plane.j()] = e.p3;
    planes.push_back({e.plane, e.p1, e.p2});
  }
  for (const auto& e : entries_)
    if (std::abs(e.p3 - p3[e.plane.j()]) > tol) return std::nullopt;
  try {
    return DichotomicTable::make(dim_, std::move(p3), std::move(planes));
  } catch (const InvalidTable&) {
    return std::nullopt;
  }
}

PlaneTable encode_planes(const ComplexMatrix& m, const ProjectorFrame& frame) {
  if (m.dim() != frame.dim()) {
    std::ostringstream os;
    os << "state dimension " << m.dim() << " does not match frame dimension " << frame.dim();
    throw DimensionMismatch(os.str());
  }
  std::vector<PlaneTriple> entries;
  entries.reserve(frame.planes().size());
  for (std::size_t i = 0; i < frame.planes().size(); ++i) {
    entries.push_back({frame.planes()[i], frame.expectation(m, i, Axis::X),
                       frame.expectation(m, i, Axis::Y), frame.expectation(m, i, Axis::Z)});
  }
  return PlaneTable(frame.dim(), frame.rotation(), std::move(entries));
}

DichotomicTable encode(const DensityMatrix& rho, const ProjectorFrame& frame) {
  if (!frame.is_canonical())
    throw InvalidParameter("encode expects a canonical frame; use rotate_table for rotated frames");
  const auto raw = encode_planes(rho.matrix(), frame);
  const std::size_t n = rho.dim();
  std::vector<double> p3(n - 1);
  std::vector<PlaneProbabilities> planes;
  planes.reserve(raw.entries().size());
  for (const auto& e : raw.entries()) {
    if (e.plane.k() == e.plane.j() + 1) p3[e.plane.j()] = checked_probability(e.p3, "p3");
    planes.push_back({e.plane, checked_probability(e.p1, "p1"), checked_probability(e.p2, "p2")});
  }
  return DichotomicTable::make(n, std::move(p3), std::move(planes));
}

DichotomicTable encode(const DensityMatrix& rho) { return encode(rho, *cached_frame(rho.dim())); }

AuxiliaryQubit auxiliary_qubit(const DichotomicTable& table, const PlaneIndex& plane) {
  if (plane.k() >= table.dim()) throw IndexOutOfRange("plane outside table dimension");
  const auto& pp = table.plane(plane);
  const double diag_sum = table.diagonal(plane.j()) + table.diagonal(plane.k());
  // rho^(jk) = S0 + alpha S1 + beta S2 restricted to the plane.
  const double alpha = 2.0 * pp.p1 - diag_sum;
  const double beta = 2.0 * pp.p2 - diag_sum;
  ComplexMatrix m(2);
  m(0, 0) = 0.5;
  m(1, 1) = 0.5;
  m(0, 1) = 0.5 * Complex{alpha, -beta};
  m(1, 0) = 0.5 * Complex{alpha, beta};
  const double min_eig = 0.5 - 0.5 * std::hypot(alpha, beta);
  return {plane, make_hermitian(std::move(m)), min_eig};
}

HermitianMatrix decode(const DichotomicTable& table) {
  const std::size_t n = table.dim();
  ComplexMatrix m(n);
  for (std::size_t j = 0; j < n; ++j) m(j, j) = table.diagonal(j);
  for (const auto& pp : table.planes()) {
    const auto aux = auxiliary_qubit(table, pp.plane);
    const Complex off = aux.matrix(0, 1);
    m(pp.plane.j(), pp.plane.k()) = off;
    m(pp.plane.k(), pp.plane.j()) = std::conj(off);
  }
  return make_hermitian(std::move(m));
}

InequalityReport qubit_ball_check(const DichotomicTable& table) {
  if (table.dim() != 2) throw DimensionMismatch("qubit_ball_check requires dimension 2");
  const auto& pp = table.planes()[0];
  const double d1 = pp.p1 - 0.5, d2 = pp.p2 - 0.5, d3 = table.p3()[0] - 0.5;
  InequalityReport report;
  report.add_upper_bound("qubit_ball", d1 * d1 + d2 * d2 + d3 * d3, 0.25);
  return report;
}

PlaneTable rotate_table(const DensityMatrix& rho, const Rotation& r) {
  const auto raw = encode_planes(rho.matrix(), *cached_frame(rho.dim(), r));
  std::vector<PlaneTriple> entries(raw.entries().begin(), raw.entries().end());
  for (auto& e : entries) {
    e.p1 = checked_probability(e.p1, "rotated p1");
    e.p2 = checked_probability(e.p2, "rotated p2");
    e.p3 = checked_probability(e.p3, "rotated p3");
  }
  return PlaneTable(raw.dim(), r, std::move(entries));
}

}  // namespace dichoq
