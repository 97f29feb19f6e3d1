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

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "dichoq/frames.hpp"
#include "dichoq/inequality.hpp"
#include "dichoq/matcore.hpp"

namespace dichoq {

struct PlaneProbabilities {
  PlaneIndex plane;
  double p1;
  double p2;
};

/// The N^2 - 1 dichotomic probabilities of a state: p1, p2 per plane and p3 per row j < N - 1.
/// The z-axis probability of plane (j, k) does not depend on k, so it is stored once per row.
class DichotomicTable {
 public:
  /// Values may exceed [0, 1] by at most 1e-10 and are clamped; sum(p3) may exceed 1 by 1e-10.
  /// planes must contain every plane of dim exactly once, in any order.
  /// Throws InvalidTable.
  static DichotomicTable make(std::size_t dim, std::vector<double> p3,
                              std::vector<PlaneProbabilities> planes);

  std::size_t dim() const noexcept { return dim_; }
  std::span<const double> p3() const noexcept { return p3_; }
  /// Lexicographic by (j, k).
  std::span<const PlaneProbabilities> planes() const noexcept { return planes_; }

  /// rho_jj: p3[j] for j < dim - 1, and 1 - sum(p3) for the last row.
  double diagonal(std::size_t j) const noexcept;
  const PlaneProbabilities& plane(const PlaneIndex& p) const noexcept {
    return planes_[plane_ordinal(p, dim_)];
  }

  std::size_t parameter_count() const noexcept { return p3_.size() + 2 * planes_.size(); }

 private:
  DichotomicTable(std::size_t dim, std::vector<double> p3, std::vector<PlaneProbabilities> planes)
      : dim_(dim), p3_(std::move(p3)), planes_(std::move(planes)) {}

  std::size_t dim_;
  std::vector<double> p3_;
  std::vector<PlaneProbabilities> planes_;
};

struct PlaneTriple {
  PlaneIndex plane;
  double p1;
  double p2;
  double p3;
};

/// Per-plane probabilities against an arbitrary (possibly rotated) frame. Under a general
/// rotation the z-axis projector of plane (j, k) depends on k, so p3 is kept per plane.
class PlaneTable {
 public:
  PlaneTable(std::size_t dim, Rotation rotation, std::vector<PlaneTriple> entries)
      : dim_(dim), rotation_(rotation), entries_(std::move(entries)) {}

  std::size_t dim() const noexcept { return dim_; }
  const Rotation& rotation() const noexcept { return rotation_; }
  std::span<const PlaneTriple> entries() const noexcept { return entries_; }
  const PlaneTriple& entry(const PlaneIndex& p) const noexcept {
    return entries_[plane_ordinal(p, dim_)];
  }

  /// The row-keyed table, if every row's p3 agrees across its planes within tol.
  std::optional<DichotomicTable> to_dichotomic(double tol = 1e-12) const;

 private:
  std::size_t dim_;
  Rotation rotation_;
  std::vector<PlaneTriple> entries_;
};

/// p_a = Tr(rho Pi_a) against a canonical frame. Throws DimensionMismatch, or InvalidParameter
/// if the frame is rotated (use rotate_table).
DichotomicTable encode(const DensityMatrix& rho, const ProjectorFrame& frame);
/// encode against the cached canonical frame.
DichotomicTable encode(const DensityMatrix& rho);

/// Tr(m Pi_a) for every plane and axis of frame, without range checks or clamping.
PlaneTable encode_planes(const ComplexMatrix& m, const ProjectorFrame& frame);

/// Inverse map. Always Hermitian with unit diagonal sum; positivity is not implied and must be
/// checked with validate_density.
HermitianMatrix decode(const DichotomicTable& table);

struct AuxiliaryQubit {
  PlaneIndex plane;
  /// 2x2, trace one, Hermitian. Its (0, 1) entry is rho_jk.
  HermitianMatrix matrix;
  /// Diagnostic only; may be negative.
  double min_eigenvalue;
};

AuxiliaryQubit auxiliary_qubit(const DichotomicTable& table, const PlaneIndex& plane);

/// (p1 - 1/2)^2 + (p2 - 1/2)^2 + (p3 - 1/2)^2 <= 1/4. Throws DimensionMismatch unless dim == 2.
InequalityReport qubit_ball_check(const DichotomicTable& table);

/// Probabilities against the frame rotated by r. Throws DimensionMismatch.
PlaneTable rotate_table(const DensityMatrix& rho, const Rotation& r);

}  // namespace dichoq
