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
#include <memory>
#include <vector>

#include "dichoq/matcore.hpp"

namespace dichoq {

// Indices are zero-based in the C++ API. JSON documents and the CLI use one-based indices.

/// A (j, k) plane with j < k < dim.
class PlaneIndex {
 public:
  /// Throws IndexOutOfRange unless j < k < dim.
  PlaneIndex(std::size_t j, std::size_t k, std::size_t dim);

  std::size_t j() const noexcept { return j_; }
  std::size_t k() const noexcept { return k_; }

  friend bool operator==(const PlaneIndex&, const PlaneIndex&) = default;
  friend auto operator<=>(const PlaneIndex&, const PlaneIndex&) = default;

 private:
  std::size_t j_;
  std::size_t k_;
};

/// All planes of dimension dim, ordered lexicographically by (j, k).
std::vector<PlaneIndex> planes_of(std::size_t dim);

/// Position of a plane in the lexicographic order of planes_of(dim).
std::size_t plane_ordinal(const PlaneIndex& plane, std::size_t dim) noexcept;

enum class Axis { X = 1, Y = 2, Z = 3 };
inline constexpr std::array<Axis, 3> kAxes = {Axis::X, Axis::Y, Axis::Z};
constexpr std::size_t axis_index(Axis a) noexcept { return static_cast<std::size_t>(a) - 1; }

/// Matrix unit E_jk. Throws IndexOutOfRange.
ComplexMatrix weyl_unit(std::size_t dim, std::size_t j, std::size_t k);

/// S0..S3 of the u(2) subalgebra acting on a plane, as full dim x dim matrices.
std::array<HermitianMatrix, 4> su2_generators(std::size_t dim, const PlaneIndex& plane);

/// 3x3 special orthogonal matrix.
class Rotation {
 public:
  using Rows = std::array<std::array<double, 3>, 3>;

  static Rotation identity() noexcept;
  /// Throws NotOrthogonal if |R^T R - I| > 1e-12 elementwise, NotSpecial if det R != +1.
  static Rotation from_rows(const Rows& rows);
  /// Right-handed rotation by angle (radians) about a nonzero axis.
  static Rotation about_axis(const std::array<double, 3>& axis, double angle);

  const Rows& rows() const noexcept { return rows_; }
  double operator()(std::size_t r, std::size_t c) const noexcept { return rows_[r][c]; }
  bool is_identity() const noexcept;

  friend bool operator==(const Rotation&, const Rotation&) = default;

 private:
  explicit Rotation(const Rows& rows) : rows_(rows) {}
  Rows rows_;
};

struct AxisAngle {
  std::array<double, 3> axis;
  double angle;
};

/// Axis and angle in [0, pi]. At angle pi the axis is read off the column of (R + I)/2
/// with the largest diagonal entry.
AxisAngle axis_angle(const Rotation& r);

/// 2x2 SU(2) element U = exp(-i angle n.sigma/2), so that U (x.sigma) U^dagger = (R x).sigma.
ComplexMatrix su2_lift(const Rotation& r);

/// su2_lift embedded in the (j, k) plane of a dim x dim identity.
ComplexMatrix embedded_lift(const Rotation& r, std::size_t dim, const PlaneIndex& plane);

struct FrameCount {
  std::size_t planes;
  std::size_t independent_params;
};
/// (N(N-1)/2, N^2 - 1). Throws DimensionMismatch for N < 2.
FrameCount frame_count_check(std::size_t dim);

/// Rank-one projectors S0 + sum_b R(b, a) S_b for every plane and axis. The projectors only
/// touch rows and columns j and k of their plane, so they are stored as 2x2 blocks.
class ProjectorFrame {
 public:
  std::size_t dim() const noexcept { return dim_; }
  const Rotation& rotation() const noexcept { return rotation_; }
  bool is_canonical() const noexcept { return rotation_.is_identity(); }
  const std::vector<PlaneIndex>& planes() const noexcept { return planes_; }

  /// 2x2 block of the projector for planes()[ordinal] and axis a.
  const ComplexMatrix& block(std::size_t ordinal, Axis a) const noexcept {
    return blocks_[ordinal * 3 + axis_index(a)];
  }

  /// Full dim x dim projector.
  HermitianMatrix projector(const PlaneIndex& plane, Axis a) const;

  /// Tr(m P) for the projector of planes()[ordinal] and axis a, read off the plane block.
  double expectation(const ComplexMatrix& m, std::size_t ordinal, Axis a) const;

 private:
  friend ProjectorFrame build_frame(std::size_t dim, const Rotation& rotation);
  ProjectorFrame(std::size_t dim, Rotation rotation);

  std::size_t dim_;
  Rotation rotation_;
  std::vector<PlaneIndex> planes_;
  std::vector<ComplexMatrix> blocks_;
};

/// Throws DimensionMismatch for dim < 2.
ProjectorFrame build_frame(std::size_t dim, const Rotation& rotation = Rotation::identity());

/// Shared, insert-once cache of frames keyed by (dim, rotation). Safe for concurrent use.
std::shared_ptr<const ProjectorFrame> cached_frame(std::size_t dim,
                                                   const Rotation& rotation = Rotation::identity());

}  // namespace dichoq
