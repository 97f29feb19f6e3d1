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

#include "dichoq/frames.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>

namespace dichoq {

PlaneIndex::PlaneIndex(std::size_t j, std::size_t k, std::size_t dim) : j_(j), k_(k) {
  if (!(j < k && k < dim)) {
    std::ostringstream os;
    os << "plane (" << j << ", " << k << ") requires j < k < " << dim;
    throw IndexOutOfRange(os.str());
  }
}

std::vector<PlaneIndex> planes_of(std::size_t dim) {
  std::vector<PlaneIndex> out;
  if (dim < 2) return out;
  out.reserve(dim * (dim - 1) / 2);
  for (std::size_t j = 0; j + 1 < dim; ++j)
    for (std::size_t k = j + 1; k < dim; ++k) out.emplace_back(j, k, dim);
  return out;
}

std::size_t plane_ordinal(const PlaneIndex& plane, std::size_t dim) noexcept {
  // Rows 0..j-1 contribute (dim-1) + (dim-2) + ... + (dim-j) planes.
  const std::size_t j = plane.j();
  return j * dim - j * (j + 1) / 2 + (plane.k() - j - 1);
}

ComplexMatrix weyl_unit(std::size_t dim, std::size_t j, std::size_t k) {
  if (j >= dim || k >= dim) {
    std::ostringstream os;
    os << "Weyl unit (" << j << ", " << k << ") out of range for dimension " << dim;
    throw IndexOutOfRange(os.str());
  }
  ComplexMatrix e(dim);
  e(j, k) = 1.0;
  return e;
}

std::array<HermitianMatrix, 4> su2_generators(std::size_t dim, const PlaneIndex& plane) {
  const auto ejj = weyl_unit(dim, plane.j(), plane.j());
  const auto ekk = weyl_unit(dim, plane.k(), plane.k());
  const auto ejk = weyl_unit(dim, plane.j(), plane.k());
  const auto ekj = weyl_unit(dim, plane.k(), plane.j());
  const Complex half = 0.5;
  const Complex minus_half_i{0.0, -0.5};
  return {make_hermitian(half * (ejj + ekk)), make_hermitian(half * (ejk + ekj)),
          make_hermitian(minus_half_i * (ejk - ekj)), make_hermitian(half * (ejj - ekk))};
}

Rotation Rotation::identity() noexcept {
  return Rotation(Rows{{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}}});
}

Rotation Rotation::from_rows(const Rows& rows) {
  double worst = 0.0;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) {
      if (!std::isfinite(rows[r][c])) throw NotOrthogonal("rotation has non-finite entries");
      double dot = 0.0;
      for (std::size_t i = 0; i < 3; ++i) dot += rows[i][r] * rows[i][c];
      worst = std::max(worst, std::abs(dot - (r == c ? 1.0 : 0.0)));
    }
  if (worst > 1e-12) {
    std::ostringstream os;
    os << "rotation is not orthogonal (max |R^T R - I| = " << worst << ")";
    throw NotOrthogonal(os.str());
  }
  const double det = rows[0][0] * (rows[1][1] * rows[2][2] - rows[1][2] * rows[2][1]) -
                     rows[0][1] * (rows[1][0] * rows[2][2] - rows[1][2] * rows[2][0]) +
                     rows[0][2] * (rows[1][0] * rows[2][1] - rows[1][1] * rows[2][0]);
  if (det < 0.0) throw NotSpecial("rotation has determinant -1");
  return Rotation(rows);
}

Rotation Rotation::about_axis(const std::array<double, 3>& axis, double angle) {
  const double len = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
  if (!(len > 0.0)) throw InvalidParameter("rotation axis must be nonzero");
  const double x = axis[0] / len, y = axis[1] / len, z = axis[2] / len;
  const double c = std::cos(angle), s = std::sin(angle), v = 1.0 - c;
  return Rotation(Rows{{{c + x * x * v, x * y * v - z * s, x * z * v + y * s},
                        {y * x * v + z * s, c + y * y * v, y * z * v - x * s},
                        {z * x * v - y * s, z * y * v + x * s, c + z * z * v}}});
}

bool Rotation::is_identity() const noexcept { return *this == identity(); }

AxisAngle axis_angle(const Rotation& r) {
  const std::array<double, 3> axial = {r(2, 1) - r(1, 2), r(0, 2) - r(2, 0), r(1, 0) - r(0, 1)};
  const double axial_norm =
      std::sqrt(axial[0] * axial[0] + axial[1] * axial[1] + axial[2] * axial[2]);
  const double cos_angle = std::clamp((r(0, 0) + r(1, 1) + r(2, 2) - 1.0) / 2.0, -1.0, 1.0);
  const double angle = std::atan2(axial_norm / 2.0, cos_angle);

  if (cos_angle >= 0.0) {
    if (axial_norm == 0.0) return {{0.0, 0.0, 1.0}, 0.0};
    return {{axial[0] / axial_norm, axial[1] / axial_norm, axial[2] / axial_norm}, angle};
  }

  // Near pi the antisymmetric part vanishes; recover n n^T from the symmetric part instead.
  std::array<std::array<double, 3>, 3> outer{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      outer[i][j] = (0.5 * (r(i, j) + r(j, i)) - (i == j ? cos_angle : 0.0)) / (1.0 - cos_angle);
  std::size_t col = 0;
  for (std::size_t i = 1; i < 3; ++i)
    if (outer[i][i] > outer[col][col]) col = i;
  std::array<double, 3> n = {outer[0][col], outer[1][col], outer[2][col]};
  const double len = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
  for (double& x : n) x /= len;
  if (n[0] * axial[0] + n[1] * axial[1] + n[2] * axial[2] < 0.0)
    for (double& x : n) x = -x;
  return {n, angle};
}

ComplexMatrix su2_lift(const Rotation& r) {
  const auto [n, angle] = axis_angle(r);
  const double c = std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  const Complex minus_is{0.0, -s};
  ComplexMatrix u(2);
  u(0, 0) = c + minus_is * n[2];
  u(0, 1) = minus_is * Complex{n[0], -n[1]};
  u(1, 0) = minus_is * Complex{n[0], n[1]};
  u(1, 1) = c - minus_is * n[2];
  return u;
}

ComplexMatrix embedded_lift(const Rotation& r, std::size_t dim, const PlaneIndex& plane) {
  const auto u = su2_lift(r);
  auto out = ComplexMatrix::identity(dim);
  const std::size_t idx[2] = {plane.j(), plane.k()};
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) out(idx[a], idx[b]) = u(a, b);
  return out;
}

FrameCount frame_count_check(std::size_t dim) {
  if (dim < 2) throw DimensionMismatch("frames need dimension >= 2");
  return {dim * (dim - 1) / 2, dim * dim - 1};
}

namespace {

// I/2 + sum_b x_b sigma_b / 2 for a unit vector x.
ComplexMatrix bloch_projector(double x, double y, double z) {
  ComplexMatrix p(2);
  p(0, 0) = 0.5 * (1.0 + z);
  p(1, 1) = 0.5 * (1.0 - z);
  p(0, 1) = 0.5 * Complex{x, -y};
  p(1, 0) = 0.5 * Complex{x, y};
  return p;
}

}  // namespace

ProjectorFrame::ProjectorFrame(std::size_t dim, Rotation rotation)
    : dim_(dim), rotation_(rotation), planes_(planes_of(dim)) {
  std::array<ComplexMatrix, 3> axis_blocks;
  for (Axis a : kAxes) {
    const std::size_t col = axis_index(a);
    axis_blocks[col] = bloch_projector(rotation_(0, col), rotation_(1, col), rotation_(2, col));
  }
  blocks_.reserve(planes_.size() * 3);
  for (std::size_t i = 0; i < planes_.size(); ++i)
    for (const auto& b : axis_blocks) blocks_.push_back(b);
}

HermitianMatrix ProjectorFrame::projector(const PlaneIndex& plane, Axis a) const {
  if (plane.k() >= dim_) throw IndexOutOfRange("plane outside frame dimension");
  const auto& b = block(plane_ordinal(plane, dim_), a);
  ComplexMatrix p(dim_);
  const std::size_t idx[2] = {plane.j(), plane.k()};
  for (std::size_t x = 0; x < 2; ++x)
    for (std::size_t y = 0; y < 2; ++y) p(idx[x], idx[y]) = b(x, y);
  return make_hermitian(std::move(p));
}

double ProjectorFrame::expectation(const ComplexMatrix& m, std::size_t ordinal, Axis a) const {
  const auto& b = block(ordinal, a);
  const auto& plane = planes_[ordinal];
  const std::size_t idx[2] = {plane.j(), plane.k()};
  Complex t = 0.0;
  for (std::size_t x = 0; x < 2; ++x)
    for (std::size_t y = 0; y < 2; ++y) t += m(idx[x], idx[y]) * b(y, x);
  return t.real();
}

ProjectorFrame build_frame(std::size_t dim, const Rotation& rotation) {
  if (dim < 2) throw DimensionMismatch("frames need dimension >= 2");
  return ProjectorFrame(dim, rotation);
}

std::shared_ptr<const ProjectorFrame> cached_frame(std::size_t dim, const Rotation& rotation) {
  using Key = std::pair<std::size_t, Rotation::Rows>;
  static std::shared_mutex mutex;
  static std::map<Key, std::shared_ptr<const ProjectorFrame>> cache;

  const Key key{dim, rotation.rows()};
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto frame = std::make_shared<const ProjectorFrame>(build_frame(dim, rotation));
  std::unique_lock lock(mutex);
  return cache.try_emplace(key, std::move(frame)).first->second;
}

}  // namespace dichoq
