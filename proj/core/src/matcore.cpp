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

#include "dichoq/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace dichoq {

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), data_(std::move(entries)) {
  if (data_.size() != dim * dim) {
    std::ostringstream os;
    os << "expected " << dim * dim << " entries for dimension " << dim << ", got " << data_.size();
    throw DimensionMismatch(os.str());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

Complex ComplexMatrix::trace() const noexcept {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const noexcept {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

namespace {

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) {
    std::ostringstream os;
    os << "matrix dimensions differ: " << a.dim() << " vs " << b.dim();
    throw DimensionMismatch(os.str());
  }
}

}  // namespace

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_dim(*this, other);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_dim(*this, other);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) noexcept {
  for (auto& z : data_) z *= scale;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  require_same_dim(lhs, rhs);
  const std::size_t n = lhs.dim();
  ComplexMatrix out(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) {
      const Complex a = lhs(r, k);
      if (a == Complex{}) continue;
      for (std::size_t c = 0; c < n; ++c) out(r, c) += a * rhs(k, c);
    }
  return out;
}

ComplexMatrix operator*(Complex scale, ComplexMatrix m) { return m *= scale; }

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t n = a.dim();
  const std::size_t m = b.dim();
  ComplexMatrix out(n * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q < m; ++q) out(i * m + p, k * m + q) = a(i, k) * b(p, q);
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b);
  double worst = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
  return worst;
}

double hermiticity_deviation(const ComplexMatrix& m) noexcept {
  double worst = 0.0;
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = r; c < m.dim(); ++c)
      worst = std::max(worst, std::abs(m(r, c) - std::conj(m(c, r))));
  return worst;
}

HermitianMatrix make_hermitian(ComplexMatrix m) {
  if (m.dim() == 0) throw DimensionMismatch("matrix dimension must be positive");
  for (const auto& z : m.entries()) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw NotHermitian("matrix has non-finite entries", std::numeric_limits<double>::infinity());
  }
  const double dev = hermiticity_deviation(m);
  if (dev > kTolHermitian) {
    std::ostringstream os;
    os << "matrix is not Hermitian (max deviation " << dev << ")";
    throw NotHermitian(os.str(), dev);
  }
  const std::size_t n = m.dim();
  for (std::size_t r = 0; r < n; ++r) {
    m(r, r) = m(r, r).real();
    for (std::size_t c = r + 1; c < n; ++c) {
      const Complex avg = 0.5 * (m(r, c) + std::conj(m(c, r)));
      m(r, c) = avg;
      m(c, r) = std::conj(avg);
    }
  }
  return HermitianMatrix(std::move(m));
}

HermitianMatrix make_hermitian(std::size_t dim, std::span<const Complex> entries) {
  return make_hermitian(ComplexMatrix(dim, std::vector<Complex>(entries.begin(), entries.end())));
}

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c)
      if (r != c) s += std::norm(a(r, c));
  return std::sqrt(s);
}

// Annihilates a(p, q) with V = diag(1, conj(w)) * [[c, s], [-s, c]] acting on the (p, q) plane,
// where w is the phase of a(p, q). Updates a <- V^dagger a V and vectors <- vectors V.
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& vectors, std::size_t p, std::size_t q) {
  const Complex b = a(p, q);
  const double mag = std::abs(b);
  if (mag == 0.0) return;
  const Complex w = b / mag;
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double theta = (aqq - app) / (2.0 * mag);
  double t;
  if (std::isinf(theta * theta)) {
    t = 0.5 / theta;
  } else {
    t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const Complex vqp = -s * std::conj(w);
  const Complex vqq = c * std::conj(w);

  const std::size_t n = a.dim();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * c + akq * vqp;
    a(k, q) = akp * s + akq * vqq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = c * apk + std::conj(vqp) * aqk;
    a(q, k) = s * apk + std::conj(vqq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = app - t * mag;
  a(q, q) = aqq + t * mag;

  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = vectors(k, p);
    const Complex vkq = vectors(k, q);
    vectors(k, p) = vkp * c + vkq * vqp;
    vectors(k, q) = vkp * s + vkq * vqq;
  }
}

}  // namespace

EigenDecomposition eig_hermitian(const HermitianMatrix& m) {
  const std::size_t n = m.dim();
  ComplexMatrix a = m.matrix();
  ComplexMatrix vectors = ComplexMatrix::identity(n);
  const double threshold = 1e-14 * static_cast<double>(n) * a.frobenius_norm();

  int sweeps = 0;
  while (off_diagonal_norm(a) > threshold) {
    if (sweeps == kJacobiMaxSweeps) {
      std::ostringstream os;
      os << "Jacobi eigensolver did not converge after " << kJacobiMaxSweeps << " sweeps (N=" << n
         << ", off-diagonal norm " << off_diagonal_norm(a) << ")";
      throw ConvergenceFailure(os.str());
    }
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) jacobi_rotate(a, vectors, p, q);
    ++sweeps;
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x).real() > a(y, y).real();
  });

  EigenDecomposition out;
  out.values.reserve(n);
  out.vectors = ComplexMatrix(n);
  out.sweeps = sweeps;
  for (std::size_t c = 0; c < n; ++c) {
    out.values.push_back(a(order[c], order[c]).real());
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, c) = vectors(r, order[c]);
  }
  return out;
}

double determinant(const HermitianMatrix& m) {
  const auto eig = eig_hermitian(m);
  double det = 1.0;
  for (double v : eig.values) det *= v;
  return det;
}

Complex lu_determinant(const ComplexMatrix& m) {
  const std::size_t n = m.dim();
  ComplexMatrix lu = m;
  Complex det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    double best = std::abs(lu(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(lu(r, col)) > best) {
        best = std::abs(lu(r, col));
        pivot = r;
      }
    }
    if (best == 0.0) return 0.0;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(lu(pivot, c), lu(col, c));
      det = -det;
    }
    det *= lu(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      const Complex factor = lu(r, col) / lu(col, col);
      for (std::size_t c = col + 1; c < n; ++c) lu(r, c) -= factor * lu(col, c);
    }
  }
  return det;
}

EigenProbability EigenProbability::from_eigenvalues(std::vector<double> values) {
  std::stable_sort(values.begin(), values.end(), std::greater<>());
  double sum = 0.0;
  for (double v : values) {
    if (v < -kTolPsd || v > 1.0 + kTolPsd) {
      std::ostringstream os;
      os << "eigenvalue " << v << " outside [0, 1]";
      throw NotPositive(os.str(), values.empty() ? v : values.back());
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-10) {
    std::ostringstream os;
    os << "eigenvalues sum to " << sum;
    throw NotTraceOne(os.str(), 1.0 - sum);
  }
  for (double& v : values) v = std::clamp(v, 0.0, 1.0);
  return EigenProbability(std::move(values));
}

DensityVerdict check_density(const HermitianMatrix& m) {
  DensityVerdict v;
  v.trace_deficit = 1.0 - m.trace();
  v.trace_one = std::abs(v.trace_deficit) < kTolTrace;
  const auto eig = eig_hermitian(m);
  v.min_eigenvalue = eig.values.empty() ? 0.0 : eig.values.back();
  v.positive = v.min_eigenvalue >= -kTolPsd;
  return v;
}

DensityMatrix validate_density(const HermitianMatrix& m) {
  const double deficit = 1.0 - m.trace();
  if (!(std::abs(deficit) < kTolTrace)) {
    std::ostringstream os;
    os << "trace is " << m.trace() << ", expected 1";
    throw NotTraceOne(os.str(), deficit);
  }
  auto eig = eig_hermitian(m);
  const double min_eig = eig.values.back();
  if (min_eig < -kTolPsd) {
    std::ostringstream os;
    os << "matrix is not positive semidefinite (min eigenvalue " << min_eig << ")";
    throw NotPositive(os.str(), min_eig);
  }
  return DensityMatrix(m, EigenProbability::from_eigenvalues(std::move(eig.values)));
}

double purity(const DensityMatrix& d) noexcept {
  double s = 0.0;
  for (const auto& z : d.matrix().entries()) s += std::norm(z);
  return s;
}

}  // namespace dichoq
