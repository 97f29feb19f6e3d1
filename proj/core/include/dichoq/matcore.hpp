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

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "dichoq/errors.hpp"

namespace dichoq {

using Complex = std::complex<double>;

inline constexpr double kTolHermitian = 1e-12;
inline constexpr double kTolTrace = 1e-12;
inline constexpr double kTolPsd = 1e-10;

/// Dense square complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  /// Zero matrix.
  explicit ComplexMatrix(std::size_t dim);
  /// Throws DimensionMismatch unless entries.size() == dim * dim.
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const double> values);

  std::size_t dim() const noexcept { return dim_; }

  Complex& operator()(std::size_t row, std::size_t col) noexcept { return data_[row * dim_ + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const noexcept {
    return data_[row * dim_ + col];
  }

  std::span<const Complex> entries() const noexcept { return data_; }

  ComplexMatrix adjoint() const;
  Complex trace() const noexcept;
  double frobenius_norm() const noexcept;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale) noexcept;

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(Complex scale, ComplexMatrix m);

/// Kronecker product; composite index (i, p) maps to i * b.dim() + p.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// max |a(j,k) - b(j,k)|. Throws DimensionMismatch.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// max |m(j,k) - conj(m(k,j))|.
double hermiticity_deviation(const ComplexMatrix& m) noexcept;

/// Matrix with m = m^dagger within kTolHermitian. Immutable once built.
class HermitianMatrix {
 public:
  std::size_t dim() const noexcept { return m_.dim(); }
  const ComplexMatrix& matrix() const noexcept { return m_; }
  const Complex& operator()(std::size_t row, std::size_t col) const noexcept { return m_(row, col); }
  double trace() const noexcept { return m_.trace().real(); }

  friend bool operator==(const HermitianMatrix&, const HermitianMatrix&) = default;

 private:
  explicit HermitianMatrix(ComplexMatrix m) : m_(std::move(m)) {}
  friend HermitianMatrix make_hermitian(ComplexMatrix m);

  ComplexMatrix m_;
};

/// Accepts matrices whose deviation from Hermiticity is at most kTolHermitian and
/// averages them with their adjoint. Throws NotHermitian (with the deviation) or
/// DimensionMismatch; non-finite entries raise NotHermitian with an infinite deviation.
HermitianMatrix make_hermitian(ComplexMatrix m);
HermitianMatrix make_hermitian(std::size_t dim, std::span<const Complex> entries);

struct EigenDecomposition {
  /// Descending; equal values keep the order in which the solver produced them.
  std::vector<double> values;
  /// Column c is the eigenvector of values[c].
  ComplexMatrix vectors;
  int sweeps = 0;
};

inline constexpr int kJacobiMaxSweeps = 100;

/// Cyclic complex Jacobi. Throws ConvergenceFailure after kJacobiMaxSweeps sweeps.
EigenDecomposition eig_hermitian(const HermitianMatrix& m);

/// Product of the eigenvalues.
double determinant(const HermitianMatrix& m);

/// Determinant by LU with partial pivoting; used to cross-check determinant().
Complex lu_determinant(const ComplexMatrix& m);

/// Sorted eigenvalues of a state: descending, clamped to [0, 1], summing to 1 within 1e-10.
class EigenProbability {
 public:
  /// Validates (each value in [-kTolPsd, 1 + kTolPsd], sum within 1e-10 of 1) and clamps.
  /// Throws NotPositive or NotTraceOne.
  static EigenProbability from_eigenvalues(std::vector<double> values);

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const noexcept { return values_[i]; }
  double max() const noexcept { return values_.front(); }

 private:
  explicit EigenProbability(std::vector<double> v) : values_(std::move(v)) {}
  std::vector<double> values_;
};

/// Hermitian, trace one, positive semidefinite.
class DensityMatrix {
 public:
  std::size_t dim() const noexcept { return h_.dim(); }
  const HermitianMatrix& hermitian() const noexcept { return h_; }
  const ComplexMatrix& matrix() const noexcept { return h_.matrix(); }
  const Complex& operator()(std::size_t row, std::size_t col) const noexcept { return h_(row, col); }
  /// The spectrum computed during validation.
  const EigenProbability& spectrum() const noexcept { return spectrum_; }

 private:
  DensityMatrix(HermitianMatrix h, EigenProbability s) : h_(std::move(h)), spectrum_(std::move(s)) {}
  friend DensityMatrix validate_density(const HermitianMatrix& m);

  HermitianMatrix h_;
  EigenProbability spectrum_;
};

/// Throws NotTraceOne (with 1 - trace) or NotPositive (with the minimum eigenvalue).
DensityMatrix validate_density(const HermitianMatrix& m);

/// Non-throwing form of validate_density.
struct DensityVerdict {
  double trace_deficit = 0.0;
  double min_eigenvalue = 0.0;
  bool trace_one = false;
  bool positive = false;
  bool valid() const noexcept { return trace_one && positive; }
};
DensityVerdict check_density(const HermitianMatrix& m);

/// Tr(rho^2).
double purity(const DensityMatrix& d) noexcept;

}  // namespace dichoq
