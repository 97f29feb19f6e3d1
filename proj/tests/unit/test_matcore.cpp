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

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "dichoq/genstates.hpp"
#include "dichoq/matcore.hpp"
#include "oracles.hpp"

using namespace dichoq;
using oracle::diag;
using oracle::matrix;

namespace {

const Complex I(0.0, 1.0);

ComplexMatrix reconstruct(const EigenDecomposition& e) {
  const std::size_t n = e.values.size();
  ComplexMatrix d(n);
  for (std::size_t i = 0; i < n; ++i) d(i, i) = e.values[i];
  return oracle::matmul(oracle::matmul(e.vectors, d), oracle::dagger(e.vectors));
}

}  // namespace

TEST(MakeHermitian, AcceptsRealDiagonal) {
  auto h = make_hermitian(diag({1, 0}));
  EXPECT_EQ(h.dim(), 2u);
  EXPECT_EQ(h(0, 0), Complex(1.0));
}

TEST(MakeHermitian, RejectsNonHermitianAndReportsDeviation) {
  try {
    make_hermitian(matrix(2, {0, I, I, 0}));
    FAIL() << "expected NotHermitian";
  } catch (const NotHermitian& e) {
    EXPECT_NEAR(e.deviation(), 2.0, 1e-15);
  }
}

TEST(MakeHermitian, AcceptsConjugateSymmetric) {
  auto h = make_hermitian(matrix(2, {0.5, Complex(0.25, 0.25), Complex(0.25, -0.25), 0.5}));
  EXPECT_EQ(h(0, 1), Complex(0.25, 0.25));
}

TEST(MakeHermitian, SymmetrizesTinyDeviations) {
  auto h = make_hermitian(matrix(2, {Complex(0.5, 1e-13), 0.1 + 4e-13, 0.1, 0.5}));
  EXPECT_EQ(h(0, 0).imag(), 0.0);
  EXPECT_EQ(h(0, 1), std::conj(h(1, 0)));
  EXPECT_NEAR(h(0, 1).real(), 0.1 + 2e-13, 1e-16);
}

TEST(MakeHermitian, RejectsDeviationAboveTolerance) {
  EXPECT_THROW(make_hermitian(matrix(2, {0.5, 0.1 + 1e-11, 0.1, 0.5})), NotHermitian);
}

TEST(MakeHermitian, RejectsNonFinite) {
  EXPECT_THROW(make_hermitian(matrix(2, {NAN, 0, 0, 1})), NotHermitian);
  EXPECT_THROW(make_hermitian(matrix(2, {INFINITY, 0, 0, 1})), NotHermitian);
}

TEST(MakeHermitian, DimensionMismatch) {
  std::vector<Complex> three(3);
  EXPECT_THROW(make_hermitian(2, three), DimensionMismatch);
  EXPECT_THROW(ComplexMatrix(2, std::vector<Complex>(5)), DimensionMismatch);
}

TEST(Eig, IsotropicQubit) {
  auto e = eig_hermitian(make_hermitian(diag({0.5, 0.5})));
  EXPECT_NEAR(e.values[0], 0.5, 1e-15);
  EXPECT_NEAR(e.values[1], 0.5, 1e-15);
}

TEST(Eig, Diagonal) {
  auto e = eig_hermitian(make_hermitian(diag({0.25, 0.75})));
  EXPECT_NEAR(e.values[0], 0.75, 1e-15);
  EXPECT_NEAR(e.values[1], 0.25, 1e-15);
}

TEST(Eig, RankOneProjector) {
  auto e = eig_hermitian(make_hermitian(matrix(2, {0.5, 0.5, 0.5, 0.5})));
  EXPECT_NEAR(e.values[0], 1.0, 1e-14);
  EXPECT_NEAR(e.values[1], 0.0, 1e-14);
}

TEST(Eig, MatchesClosedFormOnQubits) {
  Rng rng(Seed{11});
  for (int t = 0; t < 200; ++t) {
    auto h = random_hermitian(2, rng);
    auto e = eig_hermitian(h);
    auto ref = oracle::eig2(h.matrix());
    EXPECT_NEAR(e.values[0], ref[0], 1e-13);
    EXPECT_NEAR(e.values[1], ref[1], 1e-13);
  }
}

TEST(Eig, ReconstructionAndUnitarityUpTo12) {
  Rng rng(Seed{3});
  for (std::size_t n = 1; n <= 12; ++n) {
    for (int t = 0; t < 20; ++t) {
      auto h = random_hermitian(n, rng);
      auto e = eig_hermitian(h);
      ASSERT_TRUE(std::is_sorted(e.values.rbegin(), e.values.rend()));
      const double scale = h.matrix().frobenius_norm();
      EXPECT_LT((reconstruct(e) - h.matrix()).frobenius_norm(), 1e-10 * scale);
      auto uu = oracle::matmul(oracle::dagger(e.vectors), e.vectors);
      EXPECT_LT(oracle::max_diff(uu, ComplexMatrix::identity(n)), 1e-10);
      const double sum = std::accumulate(e.values.begin(), e.values.end(), 0.0);
      EXPECT_NEAR(sum, h.trace(), 1e-11 * std::max(1.0, scale));
    }
  }
}

TEST(Eig, DegenerateSpectrum) {
  // U diag(a, a, b) U^dagger for a random unitary from a pure-state eigenbasis.
  auto basis = eig_hermitian(random_mixed(3, Seed{9}).hermitian()).vectors;
  auto d = diag({0.4, 0.4, 0.2});
  auto m = make_hermitian(oracle::matmul(oracle::matmul(basis, d), oracle::dagger(basis)));
  auto e = eig_hermitian(m);
  EXPECT_NEAR(e.values[0], 0.4, 1e-13);
  EXPECT_NEAR(e.values[1], 0.4, 1e-13);
  EXPECT_NEAR(e.values[2], 0.2, 1e-13);
}

TEST(Eig, ZeroMatrix) {
  auto e = eig_hermitian(make_hermitian(ComplexMatrix(4)));
  for (double v : e.values) EXPECT_EQ(v, 0.0);
  EXPECT_EQ(e.sweeps, 0);
}

TEST(Determinant, IsotropicQubit) {
  EXPECT_NEAR(determinant(make_hermitian(diag({0.5, 0.5}))), 0.25, 1e-15);
}

TEST(Determinant, RankOneIsZero) {
  EXPECT_NEAR(determinant(random_pure(4, Seed{1}).hermitian()), 0.0, 1e-10);
  EXPECT_NEAR(determinant(make_hermitian(matrix(2, {0.5, 0.5, 0.5, 0.5}))), 0.0, 1e-10);
}

TEST(Determinant, RandomStatesWithinSimplexBound) {
  for (std::uint64_t s = 0; s < 200; ++s) {
    const double d = determinant(random_mixed(4, Seed{s}).hermitian());
    EXPECT_GE(d, 0.0);
    EXPECT_LE(d, std::pow(0.25, 4));
  }
}

TEST(Determinant, AgreesWithLuAndGaussianElimination) {
  Rng rng(Seed{5});
  for (std::size_t n = 1; n <= 12; ++n) {
    for (int t = 0; t < 10; ++t) {
      auto h = random_hermitian(n, rng);
      const double d = determinant(h);
      const Complex lu = lu_determinant(h.matrix());
      std::vector<std::vector<Complex>> a(n, std::vector<Complex>(n));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = h(i, j);
      const Complex g = oracle::gauss_det(a);
      const double tol = 1e-9 * std::max(1.0, std::abs(d));
      EXPECT_NEAR(d, lu.real(), tol);
      EXPECT_NEAR(lu.imag(), 0.0, tol);
      EXPECT_NEAR(d, g.real(), tol);
    }
  }
}

TEST(Purity, Examples) {
  EXPECT_NEAR(purity(validate_density(make_hermitian(diag({0.25, 0.25, 0.25, 0.25})))), 0.25, 1e-15);
  EXPECT_NEAR(purity(random_pure(5, Seed{2})), 1.0, 1e-12);
  EXPECT_NEAR(purity(validate_density(make_hermitian(diag({0.75, 0.25})))), 10.0 / 16.0, 1e-15);
}

TEST(Purity, OneExactlyWhenMaxEigenvalueIsOne) {
  for (std::uint64_t s = 0; s < 100; ++s) {
    for (const auto& rho : {random_pure(3, Seed{s}), random_mixed(3, Seed{s})}) {
      const bool pure = std::abs(purity(rho) - 1.0) < 1e-10;
      const bool top = std::abs(rho.spectrum().max() - 1.0) < 1e-10;
      EXPECT_EQ(pure, top);
    }
  }
}

TEST(Purity, WithinRange) {
  for (std::uint64_t s = 0; s < 100; ++s) {
    auto rho = random_mixed(5, Seed{s});
    EXPECT_GE(purity(rho), 0.2 - 1e-12);
    EXPECT_LE(purity(rho), 1.0 + 1e-12);
  }
}

TEST(ValidateDensity, AcceptsMaximallyMixed) {
  auto rho = validate_density(make_hermitian(diag({0.5, 0.5})));
  EXPECT_EQ(rho.spectrum().size(), 2u);
}

TEST(ValidateDensity, RejectsNegativeEigenvalue) {
  try {
    validate_density(make_hermitian(diag({1.5, -0.5})));
    FAIL() << "expected NotPositive";
  } catch (const NotPositive& e) {
    EXPECT_NEAR(e.min_eigenvalue(), -0.5, 1e-15);
  }
}

TEST(ValidateDensity, BlochVectorOutsideBall) {
  // p = (1, 1, 1): every Bloch component 1/2, length sqrt(3)/2.
  auto h = make_hermitian(oracle::sigma_expansion(1, 1, 1));
  try {
    validate_density(h);
    FAIL() << "expected NotPositive";
  } catch (const NotPositive& e) {
    EXPECT_NEAR(e.min_eigenvalue(), 0.5 - std::sqrt(3.0) / 2.0, 1e-14);
  }
}

TEST(ValidateDensity, RejectsTraceDeficit) {
  try {
    validate_density(make_hermitian(diag({0.5, 0.4})));
    FAIL() << "expected NotTraceOne";
  } catch (const NotTraceOne& e) {
    EXPECT_NEAR(e.deficit(), 0.1, 1e-15);
  }
}

TEST(ValidateDensity, ClampsTinyNegativeEigenvalues) {
  auto rho = validate_density(make_hermitian(diag({1.0 + 5e-11, -5e-11})));
  EXPECT_EQ(rho.spectrum()[1], 0.0);
  EXPECT_EQ(rho.spectrum()[0], 1.0);
}

TEST(ValidateDensity, AgreesWithSylvesterMinors) {
  // Full-rank states have positive leading minors; a state pushed just past the boundary has
  // a negative one.
  for (std::uint64_t s = 0; s < 50; ++s) {
    auto rho = random_mixed(4, Seed{s});
    for (double minor : oracle::leading_minors(rho.matrix())) EXPECT_GT(minor, 0.0);
  }
  auto bad = diag({0.6, 0.5, -0.1});
  EXPECT_FALSE(check_density(make_hermitian(bad)).valid());
  EXPECT_LT(oracle::leading_minors(bad).back(), 0.0);
}

TEST(CheckDensity, ReportsWithoutThrowing) {
  auto v = check_density(make_hermitian(diag({1.5, -0.5})));
  EXPECT_TRUE(v.trace_one);
  EXPECT_FALSE(v.positive);
  EXPECT_NEAR(v.min_eigenvalue, -0.5, 1e-15);
}

TEST(EigenProbability, SortsValidatesAndClamps) {
  auto p = EigenProbability::from_eigenvalues({0.2, 0.8 + 5e-11, -5e-11});
  EXPECT_NEAR(p[0], 0.8, 1e-10);
  EXPECT_EQ(p[1], 0.2);
  EXPECT_EQ(p[2], 0.0);
  EXPECT_THROW(EigenProbability::from_eigenvalues({0.5, 0.6}), NotTraceOne);
  EXPECT_THROW(EigenProbability::from_eigenvalues({1.2, -0.2}), NotPositive);
}

TEST(EigenProbability, EveryRandomStateYieldsOne) {
  for (std::uint64_t s = 0; s < 100; ++s) {
    auto spec = random_mixed(6, Seed{s}).spectrum();
    double sum = 0.0;
    for (double v : spec.values()) {
      EXPECT_GE(v, 0.0);
      sum += v;
    }
    EXPECT_NEAR(sum, 1.0, 1e-10);
  }
}

TEST(Kron, CompositeIndexConvention) {
  auto a = matrix(2, {1, 2, 3, 4});
  auto b = matrix(2, {5, 6, 7, 8});
  auto k = kron(a, b);
  EXPECT_EQ(k(1 * 2 + 0, 0 * 2 + 1), a(1, 0) * b(0, 1));
  EXPECT_EQ(k(0 * 2 + 1, 1 * 2 + 1), a(0, 1) * b(1, 1));
}
