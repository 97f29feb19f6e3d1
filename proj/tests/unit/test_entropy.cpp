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
#include <numbers>

#include "dichoq/codec.hpp"
#include "dichoq/entropy.hpp"
#include "dichoq/genstates.hpp"
#include "dichoq/reduction.hpp"
#include "oracles.hpp"

using namespace dichoq;
using oracle::diag;
using oracle::matrix;

namespace {

constexpr double kLn2 = std::numbers::ln2;

DensityMatrix state(const ComplexMatrix& m) { return validate_density(make_hermitian(m)); }

DensityMatrix qubit(Complex rho12, double rho11 = 0.5) {
  return state(matrix(2, {rho11, rho12, std::conj(rho12), 1.0 - rho11}));
}

std::vector<EntropyParams> default_params() {
  std::vector<EntropyParams> out;
  for (double q : kDefaultTsallisQ) out.push_back(EntropyParams::make(q));
  return out;
}

}  // namespace

TEST(EntropyParams, Range) {
  EXPECT_NO_THROW(EntropyParams::make(0.5));
  EXPECT_NO_THROW(EntropyParams::make(10.0));
  EXPECT_THROW(EntropyParams::make(1.0), InvalidParameter);
  EXPECT_THROW(EntropyParams::make(0.0), InvalidParameter);
  EXPECT_THROW(EntropyParams::make(-1.0), InvalidParameter);
  EXPECT_THROW(EntropyParams::make(10.5), InvalidParameter);
  EXPECT_THROW(EntropyParams::make(NAN), InvalidParameter);
}

TEST(DichotomicEntropy, Examples) {
  EXPECT_NEAR(dichotomic_entropy(0.5), kLn2, 1e-16);
  EXPECT_EQ(dichotomic_entropy(0.0), 0.0);
  EXPECT_EQ(dichotomic_entropy(1.0), 0.0);
  const double expected = -0.75 * std::log(0.75) - 0.25 * std::log(0.25);
  EXPECT_NEAR(dichotomic_entropy(0.75), expected, 1e-15);
  EXPECT_NEAR(dichotomic_entropy(0.75), 0.5623, 1e-4);
  EXPECT_NEAR(dichotomic_entropy(0.75), oracle::entropy_via_log2(0.75), 1e-15);
  EXPECT_THROW(dichotomic_entropy(-0.1), OutOfRange);
  EXPECT_THROW(dichotomic_entropy(1.1), OutOfRange);
  EXPECT_THROW(dichotomic_entropy(NAN), OutOfRange);
}

TEST(DichotomicEntropy, InequalityFormIsTheSameQuantityOnAGrid) {
  for (int i = 0; i <= 10000; ++i) {
    const double p = i / 10000.0;
    const double s = dichotomic_entropy(p);
    EXPECT_GE(s, 0.0);
    EXPECT_LE(s, kLn2 + 1e-16);
    EXPECT_NEAR(vn_inequality_lhs(p), s, 1e-14) << p;
    EXPECT_NEAR(oracle::entropy_via_log2(p), s, 1e-14);
  }
}

TEST(VnSuite, MaximallyMixedQubit) {
  auto r = vn_inequality_suite(qubit(0.0));
  ASSERT_EQ(r.size(), 5u);
  for (const auto& e : r.entries()) EXPECT_NEAR(e.slack, kLn2, 1e-15) << e.name;
  EXPECT_TRUE(r.find("vn[a=1,j=1,k=2]").has_value());
}

TEST(VnSuite, RealOffDiagonalQubit) {
  auto r = vn_inequality_suite(qubit(0.25));
  auto e = r.find("qubit_vn_real");
  ASSERT_TRUE(e.has_value());
  const double expected = std::log(std::sqrt(3.0 / 16.0)) + 0.25 * std::log(3.0);
  EXPECT_NEAR(e->lhs, expected, 1e-15);
  EXPECT_NEAR(e->lhs, -0.5623, 1e-4);
  EXPECT_NEAR(e->lhs, -dichotomic_entropy(0.75), 1e-15);
  EXPECT_TRUE(e->satisfied);
  EXPECT_LT(r.diagnostics().at("qubit_vn_real_pspace_error"), 1e-12);
  EXPECT_LT(r.diagnostics().at("qubit_vn_imag_pspace_error"), 1e-12);
}

TEST(VnSuite, PrintedMixedVariantIsOnlyADiagnostic) {
  auto r = vn_inequality_suite(qubit(Complex(0.3, 0.1)));
  ASSERT_TRUE(r.diagnostics().count("qubit_vn_imag_mixed_lhs"));
  const double mixed = 0.5 * std::log(0.25 - 0.01) + 0.1 * std::log(0.8 / 0.2);
  EXPECT_NEAR(r.diagnostics().at("qubit_vn_imag_mixed_lhs"), mixed, 1e-15);
  EXPECT_NEAR(r.find("qubit_vn_imag")->lhs, -dichotomic_entropy(0.4), 1e-15);
  EXPECT_NEAR(r.diagnostics().at("qubit_vn_imag_mixed_minus_consistent"), mixed - r.find("qubit_vn_imag")->lhs, 1e-15);
}

TEST(VnSuite, MatrixElementFormsMatchProbabilityForms) {
  Rng rng(Seed{14});
  for (int t = 0; t < 500; ++t) {
    auto rho = random_mixed(2, rng);
    auto r = vn_inequality_suite(rho);
    EXPECT_LT(r.diagnostics().at("qubit_vn_real_pspace_error"), 1e-12);
    EXPECT_LT(r.diagnostics().at("qubit_vn_imag_pspace_error"), 1e-12);
    EXPECT_TRUE(r.all_satisfied());
  }
}

TEST(VnSuite, RandomQutrits) {
  Rng rng(Seed{15});
  for (int t = 0; t < 1000; ++t) {
    auto r = vn_inequality_suite(random_mixed(3, rng));
    ASSERT_EQ(r.size(), 9u);
    EXPECT_GE(r.min_slack(), -1e-10);
  }
}

TEST(VnSuite, DegenerateProbabilitiesAreSatisfiedWithZeroSlack) {
  auto r = vn_inequality_suite(state(diag({1, 0})));
  auto e = r.find("vn[a=3,j=1,k=2]");
  ASSERT_TRUE(e.has_value());
  EXPECT_EQ(e->slack, 0.0);
  EXPECT_TRUE(e->satisfied);
  EXPECT_EQ(r.diagnostics().at("degenerate_entries"), 1.0);
}

TEST(Tsallis, EqualDistributionsGiveZero) {
  for (double q : {0.3, 0.5, 2.0, 5.0, 10.0})
    for (double p : {0.0, 0.1, 0.5, 0.9, 1.0}) EXPECT_NEAR(tsallis_relative_entropy(p, p, q), 0.0, 1e-15);
}

TEST(Tsallis, QubitWithEqualAxes) {
  // rho12 = 1/4 - i/4 gives p1 = p2 = 3/4.
  auto rho = qubit(Complex(0.25, -0.25));
  auto t = encode(rho);
  EXPECT_NEAR(t.planes()[0].p1, 0.75, 1e-15);
  EXPECT_NEAR(t.planes()[0].p2, 0.75, 1e-15);
  auto r = tsallis_inequality(rho, Axis::X, Axis::Y, EntropyParams::make(2));
  EXPECT_NEAR(r[0].lhs, 0.0, 1e-15);
  EXPECT_NEAR(qubit_tsallis_xy_form(0.25, -0.25, 2), 0.0, 1e-15);
}

TEST(Tsallis, QubitWorkedValue) {
  auto rho = qubit(0.25);
  auto r = tsallis_inequality(rho, Axis::X, Axis::Y, EntropyParams::make(2));
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].name, "tsallis[q=2,a=1,b=2,j=1,k=2]");
  EXPECT_NEAR(r[0].lhs, 0.25, 1e-15);
  EXPECT_NEAR(oracle::tsallis_two_point(0.75, 0.5, 2), 0.25, 1e-15);
  EXPECT_NEAR(qubit_tsallis_xy_form(0.25, 0.0, 2), 0.25, 1e-15);
}

TEST(Tsallis, AgreesWithIndependentRoutine) {
  Rng rng(Seed{9});
  for (int t = 0; t < 2000; ++t) {
    const double pa = rng.uniform(), pb = rng.uniform();
    for (double q : kDefaultTsallisQ) {
      const double v = tsallis_relative_entropy(pa, pb, q);
      EXPECT_NEAR(v, oracle::tsallis_two_point(pa, pb, q), 1e-12 * std::max(1.0, std::abs(v)));
      EXPECT_GE(v, -1e-10);
    }
  }
}

TEST(Tsallis, ZeroSupportConventions) {
  EXPECT_EQ(tsallis_relative_entropy(0.5, 0.0, 2.0), INFINITY);
  EXPECT_NEAR(tsallis_relative_entropy(0.5, 0.0, 0.5), (std::sqrt(0.5) - 1.0) / -0.5, 1e-15);
  EXPECT_NEAR(tsallis_relative_entropy(0.0, 0.5, 2.0), (0.0 + 1.0 * 2.0 - 1.0) / 1.0, 1e-15);
  auto r = tsallis_inequality(state(diag({1, 0})), Axis::X, Axis::Z, EntropyParams::make(2));
  EXPECT_EQ(r[0].lhs, INFINITY);
  EXPECT_TRUE(r[0].satisfied);
  EXPECT_EQ(r.diagnostics().at("zero_support_entries"), 1.0);
}

TEST(Tsallis, ApproachesKullbackLeibler) {
  Rng rng(Seed{27});
  for (int t = 0; t < 200; ++t) {
    const double pa = 0.05 + 0.9 * rng.uniform(), pb = 0.05 + 0.9 * rng.uniform();
    const double kl = dichotomic_kl(pa, pb);
    EXPECT_NEAR(kl, oracle::kl_two_point(pa, pb), 1e-14);
    for (double eps : {1e-4, -1e-4}) {
      const double v = tsallis_relative_entropy(pa, pb, 1.0 + eps);
      EXPECT_LT(std::abs(v - kl), 1e-3);
      EXPECT_LE(std::abs(v - kl), 10.0 * std::abs(eps));
    }
  }
}

TEST(Tsallis, RequiresDistinctAxes) {
  EXPECT_THROW(tsallis_inequality(qubit(0.0), Axis::X, Axis::X, EntropyParams::make(2)), InvalidParameter);
}

TEST(Tsallis, ZeroExactlyWhenDistributionsCoincide) {
  for (std::size_t n = 2; n <= 4; ++n) {
    Rng rng(Seed{40 + n});
    for (int t = 0; t < 200; ++t) {
      auto rho = random_mixed(n, rng);
      auto table = encode(rho);
      for (double q : kDefaultTsallisQ) {
        for (Axis a : kAxes)
          for (Axis b : kAxes) {
            if (a == b) continue;
            auto r = tsallis_inequality(rho, a, b, EntropyParams::make(q));
            for (std::size_t i = 0; i < r.size(); ++i) {
              const auto& pp = table.planes()[i];
              auto prob = [&](Axis x) {
                return x == Axis::X ? pp.p1 : x == Axis::Y ? pp.p2 : table.diagonal(pp.plane.j());
              };
              const bool equal = std::abs(prob(a) - prob(b)) <= 1e-12;
              EXPECT_GE(r[i].lhs, -1e-10);
              EXPECT_EQ(std::abs(r[i].lhs) <= 1e-12, equal) << r[i].name;
            }
          }
      }
    }
  }
}

TEST(Reduced, MaximallyMixedAndBell) {
  auto params = default_params();
  for (const auto& m : {Complex(0.25) * ComplexMatrix::identity(4), oracle::bell_state()}) {
    auto r = reduced_state_inequalities(state(m), Factorization(4, 2, 2), params);
    ASSERT_EQ(r.size(), 5u);
    EXPECT_NEAR(r.find("reduced:qubit_vn_real")->slack, kLn2, 1e-15);
    EXPECT_NEAR(r.find("reduced:qubit_vn_imag")->slack, kLn2, 1e-15);
    EXPECT_NEAR(r.find("reduced:qubit_tsallis_xy[q=2]")->lhs, 0.0, 1e-15);
    EXPECT_TRUE(r.all_satisfied());
  }
}

TEST(Reduced, CompositionWithReduceRho1) {
  auto params = default_params();
  Rng rng(Seed{61});
  for (int t = 0; t < 200; ++t) {
    auto rho = random_mixed(6, rng);
    const Factorization f(6, 2, 3);
    auto r = reduced_state_inequalities(rho, f, params);
    EXPECT_TRUE(r.all_satisfied());
    auto rho1 = reduce_rho1(rho, f);
    auto vn = vn_inequality_suite(rho1);
    EXPECT_NEAR(r.find("reduced:qubit_vn_real")->lhs, vn.find("qubit_vn_real")->lhs, 1e-12);
    EXPECT_NEAR(r.find("reduced:qubit_vn_imag")->lhs, vn.find("qubit_vn_imag")->lhs, 1e-12);
    for (const auto& p : params) {
      auto ts = tsallis_inequality(rho1, Axis::X, Axis::Y, p);
      std::ostringstream name;
      name << "reduced:qubit_tsallis_xy[q=" << p.q() << "]";
      EXPECT_NEAR(r.find(name.str())->lhs, ts[0].lhs, 1e-12);
    }
  }
}

TEST(Reduced, RequiresQubitFirstFactor) {
  auto params = default_params();
  EXPECT_THROW(reduced_state_inequalities(random_mixed(6, Seed{1}), Factorization(6, 3, 2), params),
               BadFactorization);
}
