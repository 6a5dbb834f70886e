// Copyright 2026 The optspeed Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "optspeed/numerics.hpp"
#include "optspeed/sampling.hpp"
#include "test_support.hpp"

namespace optspeed {
namespace {

using testing::diag;
using testing::sigma_x;
using testing::sigma_y;
using testing::sigma_z;

constexpr double kPi = std::numbers::pi;

TEST(HermEig, DiagonalInputIsSortedWithPermutedColumns) {
  const HermitianEigen eig = herm_eig(diag({3.0, 1.0, 2.0}));
  EXPECT_DOUBLE_EQ(eig.values[0], 1.0);
  EXPECT_DOUBLE_EQ(eig.values[1], 2.0);
  EXPECT_DOUBLE_EQ(eig.values[2], 3.0);
  // Column k is the standard basis vector holding the k-th smallest entry.
  EXPECT_NEAR(std::abs(eig.vectors(1, 0)), 1.0, 1e-14);
  EXPECT_NEAR(std::abs(eig.vectors(2, 1)), 1.0, 1e-14);
  EXPECT_NEAR(std::abs(eig.vectors(0, 2)), 1.0, 1e-14);
}

TEST(HermEig, PauliXClosedForm) {
  const HermitianEigen eig = herm_eig(sigma_x());
  EXPECT_NEAR(eig.values[0], -1.0, 1e-14);
  EXPECT_NEAR(eig.values[1], 1.0, 1e-14);
  const double r = 1.0 / std::sqrt(2.0);
  const ComplexVector minus = testing::vec({r, -r});
  const ComplexVector plus = testing::vec({r, r});
  EXPECT_NEAR(std::abs(minus.dot(eig.vectors.col(0))), 1.0, 1e-14);
  EXPECT_NEAR(std::abs(plus.dot(eig.vectors.col(1))), 1.0, 1e-14);
}

TEST(HermEig, RandomReconstruction) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + trial % 8;
    const ComplexMatrix h = sampling::random_hermitian(n, rng, 1.0 + trial);
    const HermitianEigen eig = herm_eig(h);
    const ComplexMatrix back =
        eig.vectors * eig.values.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
    EXPECT_LE((back - h).norm(), 1e-10 * std::max(1.0, h.norm()));
    EXPECT_LE((eig.vectors.adjoint() * eig.vectors - identity(n)).norm(), 1e-10);
    for (int k = 1; k < n; ++k) EXPECT_LE(eig.values[k - 1], eig.values[k]);
  }
}

TEST(HermEig, RejectsNonHermitian) {
  ComplexMatrix m = sigma_x();
  m(0, 1) = 2.0;
  EXPECT_ERROR_CODE(herm_eig(m), ErrorCode::kNotHermitian);
  EXPECT_ERROR_CODE(herm_eig(ComplexMatrix::Zero(2, 3)), ErrorCode::kDimensionMismatch);
}

TEST(HermEig, DegenerateEigenspaceHasCanonicalBasis) {
  std::mt19937_64 rng(5);
  const ComplexMatrix u = sampling::random_unitary(4, rng);
  const ComplexMatrix h = u * diag({1.0, 1.0, 1.0, 3.0}) * u.adjoint();
  // The same operator assembled with a differently rotated degenerate block.
  ComplexMatrix w = identity(4);
  w.topLeftCorner(3, 3) = sampling::random_unitary(3, rng);
  const ComplexMatrix h2 = (u * w) * diag({1.0, 1.0, 1.0, 3.0}) * (u * w).adjoint();
  const HermitianEigen a = herm_eig(h);
  const HermitianEigen b = herm_eig(h2);
  EXPECT_LE((a.vectors.leftCols(3) - b.vectors.leftCols(3)).norm(), 1e-9);
  const HermitianEigen id = herm_eig(identity(3));
  EXPECT_LE((id.vectors - identity(3)).norm(), 1e-14);
}

TEST(UnitaryExp, ZeroTimeIsIdentity) {
  std::mt19937_64 rng(3);
  const ComplexMatrix h = sampling::random_hermitian(4, rng);
  EXPECT_LE((unitary_exp(h, 0.0) - identity(4)).norm(), 1e-14);
}

TEST(UnitaryExp, PauliZHalfTurnIsMinusIdentity) {
  EXPECT_LE((unitary_exp(sigma_z(), kPi) + identity(2)).norm(), 1e-14);
}

TEST(UnitaryExp, PauliYQuarterTurnIsRotation) {
  ComplexMatrix rotation(2, 2);
  rotation << 0.0, -1.0, 1.0, 0.0;
  EXPECT_LE((unitary_exp(sigma_y(), kPi / 2) - rotation).norm(), 1e-14);
}

TEST(UnitaryExp, HbarRescalesTime) {
  std::mt19937_64 rng(4);
  const ComplexMatrix h = sampling::random_hermitian(3, rng);
  EXPECT_LE((unitary_exp(h, 1.3, 2.0) - unitary_exp(h, 0.65)).norm(), 1e-13);
  EXPECT_ERROR_CODE(unitary_exp(h, 1.0, 0.0), ErrorCode::kInvalidArgument);
}

TEST(UnitaryExp, UnitarityAndGroupLawOnRandomInputs) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> time(-1e3, 1e3);
  std::uniform_real_distribution<double> short_time(-10.0, 10.0);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 8;
    ComplexMatrix h = sampling::random_hermitian(n, rng);
    h *= 100.0 / h.norm();
    const ComplexMatrix u = unitary_exp(h, time(rng));
    EXPECT_LE((u.adjoint() * u - identity(n)).norm(), 1e-10);

    const ComplexMatrix g = sampling::random_hermitian(n, rng);
    const double s = short_time(rng);
    const double t = short_time(rng);
    EXPECT_LE((unitary_exp(g, s) * unitary_exp(g, t) - unitary_exp(g, s + t)).norm(), 1e-9);
  }
}

TEST(Predicates, PauliMatrices) {
  EXPECT_TRUE(is_hermitian(sigma_x()));
  EXPECT_FALSE(is_skew_hermitian(sigma_x()));
  EXPECT_TRUE(is_skew_hermitian(kI * sigma_x()));
  EXPECT_FALSE(is_hermitian(kI * sigma_x()));
  EXPECT_TRUE(is_unitary(sigma_y()));
  EXPECT_FALSE(is_unitary(2.0 * sigma_y()));
  EXPECT_DOUBLE_EQ(frobenius(diag({3.0, 4.0})), 5.0);
}

TEST(Predicates, ToleranceScalesWithNorm) {
  ComplexMatrix big = 1e6 * sigma_x();
  big(0, 1) += 1e-6;  // relative error 1e-12
  EXPECT_TRUE(is_hermitian(big));
  ComplexMatrix small = sigma_x();
  small(0, 1) += 1e-6;
  EXPECT_FALSE(is_hermitian(small));
}

TEST(Tolerances, RejectsNonPositive) {
  EXPECT_NO_THROW(Tolerances{}.validate());
  EXPECT_ERROR_CODE((Tolerances{0.0, 1e-12, 1e-9}.validate()), ErrorCode::kInvalidArgument);
  EXPECT_ERROR_CODE((Tolerances{1e-10, -1.0, 1e-9}.validate()), ErrorCode::kInvalidArgument);
}

TEST(GaugeFixed, FirstSignificantEntryBecomesRealPositive) {
  const ComplexVector v = testing::vec({0.0, std::polar(0.6, 1.0), std::polar(0.8, -2.0)});
  const ComplexVector g = gauge_fixed(v);
  EXPECT_NEAR(g[1].real(), 0.6, 1e-15);
  EXPECT_NEAR(g[1].imag(), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(g[2]), 0.8, 1e-15);
  EXPECT_NEAR(std::arg(g[2]), -3.0, 1e-14);
}

TEST(RayDistance, AccurateForNearbyRays) {
  const double eps = 1e-9;
  const ComplexVector a = testing::vec({1.0, 0.0});
  const ComplexVector b = testing::vec({std::cos(eps), std::sin(eps) * kI});
  EXPECT_NEAR(ray_distance(a, b), eps, 1e-22);
  EXPECT_NEAR(ray_distance(a, std::polar(1.0, 0.7) * a), 0.0, 1e-16);
}

TEST(TraceNorm, SumOfAbsoluteEigenvalues) {
  EXPECT_NEAR(trace_norm(diag({1.0, -2.0, 0.5})), 3.5, 1e-14);
  EXPECT_NEAR(trace_norm(sigma_y()), 2.0, 1e-14);
}

}  // namespace
}  // namespace optspeed
