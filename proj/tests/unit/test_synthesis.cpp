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

#include "optspeed/evolution.hpp"
#include "optspeed/lie_flag.hpp"
#include "optspeed/sampling.hpp"
#include "optspeed/synthesis.hpp"
#include "test_support.hpp"

namespace optspeed {
namespace {

using testing::diag;
using testing::sigma_x;
using testing::sigma_y;
using testing::sigma_z;
using testing::vec;

constexpr double kPi = std::numbers::pi;

// [[alpha, x^dagger], [x, A]] in the standard basis.
ComplexMatrix from_blocks(double alpha, const ComplexVector& x, const ComplexMatrix& a) {
  const auto n = x.size() + 1;
  ComplexMatrix h(n, n);
  h(0, 0) = alpha;
  h.col(0).tail(n - 1) = x;
  h.row(0).tail(n - 1) = x.adjoint();
  h.bottomRightCorner(n - 1, n - 1) = a;
  return h;
}

TEST(AdaptedBasis, SpecialUnitaryWithPhiFirst) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 7;
    const PureState phi = sampling::random_state(n, rng);
    const ComplexMatrix u = adapted_basis(phi);
    EXPECT_LE((u.col(0) - phi.amplitudes()).norm(), 1e-14);
    EXPECT_TRUE(is_unitary(u));
    EXPECT_NEAR(std::abs(u.determinant() - 1.0), 0.0, 1e-12);
  }
  EXPECT_LE((adapted_basis(PureState::basis(3, 0)) - identity(3)).norm(), 1e-15);
}

TEST(AdaptedBlocks, PauliExamples) {
  const HamiltonianBlocks z = adapted_blocks(sigma_z(), PureState::basis(2, 0));
  EXPECT_DOUBLE_EQ(z.alpha, 1.0);
  EXPECT_EQ(z.x.norm(), 0.0);
  EXPECT_NEAR(std::abs(z.a(0, 0) + 1.0), 0.0, 1e-15);

  const HamiltonianBlocks x = adapted_blocks(sigma_x(), PureState::basis(2, 0));
  EXPECT_DOUBLE_EQ(x.alpha, 0.0);
  EXPECT_NEAR(std::abs(x.x[0]), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(x.a(0, 0)), 0.0, 1e-15);
  EXPECT_ERROR_CODE(adapted_blocks(kI * sigma_x(), PureState::basis(2, 0)),
                    ErrorCode::kNotHermitian);
}

TEST(AdaptedBlocks, ReassemblyAndCouplingNorm) {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 7;
    const ComplexMatrix h = sampling::random_hermitian(n, rng);
    const PureState phi = sampling::random_state(n, rng);
    const HamiltonianBlocks b = adapted_blocks(h, phi);
    EXPECT_LE((b.reassemble() - h).norm(), 1e-10);
    EXPECT_NEAR(b.x.norm(), energy_uncertainty(h, phi), 1e-10);
    EXPECT_NEAR(b.alpha, phi.amplitudes().dot(h * phi.amplitudes()).real(), 1e-12);
  }
}

TEST(IsOptimalSpeed, Examples) {
  const PureState zero = PureState::basis(2, 0);
  EXPECT_EQ(is_optimal_speed(sigma_y(), zero).kind, Verdict::kOptimal);

  const OptimalityVerdict sub = is_optimal_speed(sigma_x() + sigma_z(), zero);
  EXPECT_EQ(sub.kind, Verdict::kSuboptimal);
  EXPECT_NEAR(sub.delta_e, 1.0, 1e-14);
  EXPECT_NEAR(sub.delta_e_max, std::sqrt(2.0), 1e-14);
  EXPECT_GT(sub.residual, 0.1);

  const OptimalityVerdict three =
      is_optimal_speed(from_blocks(0.5, vec({1.0, 0.0}), diag({0.5, -1.0})),
                       PureState::basis(3, 0));
  EXPECT_EQ(three.kind, Verdict::kOptimal);
  EXPECT_NEAR(three.residual, 0.0, 1e-15);

  EXPECT_EQ(is_optimal_speed(sigma_z(), zero).kind, Verdict::kStationary);
  EXPECT_ERROR_CODE(is_optimal_speed(kI * sigma_z(), zero), ErrorCode::kNotHermitian);
}

TEST(IsOptimalSpeed, OptimalDoesNotForceMaximalUncertainty) {
  // Same instance as above: x spans the eigenline of A, but A has another
  // eigenvalue (-1) outside [alpha - |x|, alpha + |x|] = [-0.5, 1.5].
  const ComplexMatrix h = from_blocks(0.5, vec({1.0, 0.0}), diag({0.5, -1.0}));
  const OptimalityVerdict v = is_optimal_speed(h, PureState::basis(3, 0));
  EXPECT_EQ(v.kind, Verdict::kOptimal);
  EXPECT_NEAR(v.delta_e, 1.0, 1e-14);
  EXPECT_NEAR(v.delta_e_max, 1.25, 1e-14);
  // The ray still moves along the great circle at speed |x|.
  const PureState target = PureState::normalized(vec({1.0, -kI, 0.0}));
  const auto arrival = first_arrival_time(h, PureState::basis(3, 0), target, 5.0);
  ASSERT_TRUE(arrival.has_value());
  EXPECT_NEAR(*arrival, kPi / 4, 1e-7);
}

TEST(IsOptimalSpeed, IgnoresTraceAndJudgesTracelessPart) {
  const PureState zero = PureState::basis(2, 0);
  EXPECT_EQ(is_optimal_speed(sigma_y() + 5.0 * identity(2), zero).kind, Verdict::kOptimal);
  // Raw blocks alpha = 1, x = 1, A = 0; removing the trace leaves alpha = 1/2,
  // A = -1/2, which violates A x = alpha x.
  ComplexMatrix h(2, 2);
  h << 1.0, 1.0, 1.0, 0.0;
  const OptimalityVerdict v = is_optimal_speed(h, zero);
  EXPECT_EQ(v.kind, Verdict::kSuboptimal);
  EXPECT_GT(v.delta_e_max - v.delta_e, 0.1);
}

TEST(IsOptimalSpeed, MaximalUncertaintyImpliesOptimal) {
  std::mt19937_64 rng(79);
  int optimal_seen = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 7;
    const PureState phi = sampling::random_state(n, rng);
    const ComplexMatrix h = trial % 2 == 0
                                ? sampling::random_hermitian(n, rng)
                                : optimal_hamiltonian(phi, sampling::random_state(n, rng), 1.3)
                                      .hamiltonian;
    const OptimalityVerdict v = is_optimal_speed(h, phi);
    if (std::abs(v.delta_e - v.delta_e_max) <= 1e-8 * std::max(1.0, v.delta_e_max)) {
      EXPECT_EQ(v.kind, Verdict::kOptimal);
      ++optimal_seen;
    } else {
      EXPECT_NE(v.kind, Verdict::kOptimal);
    }
  }
  EXPECT_EQ(optimal_seen, 100);
}

TEST(StrictGap, ViolatingBlocksExceedCoupling) {
  std::mt19937_64 rng(83);
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  int checked = 0;
  while (checked < 200) {
    const int n = 2 + checked % 7;
    const double alpha = uniform(rng);
    const ComplexVector x = sampling::gaussian_vector(n - 1, rng);
    const ComplexMatrix a = sampling::random_hermitian(n - 1, rng);
    const double violation = (a * x - alpha * x).norm() / (a.norm() * x.norm());
    if (a.norm() <= 0.1 || violation <= 0.1) continue;
    const ComplexMatrix h = from_blocks(alpha, x, a);
    EXPECT_GT(energy_uncertainty_max(h).value - x.norm(), 1e-12);
    ++checked;
  }
}

TEST(OptimalHamiltonian, QubitIsPauliY) {
  const SynthesizedHamiltonian h =
      optimal_hamiltonian(PureState::basis(2, 0), PureState::basis(2, 1), 1.0);
  EXPECT_FALSE(h.coincident);
  EXPECT_NEAR(h.distance, kPi / 2, 1e-15);
  EXPECT_LE((h.hamiltonian - sigma_y()).norm(), 1e-15);
}

TEST(OptimalHamiltonian, CoincidentRaysGiveZero) {
  const PureState phi = PureState::normalized(vec({1.0, kI, 2.0}));
  const PureState same(phi.amplitudes() * std::polar(1.0, 0.4));
  const SynthesizedHamiltonian h = optimal_hamiltonian(phi, same, 1.0);
  EXPECT_TRUE(h.coincident);
  EXPECT_EQ(h.hamiltonian, zeros(3));
  EXPECT_ERROR_CODE(optimal_hamiltonian(phi, phi, 0.0), ErrorCode::kInvalidArgument);
  EXPECT_ERROR_CODE(optimal_hamiltonian(phi, PureState::basis(2, 0), 1.0),
                    ErrorCode::kDimensionMismatch);
}

TEST(OptimalHamiltonian, QuarterTurnInThreeLevels) {
  const PureState phi = PureState::basis(3, 0);
  const PureState psi = PureState::normalized(vec({1.0, 1.0, 0.0}));
  const SynthesizedHamiltonian h = optimal_hamiltonian(phi, psi, 2.0);
  ComplexMatrix expected = zeros(3);
  expected.topLeftCorner(2, 2) = 2.0 * sigma_y();
  EXPECT_LE((h.hamiltonian - expected).norm(), 1e-14);
  EXPECT_NEAR(qsl_time(phi, psi, h.hamiltonian), kPi / 8, 1e-15);
  const auto arrival = first_arrival_time(h.hamiltonian, phi, psi, 1.0);
  ASSERT_TRUE(arrival.has_value());
  EXPECT_NEAR(*arrival, kPi / 8, 1e-7);
}

TEST(OptimalHamiltonian, PostconditionsOnRandomPairs) {
  std::mt19937_64 rng(89);
  std::uniform_real_distribution<double> log_e(std::log(0.1), std::log(10.0));
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 7;
    const PureState phi = sampling::random_state(n, rng);
    const PureState psi = sampling::random_state(n, rng);
    const double e = std::exp(log_e(rng));
    const Units units{0.5 + 0.01 * trial};
    const SynthesizedHamiltonian h = optimal_hamiltonian(phi, psi, e);
    EXPECT_EQ(is_optimal_speed(h.hamiltonian, phi).kind, Verdict::kOptimal);
    EXPECT_NEAR(energy_uncertainty(h.hamiltonian, phi), e, 1e-10);
    EXPECT_NEAR(std::abs(h.hamiltonian.trace()), 0.0, 1e-12);
    const double t = units.hbar * h.distance / e;
    EXPECT_NEAR(qsl_time(phi, psi, h.hamiltonian, units), t, 1e-12 * std::max(1.0, t));
    const PureState reached = propagate(h.hamiltonian, phi, t, units);
    EXPECT_LE(testing::infidelity(reached.amplitudes(), psi.amplitudes()), 1e-12);
  }
}

TEST(OptimalHamiltonian, PhaseGaugeDoesNotChangeTheOutput) {
  std::mt19937_64 rng(97);
  const PureState phi = sampling::random_state(4, rng);
  const PureState psi = sampling::random_state(4, rng);
  const ComplexMatrix a = optimal_hamiltonian(phi, psi, 1.0).hamiltonian;
  const ComplexMatrix b =
      optimal_hamiltonian(phi, PureState(psi.amplitudes() * std::polar(1.0, 2.0)), 1.0).hamiltonian;
  EXPECT_LE((a - b).norm(), 1e-14);
  const ComplexMatrix c =
      optimal_hamiltonian(PureState(phi.amplitudes() * std::polar(1.0, -1.1)), psi, 1.0)
          .hamiltonian;
  for (double t : {0.2, 0.9, 2.5}) {
    EXPECT_LE(testing::projector_distance(propagate(a, phi, t).amplitudes(),
                                          propagate(c, phi, t).amplitudes()),
              1e-12);
  }
}

TEST(OptimalHamiltonian, OrthogonalTargetUsesPsiDirectly) {
  const PureState phi = PureState::basis(3, 0);
  const PureState psi = PureState::normalized(vec({0.0, kI, 1.0}));
  const ComplexMatrix h = optimal_hamiltonian(phi, psi, 1.0).hamiltonian;
  // H = i(|psi><phi| - |phi><psi|), so H e_1 = i psi.
  EXPECT_LE((h.col(0) - kI * psi.amplitudes()).norm(), 1e-15);
}

TEST(OptimalFamily, MembersShareTheRayTrajectory) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 7;
    const PureState phi = sampling::random_state(n, rng);
    const PureState psi = sampling::random_state(n, rng);
    const ComplexMatrix core = optimal_hamiltonian(phi, psi, 1.5).hamiltonian;
    const ComplexMatrix sample = optimal_family_sample(phi, psi, 1.5, rng());
    EXPECT_EQ(is_optimal_speed(sample, phi).kind, Verdict::kOptimal);
    EXPECT_NEAR(energy_uncertainty(sample, phi), 1.5, 1e-10);
    if (n >= 3) EXPECT_GT(adapted_blocks(sample, phi).a.norm(), 1e-3);
    for (double t : {0.1, 0.7, 1.9, 6.0}) {
      EXPECT_LE(testing::projector_distance(propagate(core, phi, t).amplitudes(),
                                            propagate(sample, phi, t).amplitudes()),
                1e-9);
    }
  }
}

TEST(OptimalFamily, ZeroExtensionIsTheCanonicalMember) {
  std::mt19937_64 rng(103);
  const PureState phi = sampling::random_state(4, rng);
  const PureState psi = sampling::random_state(4, rng);
  const ComplexMatrix core = optimal_hamiltonian(phi, psi, 0.8).hamiltonian;
  EXPECT_LE((optimal_family_member(phi, psi, 0.8, 0.0, zeros(3)) - core).norm(), 1e-14);
  EXPECT_ERROR_CODE(optimal_family_member(phi, psi, 0.8, 0.0, zeros(2)),
                    ErrorCode::kDimensionMismatch);
  EXPECT_EQ(optimal_family_sample(phi, psi, 0.8, 5), optimal_family_sample(phi, psi, 0.8, 5));
}

TEST(QslTime, QubitAndStationary) {
  const PureState zero = PureState::basis(2, 0);
  const PureState one = PureState::basis(2, 1);
  EXPECT_NEAR(qsl_time(zero, one, sigma_y()), kPi / 2, 1e-15);
  EXPECT_NEAR(qsl_time(zero, one, sigma_y(), Units{2.0}), kPi, 1e-15);
  EXPECT_ERROR_CODE(qsl_time(zero, one, sigma_z()), ErrorCode::kStationaryState);
}

TEST(FirstArrival, QubitOracle) {
  const PureState zero = PureState::basis(2, 0);
  const PureState one = PureState::basis(2, 1);
  const auto t = first_arrival_time(sigma_y(), zero, one, 10.0);
  ASSERT_TRUE(t.has_value());
  EXPECT_NEAR(*t, kPi / 2, 1e-7);
  const auto slow = first_arrival_time(sigma_y(), zero, one, 10.0, Units{3.0});
  ASSERT_TRUE(slow.has_value());
  EXPECT_NEAR(*slow, 3.0 * kPi / 2, 3e-7);
}

TEST(FirstArrival, EdgeCases) {
  const PureState zero = PureState::basis(2, 0);
  const PureState one = PureState::basis(2, 1);
  EXPECT_FALSE(first_arrival_time(sigma_z(), zero, one, 10.0).has_value());
  EXPECT_FALSE(first_arrival_time(sigma_y(), zero, one, 1.0).has_value());
  EXPECT_EQ(first_arrival_time(sigma_y(), zero, zero, 1.0), 0.0);
  EXPECT_ERROR_CODE(first_arrival_time(sigma_y(), zero, one, -1.0), ErrorCode::kInvalidArgument);
}

TEST(FirstArrival, SuboptimalIsSlowerThanTheBound) {
  // sigma_x + sigma_z from |0> sweeps a Bloch circle through |0> and |+>;
  // the bound uses Delta E = 1 but the arc is traversed more slowly.
  const ComplexMatrix h = sigma_x() + sigma_z();
  const PureState zero = PureState::basis(2, 0);
  const PureState target = propagate(h, zero, 1.0);
  const auto t = first_arrival_time(h, zero, target, 1.5);
  ASSERT_TRUE(t.has_value());
  EXPECT_NEAR(*t, 1.0, 1e-7);
  EXPECT_GT(*t - qsl_time(zero, target, h), 1e-3);
}

TEST(EquigeodesicVector, PauliYIsTheRotationGenerator) {
  const EquigeodesicVector eq = equigeodesic_vector_of(sigma_y(), PureState::basis(2, 0));
  ComplexMatrix expected(2, 2);
  expected << 0.0, -1.0, 1.0, 0.0;
  EXPECT_LE((eq.vector.matrix() - expected).norm(), 1e-15);
  EXPECT_LE((eq.base - identity(2)).norm(), 1e-15);
  EXPECT_TRUE(is_equigeodesic_structural(eq.vector, BlockStructure::pure_state(2)));
}

TEST(EquigeodesicVector, FamilySamplesAreStructural) {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 3 + trial % 6;
    const PureState phi = sampling::random_state(n, rng);
    const ComplexMatrix h =
        optimal_family_sample(phi, sampling::random_state(n, rng), 1.0, rng());
    const EquigeodesicVector eq = equigeodesic_vector_of(h, phi);
    const SuVector at_origin = ad_conjugate(eq.base.adjoint(), eq.vector);
    EXPECT_TRUE(is_equigeodesic_structural(at_origin, BlockStructure::pure_state(n)));
    EXPECT_GT(at_origin.a().norm(), 1e-3);
    EXPECT_LE((eq.base.col(0) - phi.amplitudes()).norm(), 1e-14);
  }
  EXPECT_ERROR_CODE(equigeodesic_vector_of(sigma_x() + sigma_z(), PureState::basis(2, 0)),
                    ErrorCode::kNotOptimal);
}

}  // namespace
}  // namespace optspeed
