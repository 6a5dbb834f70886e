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

#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "optspeed/numerics.hpp"
#include "optspeed/quantum_states.hpp"

namespace optspeed {

struct Trajectory {
  std::vector<double> times;
  std::vector<PureState> states;
  ComplexMatrix hamiltonian;
  Units units;
};

struct DensityTrajectory {
  std::vector<double> times;
  std::vector<DensityMatrix> states;
  ComplexMatrix hamiltonian;
  Units units;
};

/// exp(-iHt/hbar) phi.
PureState propagate(const ComplexMatrix& h, const PureState& phi, double t,
                    const Units& units = {});
/// exp(-iHt/hbar) rho exp(iHt/hbar).
DensityMatrix propagate_density(const ComplexMatrix& h, const DensityMatrix& rho, double t,
                                const Units& units = {});

/// steps + 1 equally spaced points from t0 to t1; a single point when t0 == t1.
std::vector<double> uniform_grid(double t0, double t1, int steps);

/// Throws kInvalidArgument unless the grid is non-decreasing.
Trajectory sample_trajectory(const ComplexMatrix& h, const PureState& phi,
                             std::span<const double> times, const Units& units = {});
DensityTrajectory sample_trajectory(const ComplexMatrix& h, const DensityMatrix& rho,
                                    std::span<const double> times, const Units& units = {});

/// Finite-difference estimate of d/dt fs_distance(phi(t0), phi(t)) on a
/// uniform grid: central differences inside, second-order one-sided at the
/// ends. Needs at least three samples; throws kFoldExceeded once the
/// distance reaches the pi/2 fold.
std::vector<double> fs_speed_profile(const Trajectory& traj);

/// Sum of consecutive Fubini-Study distances minus the endpoint distance.
/// Throws kFoldExceeded if any sample lies beyond pi/2 - 1e-3 from the start.
double geodesic_defect(const Trajectory& traj);

/// Largest norm of a sample's component outside span{phi, psi}.
double subspace_leakage(const Trajectory& traj, const PureState& phi, const PureState& psi);

/// Scans distance(t) on t = 0, step, 2 step, ... up to horizon and refines
/// every sampled local minimum by golden-section search. Returns the first
/// refined minimiser whose distance is at most `threshold`. `lipschitz`
/// bounds |d distance / dt| and lets the scan skip brackets that cannot dip
/// below the threshold.
std::optional<double> first_dip_below(const std::function<double(double)>& distance,
                                      double step, double horizon, double threshold,
                                      double lipschitz);

/// First time the density trajectory of rho comes within `trace_tolerance`
/// of target in trace norm.
std::optional<double> first_arrival_time_density(const ComplexMatrix& h,
                                                 const DensityMatrix& rho,
                                                 const DensityMatrix& target, double horizon,
                                                 const Units& units = {},
                                                 double trace_tolerance = 1e-8);

}  // namespace optspeed
