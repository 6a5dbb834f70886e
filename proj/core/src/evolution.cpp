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

#include "optspeed/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "optspeed/error.hpp"

namespace optspeed {

namespace {

constexpr double kFoldMargin = 1e-6;
constexpr double kDefectFoldMargin = 1e-3;
constexpr double kMaxScanSteps = 5e7;

void require_dim(const ComplexMatrix& h, int n) {
  if (h.rows() != n || h.cols() != n) {
    throw Error(ErrorCode::kDimensionMismatch, "Hamiltonian of size " + std::to_string(h.rows()) +
                                                   " for a state of size " + std::to_string(n));
  }
}

// The distance from the start moves no faster than Delta E / hbar, so the
// curve can only touch pi/2 between samples k and k + 1 when the two gaps to
// the fold fit inside one step.
void require_no_fold_between(const Trajectory& traj, std::span<const double> s) {
  const double speed = energy_uncertainty(traj.hamiltonian, traj.states.front()) / traj.units.hbar;
  for (std::size_t k = 0; k + 1 < s.size(); ++k) {
    const double reach = speed * (traj.times[k + 1] - traj.times[k]);
    if (std::numbers::pi - s[k] - s[k + 1] <= reach * (1.0 + 1e-9) + 1e-12) {
      throw Error(ErrorCode::kFoldExceeded, "trajectory may pass pi/2 between samples");
    }
  }
}

void require_ascending(std::span<const double> times) {
  for (std::size_t k = 1; k < times.size(); ++k) {
    if (!(times[k] >= times[k - 1])) {
      throw Error(ErrorCode::kInvalidArgument, "time grid must be ascending");
    }
  }
}

// exp(-iHt/hbar) phi for many t from a single eigendecomposition.
class PurePropagator {
 public:
  PurePropagator(const ComplexMatrix& h, const PureState& phi, const Units& units)
      : eig_(herm_eig(h)), hbar_(units.hbar) {
    units.validate();
    require_dim(h, phi.dim());
    coefficients_ = eig_.vectors.adjoint() * phi.amplitudes();
  }

  ComplexVector at(double t) const {
    ComplexVector c = coefficients_;
    for (Eigen::Index k = 0; k < c.size(); ++k) {
      c[k] *= std::polar(1.0, -eig_.values[k] * t / hbar_);
    }
    return eig_.vectors * c;
  }

 private:
  HermitianEigen eig_;
  double hbar_;
  ComplexVector coefficients_;
};

DensityMatrix conjugate(const ComplexMatrix& u, const DensityMatrix& rho) {
  const ComplexMatrix moved = u * rho.matrix() * u.adjoint();
  return DensityMatrix(0.5 * (moved + moved.adjoint()));
}

}  // namespace

PureState propagate(const ComplexMatrix& h, const PureState& phi, double t, const Units& units) {
  return PureState(PurePropagator(h, phi, units).at(t));
}

DensityMatrix propagate_density(const ComplexMatrix& h, const DensityMatrix& rho, double t,
                                const Units& units) {
  units.validate();
  require_dim(h, rho.dim());
  return conjugate(unitary_exp(h, t, units.hbar), rho);
}

std::vector<double> uniform_grid(double t0, double t1, int steps) {
  if (steps < 0 || !(t1 >= t0)) {
    throw Error(ErrorCode::kInvalidArgument, "uniform_grid needs t1 >= t0 and steps >= 0");
  }
  if (t1 == t0 || steps == 0) return {t0};
  std::vector<double> grid(static_cast<std::size_t>(steps) + 1);
  const double dt = (t1 - t0) / steps;
  for (int k = 0; k <= steps; ++k) grid[k] = t0 + k * dt;
  grid.back() = t1;
  return grid;
}

Trajectory sample_trajectory(const ComplexMatrix& h, const PureState& phi,
                             std::span<const double> times, const Units& units) {
  require_ascending(times);
  const PurePropagator propagator(h, phi, units);
  Trajectory traj{{times.begin(), times.end()}, {}, h, units};
  traj.states.reserve(times.size());
  for (double t : times) traj.states.emplace_back(propagator.at(t));
  return traj;
}

DensityTrajectory sample_trajectory(const ComplexMatrix& h, const DensityMatrix& rho,
                                    std::span<const double> times, const Units& units) {
  require_ascending(times);
  units.validate();
  require_dim(h, rho.dim());
  const HermitianEigen eig = herm_eig(h);
  DensityTrajectory traj{{times.begin(), times.end()}, {}, h, units};
  traj.states.reserve(times.size());
  for (double t : times) traj.states.push_back(conjugate(unitary_exp(eig, t, units.hbar), rho));
  return traj;
}

std::vector<double> fs_speed_profile(const Trajectory& traj) {
  const std::size_t count = traj.states.size();
  if (count < 3 || traj.times.size() != count) {
    throw Error(ErrorCode::kInvalidArgument, "speed profile needs at least three samples");
  }
  const double h = traj.times[1] - traj.times[0];
  if (!(h > 0.0)) throw Error(ErrorCode::kInvalidArgument, "grid step must be positive");
  for (std::size_t k = 1; k < count; ++k) {
    if (std::abs((traj.times[k] - traj.times[k - 1]) - h) > 1e-9 * std::max(1.0, h)) {
      throw Error(ErrorCode::kInvalidArgument, "speed profile needs a uniform grid");
    }
  }
  std::vector<double> s(count);
  for (std::size_t k = 0; k < count; ++k) {
    s[k] = fs_distance(traj.states[0], traj.states[k]);
    if (s[k] >= std::numbers::pi / 2 - kFoldMargin) {
      throw Error(ErrorCode::kFoldExceeded, "distance reaches pi/2 inside the window");
    }
  }
  require_no_fold_between(traj, s);
  std::vector<double> speed(count);
  speed[0] = (-3.0 * s[0] + 4.0 * s[1] - s[2]) / (2.0 * h);
  for (std::size_t k = 1; k + 1 < count; ++k) speed[k] = (s[k + 1] - s[k - 1]) / (2.0 * h);
  speed[count - 1] = (3.0 * s[count - 1] - 4.0 * s[count - 2] + s[count - 3]) / (2.0 * h);
  return speed;
}

double geodesic_defect(const Trajectory& traj) {
  const std::size_t count = traj.states.size();
  if (count < 2) return 0.0;
  if (traj.times.size() != count) {
    throw Error(ErrorCode::kInvalidArgument, "times and states differ in length");
  }
  std::vector<double> s(count);
  for (std::size_t k = 0; k < count; ++k) {
    s[k] = fs_distance(traj.states[0], traj.states[k]);
    if (s[k] > std::numbers::pi / 2 - kDefectFoldMargin) {
      throw Error(ErrorCode::kFoldExceeded, "trajectory leaves the window below pi/2");
    }
  }
  require_no_fold_between(traj, s);
  double path = 0.0;
  for (std::size_t k = 1; k < count; ++k) path += fs_distance(traj.states[k - 1], traj.states[k]);
  return path - fs_distance(traj.states.front(), traj.states.back());
}

double subspace_leakage(const Trajectory& traj, const PureState& phi, const PureState& psi) {
  if (phi.dim() != psi.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "phi and psi differ in dimension");
  }
  const ComplexVector& a = phi.amplitudes();
  ComplexMatrix plane(a.size(), 1);
  plane.col(0) = a;
  const ComplexVector perp = psi.amplitudes() - a * a.dot(psi.amplitudes());
  if (perp.norm() > 1e-12) {
    plane.conservativeResize(Eigen::NoChange, 2);
    plane.col(1) = perp / perp.norm();
  }
  double worst = 0.0;
  for (const PureState& state : traj.states) {
    if (state.dim() != phi.dim()) {
      throw Error(ErrorCode::kDimensionMismatch, "trajectory and reference states differ");
    }
    const ComplexVector& v = state.amplitudes();
    worst = std::max(worst, (v - plane * (plane.adjoint() * v)).norm());
  }
  return std::clamp(worst, 0.0, 1.0);
}

namespace {

struct Minimum {
  double t;
  double value;
};

Minimum golden_section(const std::function<double(double)>& f, double a, double b) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  Minimum best = fc <= fd ? Minimum{c, fc} : Minimum{d, fd};
  for (int iter = 0; iter < 200; ++iter) {
    if (b - a <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(a))) break;
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
    if (fc < best.value) best = {c, fc};
    if (fd < best.value) best = {d, fd};
  }
  return best;
}

}  // namespace

std::optional<double> first_dip_below(const std::function<double(double)>& distance, double step,
                                      double horizon, double threshold, double lipschitz) {
  if (!(horizon > 0.0) || !std::isfinite(horizon)) {
    throw Error(ErrorCode::kInvalidArgument, "horizon must be positive and finite");
  }
  const double d0 = distance(0.0);
  if (d0 <= threshold) return 0.0;
  if (!(step > 0.0) || !std::isfinite(step)) return std::nullopt;
  const double steps = std::ceil(horizon / step);
  if (steps > kMaxScanSteps) {
    throw Error(ErrorCode::kInvalidArgument, "horizon spans too many scan steps");
  }
  const auto last = static_cast<long>(steps);
  auto time_at = [&](long k) { return k >= last ? horizon : static_cast<double>(k) * step; };
  const double slack = threshold + 1.01 * lipschitz * step;

  double prev = d0;
  double cur = distance(time_at(1));
  if (d0 <= cur && d0 <= slack) {
    const Minimum m = golden_section(distance, 0.0, time_at(1));
    if (m.value <= threshold) return m.t;
  }
  for (long k = 1; k <= last; ++k) {
    const double next = k < last ? distance(time_at(k + 1)) : cur;
    if (cur <= prev && cur <= next && cur <= slack) {
      const Minimum m = golden_section(distance, time_at(k - 1), time_at(std::min(k + 1, last)));
      if (m.value <= threshold) return m.t;
    }
    prev = cur;
    cur = next;
  }
  return std::nullopt;
}

std::optional<double> first_arrival_time_density(const ComplexMatrix& h,
                                                 const DensityMatrix& rho,
                                                 const DensityMatrix& target, double horizon,
                                                 const Units& units, double trace_tolerance) {
  units.validate();
  require_dim(h, rho.dim());
  require_dim(h, target.dim());
  const HermitianEigen eig = herm_eig(h);
  const auto n = eig.values.size();
  const double spread = eig.values[n - 1] - eig.values[0];
  auto distance = [&](double t) {
    const ComplexMatrix u = unitary_exp(eig, t, units.hbar);
    const ComplexMatrix diff = u * rho.matrix() * u.adjoint() - target.matrix();
    return trace_norm(0.5 * (diff + diff.adjoint()));
  };
  // d/dt rho = -i[H, rho]/hbar, and ||[H, rho]||_1 <= spread.
  const double lipschitz = spread / units.hbar;
  const double step = spread > 0.0 ? 0.01 * units.hbar / (0.5 * spread) : 0.0;
  return first_dip_below(distance, step, horizon, trace_tolerance, lipschitz);
}

}  // namespace optspeed
