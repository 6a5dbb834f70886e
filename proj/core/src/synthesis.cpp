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

#include "optspeed/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "optspeed/error.hpp"
#include "optspeed/evolution.hpp"

namespace optspeed {

namespace {

constexpr double kCoincidentDistance = 1e-10;

void require_same_dim(const PureState& phi, const PureState& psi) {
  if (phi.dim() != psi.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "states of dimension " + std::to_string(phi.dim()) +
                                                   " and " + std::to_string(psi.dim()));
  }
}

void require_dim(const ComplexMatrix& h, int n) {
  require_square(h);
  if (h.rows() != n) {
    throw Error(ErrorCode::kDimensionMismatch, "Hamiltonian of size " + std::to_string(h.rows()) +
                                                   " for a state of size " + std::to_string(n));
  }
}

void require_energy(double energy) {
  if (!(energy > 0.0) || !std::isfinite(energy)) {
    throw Error(ErrorCode::kInvalidArgument, "energy must be positive and finite");
  }
}

ComplexMatrix traceless_part(const ComplexMatrix& h) {
  const auto n = h.rows();
  return h - (h.trace() / static_cast<double>(n)) * identity(n);
}

double half_spread(const ComplexMatrix& h) {
  const HermitianEigen eig = herm_eig(h);
  return 0.5 * (eig.values[eig.values.size() - 1] - eig.values[0]);
}

}  // namespace

ComplexMatrix HamiltonianBlocks::reassemble() const {
  const auto k = x.size();
  ComplexMatrix local(k + 1, k + 1);
  local(0, 0) = alpha;
  local.col(0).tail(k) = x;
  local.row(0).tail(k) = x.adjoint();
  local.bottomRightCorner(k, k) = a;
  return basis * local * basis.adjoint();
}

ComplexMatrix adapted_basis(const PureState& phi) {
  const ComplexVector& v = phi.amplitudes();
  const auto n = v.size();
  Eigen::Index pivot = 0;
  v.cwiseAbs().maxCoeff(&pivot);

  ComplexMatrix u(n, n);
  u.col(0) = v;
  Eigen::Index filled = 1;
  for (Eigen::Index j = 0; j < n; ++j) {
    if (j == pivot) continue;
    ComplexVector e = ComplexVector::Unit(n, j);
    // Two passes of modified Gram-Schmidt.
    for (int pass = 0; pass < 2; ++pass) {
      for (Eigen::Index c = 0; c < filled; ++c) e -= u.col(c) * u.col(c).dot(e);
    }
    u.col(filled++) = e / e.norm();
  }
  if (n >= 2) {
    const Complex det = u.determinant();
    u.col(n - 1) *= std::conj(det) / std::abs(det);
  }
  return u;
}

HamiltonianBlocks adapted_blocks(const ComplexMatrix& h, const PureState& phi) {
  require_hermitian(h);
  require_dim(h, phi.dim());
  HamiltonianBlocks out;
  out.basis = adapted_basis(phi);
  const ComplexMatrix local = out.basis.adjoint() * h * out.basis;
  const auto k = local.rows() - 1;
  out.alpha = local(0, 0).real();
  out.x = local.col(0).tail(k);
  out.a = local.bottomRightCorner(k, k);
  out.a = 0.5 * (out.a + out.a.adjoint()).eval();
  return out;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kStationary: return "Stationary";
    case Verdict::kOptimal: return "Optimal";
    case Verdict::kSuboptimal: return "Suboptimal";
  }
  return "Unknown";
}

OptimalityVerdict is_optimal_speed(const ComplexMatrix& h, const PureState& phi, double tol) {
  require_hermitian(h);
  require_dim(h, phi.dim());
  const ComplexMatrix h0 = traceless_part(h);
  const HamiltonianBlocks blocks = adapted_blocks(h0, phi);

  OptimalityVerdict out;
  out.delta_e = blocks.x.norm();
  out.delta_e_max = half_spread(h);
  if (out.delta_e <= 1e-10 * std::max(1.0, h0.norm())) {
    out.kind = Verdict::kStationary;
    return out;
  }
  const double a_norm = blocks.a.norm();
  const ComplexVector defect = blocks.a * blocks.x - blocks.alpha * blocks.x;
  out.residual = defect.norm() / std::max(1.0, a_norm * out.delta_e);
  out.kind = (a_norm <= tol || out.residual <= tol) ? Verdict::kOptimal : Verdict::kSuboptimal;
  return out;
}

SynthesizedHamiltonian optimal_hamiltonian(const PureState& phi, const PureState& psi,
                                           double energy) {
  require_same_dim(phi, psi);
  require_energy(energy);
  const ComplexVector& a = phi.amplitudes();
  const Complex overlap = a.dot(psi.amplitudes());
  ComplexVector target = psi.amplitudes();
  if (std::abs(overlap) > 0.0) target *= std::conj(overlap) / std::abs(overlap);
  const ComplexVector perp = target - a * a.dot(target);
  const double distance = std::atan2(perp.norm(), std::abs(overlap));

  const auto n = a.size();
  if (distance <= kCoincidentDistance) return {zeros(n), distance, true};
  const ComplexVector chi = perp / perp.norm();
  const ComplexMatrix h = kI * energy * (chi * a.adjoint() - a * chi.adjoint());
  return {0.5 * (h + h.adjoint()), distance, false};
}

ComplexMatrix optimal_family_member(const PureState& phi, const PureState& psi, double energy,
                                    double alpha, const ComplexMatrix& b) {
  const SynthesizedHamiltonian core = optimal_hamiltonian(phi, psi, energy);
  if (core.coincident) return core.hamiltonian;
  const auto n = phi.dim();
  if (b.rows() != n - 1 || b.cols() != n - 1) {
    throw Error(ErrorCode::kDimensionMismatch, "extension block must be (n-1)x(n-1)");
  }
  require_hermitian(b);

  const ComplexMatrix u = adapted_basis(phi);
  const auto complement = u.rightCols(n - 1);
  const ComplexVector x = complement.adjoint() * (core.hamiltonian * phi.amplitudes());
  const ComplexVector xhat = x / x.norm();
  const ComplexMatrix away = identity(n - 1) - xhat * xhat.adjoint();

  ComplexMatrix local = zeros(n);
  local(0, 0) = alpha;
  local.bottomRightCorner(n - 1, n - 1) = alpha * xhat * xhat.adjoint() + away * b * away;
  ComplexMatrix h = core.hamiltonian + u * local * u.adjoint();
  return 0.5 * (h + h.adjoint());
}

ComplexMatrix optimal_family_sample(const PureState& phi, const PureState& psi, double energy,
                                    std::uint64_t seed) {
  require_same_dim(phi, psi);
  require_energy(energy);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(-2.0, 2.0);
  std::normal_distribution<double> normal(0.0, 1.0);
  const double alpha = energy * uniform(rng);
  const int k = phi.dim() - 1;
  ComplexMatrix g(k, k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) g(i, j) = Complex(normal(rng), normal(rng));
  }
  const ComplexMatrix b = 0.5 * energy * (g + g.adjoint());
  return optimal_family_member(phi, psi, energy, alpha, b);
}

double qsl_time(const PureState& phi, const PureState& psi, const ComplexMatrix& h,
                const Units& units) {
  units.validate();
  require_same_dim(phi, psi);
  const double delta_e = energy_uncertainty(h, phi);
  if (delta_e <= 1e-10 * std::max(1.0, h.norm())) {
    throw Error(ErrorCode::kStationaryState, "the initial state is stationary under H");
  }
  return units.hbar * fs_distance(phi, psi) / delta_e;
}

std::optional<double> first_arrival_time(const ComplexMatrix& h, const PureState& phi,
                                         const PureState& psi, double horizon,
                                         const Units& units, const ArrivalOptions& options) {
  units.validate();
  require_same_dim(phi, psi);
  require_hermitian(h);
  require_dim(h, phi.dim());
  const HermitianEigen eig = herm_eig(h);
  const ComplexVector coefficients = eig.vectors.adjoint() * phi.amplitudes();
  const ComplexVector& target = psi.amplitudes();
  auto distance = [&](double t) {
    ComplexVector c = coefficients;
    for (Eigen::Index k = 0; k < c.size(); ++k) {
      c[k] *= std::polar(1.0, -eig.values[k] * t / units.hbar);
    }
    return ray_distance(target, eig.vectors * c);
  };
  const auto n = eig.values.size();
  const double delta_max = 0.5 * (eig.values[n - 1] - eig.values[0]);
  const double step = delta_max > 0.0 ? options.step_fraction * units.hbar / delta_max : 0.0;
  // Minimising the ray distance s locates the same point as minimising
  // sin^2(s), with a V-shaped rather than quadratic minimum.
  const double threshold = std::asin(std::sqrt(options.infidelity_tolerance));
  return first_dip_below(distance, step, horizon, threshold, delta_max / units.hbar);
}

EquigeodesicVector equigeodesic_vector_of(const ComplexMatrix& h, const PureState& phi) {
  const OptimalityVerdict verdict = is_optimal_speed(h, phi);
  if (verdict.kind != Verdict::kOptimal) {
    throw Error(ErrorCode::kNotOptimal,
                "verdict is " + std::string(to_string(verdict.kind)) + ", not Optimal");
  }
  const ComplexMatrix h0 = traceless_part(h);
  ComplexMatrix x = -kI * h0;
  x = 0.5 * (x - x.adjoint()).eval();
  return {SuVector(std::move(x)), adapted_basis(phi)};
}

}  // namespace optspeed
