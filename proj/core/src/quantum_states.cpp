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

#include "optspeed/quantum_states.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "optspeed/error.hpp"

namespace optspeed {

namespace {

constexpr double kNormTolerance = 1e-12;
constexpr double kRankOneTolerance = 1e-10;
constexpr double kOrthonormalTolerance = 1e-10;
constexpr double kTransportTolerance = 1e-9;

void require_dim(const ComplexMatrix& h, int n) {
  if (h.rows() != n || h.cols() != n) {
    throw Error(ErrorCode::kDimensionMismatch, "operator of size " + std::to_string(h.rows()) +
                                                   " applied to a state of size " +
                                                   std::to_string(n));
  }
}

}  // namespace

void Units::validate() const {
  if (!(hbar > 0.0) || !std::isfinite(hbar)) {
    throw Error(ErrorCode::kInvalidArgument, "hbar must be positive and finite");
  }
}

// ---------------------------------------------------------------------------
// PureState

PureState::PureState(ComplexVector amplitudes) : v_(std::move(amplitudes)) {
  if (v_.size() < 1) throw Error(ErrorCode::kNotNormalized, "empty state vector");
  const double norm = v_.norm();
  if (!(std::abs(norm - 1.0) <= kNormTolerance)) {
    throw Error(ErrorCode::kNotNormalized, "state norm is " + std::to_string(norm));
  }
}

PureState PureState::normalized(const ComplexVector& v) {
  const double norm = v.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw Error(ErrorCode::kNotNormalized, "cannot normalize a zero or non-finite vector");
  }
  return PureState(v / norm);
}

PureState PureState::basis(int n, int k) {
  if (n < 1 || k < 0 || k >= n) {
    throw Error(ErrorCode::kInvalidArgument, "basis index out of range");
  }
  return PureState(ComplexVector::Unit(n, k).cast<Complex>());
}

PureState PureState::gauge_fixed() const { return PureState(optspeed::gauge_fixed(v_)); }

// ---------------------------------------------------------------------------
// DensityMatrix

DensityMatrix::DensityMatrix(ComplexMatrix rho) : rho_(std::move(rho)) {
  require_square(rho_);
  if (!is_hermitian(rho_)) throw Error(ErrorCode::kInvalidDensity, "density is not Hermitian");
  const Complex trace = rho_.trace();
  if (std::abs(trace - Complex(1.0, 0.0)) > kNormTolerance) {
    throw Error(ErrorCode::kInvalidDensity, "trace is " + std::to_string(trace.real()));
  }
  if (spectrum()[0] < -kNormTolerance) {
    throw Error(ErrorCode::kInvalidDensity, "density has a negative eigenvalue");
  }
}

RealVector DensityMatrix::spectrum() const {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(rho_, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

// ---------------------------------------------------------------------------
// QuasiPureSpec

void QuasiPureSpec::validate() const {
  const auto n = static_cast<int>(basis.size());
  if (n < 2) throw Error(ErrorCode::kInvalidSpec, "quasi-pure states need n >= 2");
  if (!(p1 >= 0.0) || !(p2 >= 0.0)) throw Error(ErrorCode::kInvalidSpec, "negative weight");
  if (std::abs(p1 - p2) <= kNormTolerance) {
    throw Error(ErrorCode::kInvalidSpec, "p1 and p2 must differ");
  }
  if (std::abs(p1 + (n - 1) * p2 - 1.0) > kNormTolerance) {
    throw Error(ErrorCode::kInvalidSpec, "p1 + (n-1) p2 must equal 1");
  }
  for (int i = 0; i < n; ++i) {
    if (basis[i].dim() != n) {
      throw Error(ErrorCode::kInvalidSpec, "basis vectors must have length n");
    }
    for (int j = 0; j < i; ++j) {
      if (std::abs(basis[i].amplitudes().dot(basis[j].amplitudes())) > kOrthonormalTolerance) {
        throw Error(ErrorCode::kInvalidSpec, "basis is not orthonormal");
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Geometry and uncertainty

double fs_distance(const PureState& phi, const PureState& psi) {
  if (phi.dim() != psi.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "fs_distance on states of different dimension");
  }
  return ray_distance(phi.amplitudes(), psi.amplitudes());
}

double energy_uncertainty(const ComplexMatrix& h, const PureState& phi) {
  require_hermitian(h);
  require_dim(h, phi.dim());
  const ComplexVector& v = phi.amplitudes();
  const ComplexVector hv = h * v;
  const double mean = v.dot(hv).real();
  // ||(H - <H>) phi||^2 is the variance and cannot go negative.
  return (hv - mean * v).norm();
}

double energy_uncertainty(const ComplexMatrix& h, const DensityMatrix& rho) {
  require_hermitian(h);
  require_dim(h, rho.dim());
  const double mean = (h * rho.matrix()).trace().real();
  const ComplexMatrix centered = h - mean * identity(h.rows());
  double variance = (centered * centered * rho.matrix()).trace().real();
  if (variance < 0.0 && variance > -kNormTolerance) variance = 0.0;
  return std::sqrt(std::max(0.0, variance));
}

MaxUncertainty energy_uncertainty_max(const ComplexMatrix& h, const Tolerances& tol) {
  const HermitianEigen eig = herm_eig(h, tol);
  const auto n = eig.values.size();
  const ComplexVector low = eig.vectors.col(0);
  const ComplexVector high = eig.vectors.col(n - 1);
  if (n == 1) return {0.0, PureState(low), DensityMatrix(low * low.adjoint())};
  const ComplexVector witness = (high + low) / std::sqrt(2.0);
  const ComplexMatrix mixture = 0.5 * (high * high.adjoint() + low * low.adjoint());
  return {0.5 * (eig.values[n - 1] - eig.values[0]), PureState::normalized(witness),
          DensityMatrix(mixture)};
}

DensityMatrix projector(const PureState& phi) {
  const ComplexVector& v = phi.amplitudes();
  return DensityMatrix(v * v.adjoint());
}

PureState state_from_projector(const DensityMatrix& rho) {
  const HermitianEigen eig = herm_eig(rho.matrix());
  const auto n = eig.values.size();
  if (n >= 2 && eig.values[n - 2] > kRankOneTolerance) {
    throw Error(ErrorCode::kNotRankOne,
                "second largest eigenvalue is " + std::to_string(eig.values[n - 2]));
  }
  return PureState::normalized(gauge_fixed(eig.vectors.col(n - 1)));
}

DensityMatrix quasi_pure(const QuasiPureSpec& spec) {
  spec.validate();
  const int n = static_cast<int>(spec.basis.size());
  ComplexMatrix rho = zeros(n);
  for (int i = 0; i < n; ++i) {
    const ComplexVector& v = spec.basis[i].amplitudes();
    rho += (i == 0 ? spec.p1 : spec.p2) * (v * v.adjoint());
  }
  return DensityMatrix(0.5 * (rho + rho.adjoint()));
}

bool quasi_pure_transport(const QuasiPureSpec& from, const QuasiPureSpec& to,
                          const ComplexMatrix& u) {
  from.validate();
  to.validate();
  if (from.basis.size() != to.basis.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "quasi-pure states of different dimension");
  }
  require_dim(u, static_cast<int>(from.basis.size()));
  if (!is_unitary(u)) throw Error(ErrorCode::kNotUnitary, "transport needs a unitary");
  if (std::abs(from.p1 - to.p1) > kNormTolerance || std::abs(from.p2 - to.p2) > kNormTolerance) {
    throw Error(ErrorCode::kSpectraMismatch, "quasi-pure weights differ");
  }
  const ComplexVector image = u * from.basis[0].amplitudes();
  if (ray_distance(image, to.basis[0].amplitudes()) > kTransportTolerance) {
    throw Error(ErrorCode::kDistinguishedStateNotMapped,
                "U does not carry the distinguished state onto the target's");
  }
  const ComplexMatrix moved = u * quasi_pure(from).matrix() * u.adjoint();
  return (moved - quasi_pure(to).matrix()).norm() <= kTransportTolerance;
}

}  // namespace optspeed
