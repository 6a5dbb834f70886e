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

#include <vector>

#include "optspeed/numerics.hpp"

namespace optspeed {

struct Units {
  double hbar = 1.0;

  /// Throws kInvalidArgument unless hbar > 0.
  void validate() const;
};

/// Unit vector in C^n, understood as a representative of its ray.
class PureState {
 public:
  /// Requires | ||v|| - 1 | <= 1e-12 (kNotNormalized otherwise).
  explicit PureState(ComplexVector amplitudes);

  /// Divides by the norm; throws kNotNormalized for the zero vector.
  static PureState normalized(const ComplexVector& v);
  /// Standard basis vector |k> of C^n.
  static PureState basis(int n, int k);

  const ComplexVector& amplitudes() const noexcept { return v_; }
  int dim() const noexcept { return static_cast<int>(v_.size()); }

  /// Same ray, first significant amplitude real-positive.
  PureState gauge_fixed() const;

 private:
  ComplexVector v_;
};

/// Hermitian, positive semi-definite (eigenvalues >= -1e-12), unit trace.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix rho);

  const ComplexMatrix& matrix() const noexcept { return rho_; }
  int dim() const noexcept { return static_cast<int>(rho_.rows()); }
  /// Ascending eigenvalues.
  RealVector spectrum() const;

 private:
  ComplexMatrix rho_;
};

struct QuasiPureSpec {
  double p1 = 1.0;
  double p2 = 0.0;
  /// Orthonormal basis; basis[0] is the distinguished state.
  std::vector<PureState> basis;

  /// Throws kInvalidSpec if p1 == p2, the weights are negative or do not sum
  /// to one, or the basis is not orthonormal (overlaps above 1e-10).
  void validate() const;
};

/// Fubini-Study distance arccos|<phi|psi>|, in [0, pi/2].
double fs_distance(const PureState& phi, const PureState& psi);

/// Standard deviation of H in the state phi.
double energy_uncertainty(const ComplexMatrix& h, const PureState& phi);
/// Standard deviation of H in a mixed state: sqrt(Tr(H^2 rho) - Tr(H rho)^2).
double energy_uncertainty(const ComplexMatrix& h, const DensityMatrix& rho);

struct MaxUncertainty {
  double value = 0.0;
  /// Balanced superposition of the extreme eigenvectors.
  PureState witness;
  /// The matching balanced two-point mixture of the extreme eigenvectors.
  DensityMatrix mixture;
};

/// Supremum of the energy uncertainty over pure states: half the spectral
/// spread (lambda_max - lambda_min) / 2, attained by the witness.
MaxUncertainty energy_uncertainty_max(const ComplexMatrix& h, const Tolerances& tol = {});

DensityMatrix projector(const PureState& phi);
/// Inverse of projector up to phase; requires the second largest eigenvalue
/// to be at most 1e-10 (kNotRankOne otherwise). Gauge-fixed output.
PureState state_from_projector(const DensityMatrix& rho);

DensityMatrix quasi_pure(const QuasiPureSpec& spec);

/// For quasi-pure states sharing (p1, p2) and a unitary U with U phi_1 on
/// the ray of psi_1, returns whether U rho U^dagger equals the target within
/// 1e-9. Throws kSpectraMismatch when the weights differ and
/// kDistinguishedStateNotMapped when U misses psi_1's ray.
bool quasi_pure_transport(const QuasiPureSpec& from, const QuasiPureSpec& to,
                          const ComplexMatrix& u);

}  // namespace optspeed
