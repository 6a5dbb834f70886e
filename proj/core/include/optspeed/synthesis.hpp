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

#include <cstdint>
#include <optional>
#include <string_view>

#include "optspeed/lie_flag.hpp"
#include "optspeed/numerics.hpp"
#include "optspeed/quantum_states.hpp"

namespace optspeed {

/// H written in a basis whose first vector is phi:
///   [[alpha, x^dagger], [x, A]].
struct HamiltonianBlocks {
  double alpha = 0.0;
  ComplexVector x;
  ComplexMatrix a;
  /// Special unitary whose first column is phi; its remaining columns span
  /// the orthogonal complement.
  ComplexMatrix basis;

  ComplexMatrix reassemble() const;
};

/// Deterministic special-unitary completion of phi: phi first, then the
/// standard basis vectors (skipping the one most aligned with phi)
/// orthogonalised in index order, last column rephased to make det = 1.
ComplexMatrix adapted_basis(const PureState& phi);

HamiltonianBlocks adapted_blocks(const ComplexMatrix& h, const PureState& phi);

enum class Verdict { kStationary, kOptimal, kSuboptimal };
std::string_view to_string(Verdict v);

struct OptimalityVerdict {
  Verdict kind = Verdict::kStationary;
  /// ||A x - alpha x|| / max(1, ||A|| ||x||) on the traceless part of H.
  double residual = 0.0;
  double delta_e = 0.0;
  double delta_e_max = 0.0;
};

/// Stationary when phi is an eigenvector of H; otherwise Optimal iff the
/// traceless part of H satisfies A = 0 or A x = alpha x within `tol`.
OptimalityVerdict is_optimal_speed(const ComplexMatrix& h, const PureState& phi,
                                   double tol = 1e-9);

struct SynthesizedHamiltonian {
  ComplexMatrix hamiltonian;
  /// Fubini-Study distance between the two rays.
  double distance = 0.0;
  /// The rays coincide; the Hamiltonian is zero and nothing moves.
  bool coincident = false;
};

/// H = iE(|chi><phi| - |phi><chi|), chi the unit vector with
/// psi ~ cos(s) phi + sin(s) chi after rephasing psi so <phi|psi> >= 0.
SynthesizedHamiltonian optimal_hamiltonian(const PureState& phi, const PureState& psi,
                                           double energy);

/// Member of the optimal family: the canonical Hamiltonian plus a block that
/// acts as `alpha` on span{phi, chi} and as P b P on its complement, where P
/// projects the complement of phi onto the complement of the coupling x.
/// `b` is Hermitian, (n-1)x(n-1), in the coordinates of adapted_basis(phi).
ComplexMatrix optimal_family_member(const PureState& phi, const PureState& psi, double energy,
                                    double alpha, const ComplexMatrix& b);

/// optimal_family_member with alpha and b drawn from a seeded generator.
ComplexMatrix optimal_family_sample(const PureState& phi, const PureState& psi, double energy,
                                    std::uint64_t seed);

/// hbar * s / Delta E_phi(H). Throws kStationaryState when Delta E vanishes.
double qsl_time(const PureState& phi, const PureState& psi, const ComplexMatrix& h,
                const Units& units = {});

struct ArrivalOptions {
  double infidelity_tolerance = 1e-9;
  /// Scan step as a fraction of hbar / Delta E_max(H).
  double step_fraction = 0.01;
};

/// Smallest t in [0, horizon] with 1 - |<psi|phi(t)>|^2 <= tolerance; empty
/// when the trajectory never gets there. Returns 0 if the rays already coincide.
std::optional<double> first_arrival_time(const ComplexMatrix& h, const PureState& phi,
                                         const PureState& psi, double horizon,
                                         const Units& units = {},
                                         const ArrivalOptions& options = {});

struct EquigeodesicVector {
  /// -i(H - Tr(H)/n), an element of su(n).
  SuVector vector;
  /// Base point U with U e_1 = phi.
  ComplexMatrix base;
};

/// Throws kNotOptimal unless is_optimal_speed(h, phi) is Optimal.
EquigeodesicVector equigeodesic_vector_of(const ComplexMatrix& h, const PureState& phi);

}  // namespace optspeed
