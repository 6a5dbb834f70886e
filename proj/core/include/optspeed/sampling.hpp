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

#include <random>
#include <vector>

#include "optspeed/lie_flag.hpp"
#include "optspeed/numerics.hpp"
#include "optspeed/quantum_states.hpp"

/// Seeded random instances for property checks and benchmarks.
namespace optspeed::sampling {

ComplexVector gaussian_vector(int n, std::mt19937_64& rng);
ComplexMatrix gaussian_matrix(int n, std::mt19937_64& rng);

/// GUE-like Hermitian matrix with entries of order `scale`.
ComplexMatrix random_hermitian(int n, std::mt19937_64& rng, double scale = 1.0);
/// Haar-distributed unitary.
ComplexMatrix random_unitary(int n, std::mt19937_64& rng);
PureState random_state(int n, std::mt19937_64& rng);
/// Generic element of su(n).
SuVector random_su(int n, std::mt19937_64& rng, double scale = 1.0);

/// Constructed equigeodesic vector for blocks (1, n-1): A x = i alpha x with
/// A != 0 for n >= 3. For n = 2 the only solutions lie in m (alpha = 0, A = 0).
SuVector random_equigeodesic(int n, std::mt19937_64& rng);

/// Orthonormal basis of C^n whose first element is exactly `first`.
std::vector<PureState> random_basis_with_first(const PureState& first, std::mt19937_64& rng);

/// Unitary U with U phi = psi exactly (up to rounding), random elsewhere.
ComplexMatrix random_unitary_mapping(const PureState& phi, const PureState& psi,
                                     std::mt19937_64& rng);

}  // namespace optspeed::sampling
