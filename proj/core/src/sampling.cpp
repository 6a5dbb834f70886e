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

#include "optspeed/sampling.hpp"

#include <cmath>

#include "optspeed/error.hpp"

namespace optspeed::sampling {

ComplexVector gaussian_vector(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexVector v(n);
  for (int i = 0; i < n; ++i) v[i] = Complex(normal(rng), normal(rng));
  return v;
}

ComplexMatrix gaussian_matrix(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = Complex(normal(rng), normal(rng));
  }
  return m;
}

ComplexMatrix random_hermitian(int n, std::mt19937_64& rng, double scale) {
  const ComplexMatrix g = gaussian_matrix(n, rng);
  return (0.5 * scale) * (g + g.adjoint());
}

ComplexMatrix random_unitary(int n, std::mt19937_64& rng) {
  const ComplexMatrix g = gaussian_matrix(n, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix& r = qr.matrixQR();
  for (int i = 0; i < n; ++i) {
    const Complex d = r(i, i);
    if (std::abs(d) > 0.0) q.col(i) *= d / std::abs(d);
  }
  return q;
}

PureState random_state(int n, std::mt19937_64& rng) {
  return PureState::normalized(gaussian_vector(n, rng));
}

SuVector random_su(int n, std::mt19937_64& rng, double scale) {
  ComplexMatrix x = kI * random_hermitian(n, rng, scale);
  x -= (x.trace() / static_cast<double>(n)) * identity(n);
  return SuVector::unchecked(0.5 * (x - x.adjoint()));
}

SuVector random_equigeodesic(int n, std::mt19937_64& rng) {
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "equigeodesics need n >= 2");
  const int k = n - 1;
  ComplexVector x = gaussian_vector(k, rng);
  if (n == 2) return SuVector::from_blocks(0.0, x, zeros(1));

  std::normal_distribution<double> normal(0.0, 1.0);
  const double alpha = normal(rng);
  const ComplexVector xhat = x / x.norm();
  const ComplexMatrix away = identity(k) - xhat * xhat.adjoint();
  ComplexMatrix b = away * random_hermitian(k, rng) * away;
  // Tr(A) = i(alpha + Tr b) must equal -i alpha.
  b += ((-2.0 * alpha - b.trace().real()) / (k - 1)) * away;
  const ComplexMatrix a = kI * (alpha * xhat * xhat.adjoint() + b);
  return SuVector::from_blocks(alpha, x, 0.5 * (a - a.adjoint()));
}

std::vector<PureState> random_basis_with_first(const PureState& first, std::mt19937_64& rng) {
  const int n = first.dim();
  ComplexMatrix m = gaussian_matrix(n, rng);
  m.col(0) = first.amplitudes();
  Eigen::HouseholderQR<ComplexMatrix> qr(m);
  const ComplexMatrix q = qr.householderQ();
  std::vector<PureState> basis;
  basis.reserve(n);
  basis.push_back(first);
  for (int i = 1; i < n; ++i) {
    ComplexVector v = q.col(i);
    v -= first.amplitudes() * first.amplitudes().dot(v);
    basis.push_back(PureState::normalized(v));
  }
  return basis;
}

ComplexMatrix random_unitary_mapping(const PureState& phi, const PureState& psi,
                                     std::mt19937_64& rng) {
  if (phi.dim() != psi.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "states of different dimension");
  }
  const int n = phi.dim();
  const auto from = random_basis_with_first(phi, rng);
  const auto to = random_basis_with_first(psi, rng);
  ComplexMatrix a(n, n);
  ComplexMatrix b(n, n);
  for (int i = 0; i < n; ++i) {
    a.col(i) = from[i].amplitudes();
    b.col(i) = to[i].amplitudes();
  }
  ComplexMatrix middle = identity(n);
  if (n > 1) middle.bottomRightCorner(n - 1, n - 1) = random_unitary(n - 1, rng);
  return b * middle * a.adjoint();
}

}  // namespace optspeed::sampling
