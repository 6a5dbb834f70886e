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

#include <complex>

#include <Eigen/Dense>

namespace optspeed {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr Complex kI{0.0, 1.0};

struct Tolerances {
  /// Absolute, scaled by max(1, norm) wherever a predicate says so.
  double structural = 1e-10;
  double spectral = 1e-12;
  double search = 1e-9;

  /// Throws kInvalidArgument unless all tolerances are strictly positive.
  void validate() const;
};

struct HermitianEigen {
  RealVector values;     // ascending
  ComplexMatrix vectors; // columns, unitary
};

/// Eigendecomposition of a Hermitian matrix. Eigenvalues come out ascending;
/// each non-degenerate eigenvector is gauge fixed (first significant entry
/// real-positive) and each degenerate eigenspace gets a canonical basis built
/// by projecting the standard basis into it, so the result does not depend
/// on the solver's internal choice of basis.
HermitianEigen herm_eig(const ComplexMatrix& h, const Tolerances& tol = {});

/// exp(-i h t / hbar) through the eigendecomposition of h.
ComplexMatrix unitary_exp(const ComplexMatrix& h, double t, double hbar = 1.0,
                          const Tolerances& tol = {});

/// Same as unitary_exp, reusing an existing decomposition.
ComplexMatrix unitary_exp(const HermitianEigen& eig, double t, double hbar = 1.0);

double frobenius(const ComplexMatrix& m);

bool is_hermitian(const ComplexMatrix& m, const Tolerances& tol = {});
bool is_skew_hermitian(const ComplexMatrix& m, const Tolerances& tol = {});
bool is_unitary(const ComplexMatrix& m, const Tolerances& tol = {});

/// Throws kNotHermitian if ||m - m^dagger|| > structural * max(1, ||m||).
void require_hermitian(const ComplexMatrix& m, const Tolerances& tol = {});
void require_square(const ComplexMatrix& m);

/// Rotates v by a global phase so that its first entry of magnitude at least
/// `threshold` times the largest entry magnitude is real and positive.
ComplexVector gauge_fixed(const ComplexVector& v, double threshold = 1e-8);

/// Distance between the rays of two unit vectors, atan2(|perp|, |overlap|),
/// which equals arccos|<a|b>| but stays accurate for nearly parallel rays.
double ray_distance(const ComplexVector& a, const ComplexVector& b);

/// Matrix of all-zero size n x n; shorthand used throughout.
inline ComplexMatrix zeros(Eigen::Index n) { return ComplexMatrix::Zero(n, n); }
inline ComplexMatrix identity(Eigen::Index n) { return ComplexMatrix::Identity(n, n); }

/// Sum of absolute eigenvalues of a Hermitian matrix.
double trace_norm(const ComplexMatrix& hermitian);

}  // namespace optspeed
