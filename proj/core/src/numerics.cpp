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

#include "optspeed/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "optspeed/error.hpp"

namespace optspeed {

void Tolerances::validate() const {
  if (!(structural > 0.0) || !(spectral > 0.0) || !(search > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "tolerances must be strictly positive");
  }
}

double frobenius(const ComplexMatrix& m) { return m.norm(); }

void require_square(const ComplexMatrix& m) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw Error(ErrorCode::kDimensionMismatch,
                "expected a non-empty square matrix, got " + std::to_string(m.rows()) + "x" +
                    std::to_string(m.cols()));
  }
}

bool is_hermitian(const ComplexMatrix& m, const Tolerances& tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).norm() <= tol.structural * std::max(1.0, m.norm());
}

bool is_skew_hermitian(const ComplexMatrix& m, const Tolerances& tol) {
  if (m.rows() != m.cols()) return false;
  return (m + m.adjoint()).norm() <= tol.structural * std::max(1.0, m.norm());
}

bool is_unitary(const ComplexMatrix& m, const Tolerances& tol) {
  if (m.rows() != m.cols()) return false;
  const auto n = m.rows();
  return (m.adjoint() * m - identity(n)).norm() <= tol.structural * std::max(1.0, m.norm());
}

void require_hermitian(const ComplexMatrix& m, const Tolerances& tol) {
  require_square(m);
  if (!is_hermitian(m, tol)) {
    throw Error(ErrorCode::kNotHermitian,
                "||H - H^dagger|| = " + std::to_string((m - m.adjoint()).norm()));
  }
}

ComplexVector gauge_fixed(const ComplexVector& v, double threshold) {
  if (v.size() == 0) return v;
  const double largest = v.cwiseAbs().maxCoeff();
  if (largest == 0.0) return v;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double mag = std::abs(v[i]);
    if (mag >= threshold * largest) {
      return v * (std::conj(v[i]) / mag);
    }
  }
  return v;
}

namespace {

// Canonical orthonormal basis of the span of `block`'s columns: greedily pick
// the standard basis vector with the largest remaining projection.
ComplexMatrix canonical_basis(const ComplexMatrix& block) {
  const auto n = block.rows();
  const auto k = block.cols();
  const ComplexMatrix projector = block * block.adjoint();
  ComplexMatrix chosen(n, k);
  for (Eigen::Index c = 0; c < k; ++c) {
    ComplexMatrix residual = projector;
    if (c > 0) {
      const auto q = chosen.leftCols(c);
      residual -= q * q.adjoint();
    }
    Eigen::Index best = 0;
    double best_norm = -1.0;
    for (Eigen::Index j = 0; j < n; ++j) {
      const double norm = residual.col(j).norm();
      if (norm > best_norm) {
        best_norm = norm;
        best = j;
      }
    }
    ComplexVector v = residual.col(best);
    if (c > 0) {
      const auto q = chosen.leftCols(c);
      v -= q * (q.adjoint() * v);
    }
    chosen.col(c) = v / v.norm();
  }
  return chosen;
}

}  // namespace

HermitianEigen herm_eig(const ComplexMatrix& h, const Tolerances& tol) {
  require_hermitian(h, tol);
  const ComplexMatrix sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::kConvergenceFailure, "Hermitian eigensolver did not converge");
  }
  HermitianEigen out{solver.eigenvalues(), solver.eigenvectors()};

  const auto n = out.values.size();
  const double gap = tol.spectral * std::max(1.0, sym.norm());
  Eigen::Index start = 0;
  while (start < n) {
    Eigen::Index end = start + 1;
    while (end < n && out.values[end] - out.values[end - 1] <= gap) ++end;
    if (end - start == 1) {
      out.vectors.col(start) = gauge_fixed(out.vectors.col(start));
    } else {
      out.vectors.middleCols(start, end - start) =
          canonical_basis(out.vectors.middleCols(start, end - start));
    }
    start = end;
  }
  return out;
}

ComplexMatrix unitary_exp(const HermitianEigen& eig, double t, double hbar) {
  if (!(hbar > 0.0)) throw Error(ErrorCode::kInvalidArgument, "hbar must be positive");
  const auto n = eig.values.size();
  ComplexVector phases(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    phases[k] = std::polar(1.0, -eig.values[k] * t / hbar);
  }
  return eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
}

ComplexMatrix unitary_exp(const ComplexMatrix& h, double t, double hbar, const Tolerances& tol) {
  if (!(hbar > 0.0)) throw Error(ErrorCode::kInvalidArgument, "hbar must be positive");
  return unitary_exp(herm_eig(h, tol), t, hbar);
}

double ray_distance(const ComplexVector& a, const ComplexVector& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "ray_distance on vectors of different length");
  }
  const Complex overlap = a.dot(b);
  const double perp = (b - a * overlap).norm();
  return std::atan2(perp, std::abs(overlap));
}

double trace_norm(const ComplexMatrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().cwiseAbs().sum();
}

}  // namespace optspeed
