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
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "optspeed/numerics.hpp"

namespace optspeed {

/// Partition (n_1, ..., n_t) of n. Block i occupies rows/cols
/// [offset(i), offset(i) + size(i)).
class BlockStructure {
 public:
  /// Throws kMalformedBlocks unless t >= 2 and every part is positive.
  explicit BlockStructure(std::vector<int> parts);

  /// Blocks (1, n - 1): the flag manifold of pure states.
  static BlockStructure pure_state(int n);

  int dim() const noexcept { return dim_; }
  int count() const noexcept { return static_cast<int>(parts_.size()); }
  int size(int block) const { return parts_.at(block); }
  int offset(int block) const { return offsets_.at(block); }
  const std::vector<int>& parts() const noexcept { return parts_; }

  bool is_pure_state() const noexcept { return count() == 2 && parts_[0] == 1; }
  /// (n - 1, 1); the same manifold with the distinguished line last.
  bool is_pure_state_mirrored() const noexcept { return count() == 2 && parts_[1] == 1; }

  /// View of block (i, j) of m.
  auto block(const ComplexMatrix& m, int i, int j) const {
    return m.block(offset(i), offset(j), size(i), size(j));
  }
  auto block(ComplexMatrix& m, int i, int j) const {
    return m.block(offset(i), offset(j), size(i), size(j));
  }

  bool operator==(const BlockStructure&) const = default;

 private:
  std::vector<int> parts_;
  std::vector<int> offsets_;
  int dim_ = 0;
};

/// Element of su(n): skew-Hermitian and traceless.
class SuVector {
 public:
  /// Validates skew-Hermitian and traceless within the structural tolerance
  /// (scaled by max(1, ||m||)). Violations are rejected, never repaired.
  explicit SuVector(ComplexMatrix m, const Tolerances& tol = {});

  static SuVector zero(int n) { return SuVector(zeros(n), Unchecked{}); }

  /// i*alpha in the corner, x below it, A in the (n-1)x(n-1) block and
  /// -x^dagger to the right. A must satisfy Tr(A) = -i*alpha.
  static SuVector from_blocks(double alpha, const ComplexVector& x, const ComplexMatrix& a,
                              const Tolerances& tol = {});

  const ComplexMatrix& matrix() const noexcept { return m_; }
  int dim() const noexcept { return static_cast<int>(m_.rows()); }

  /// Corner coefficient alpha with X(0,0) = i*alpha.
  double alpha() const { return m_(0, 0).imag(); }
  /// Column below the corner.
  ComplexVector x() const { return m_.col(0).tail(m_.rows() - 1); }
  /// Lower-right (n-1)x(n-1) block.
  ComplexMatrix a() const { return m_.bottomRightCorner(m_.rows() - 1, m_.cols() - 1); }

  SuVector operator+(const SuVector& o) const;
  SuVector operator-(const SuVector& o) const;
  SuVector operator*(double s) const { return SuVector(m_ * s, Unchecked{}); }

  /// Wraps a matrix the caller already knows to lie in su(n) (closed-form
  /// results of brackets, projections, conjugations).
  static SuVector unchecked(ComplexMatrix m) { return SuVector(std::move(m), Unchecked{}); }

 private:
  struct Unchecked {};
  SuVector(ComplexMatrix m, Unchecked) : m_(std::move(m)) {}

  ComplexMatrix m_;
};

/// Invariant metric on a flag manifold: one positive multiplier per
/// off-diagonal block pair (i, j), i > j.
class MetricOperator {
 public:
  /// mu is indexed row-major over pairs with i > j:
  /// (1,0), (2,0), (2,1), (3,0), ... (zero-based block indices).
  MetricOperator(BlockStructure blocks, std::vector<double> mu);

  static MetricOperator uniform(BlockStructure blocks, double mu = 1.0);
  /// Multipliers drawn log-uniformly on [lo, hi].
  static MetricOperator random(BlockStructure blocks, std::mt19937_64& rng, double lo = 0.1,
                               double hi = 10.0);

  const BlockStructure& blocks() const noexcept { return blocks_; }
  double mu(int i, int j) const;
  std::span<const double> multipliers() const noexcept { return mu_; }

  static int pair_index(int i, int j) { return i * (i - 1) / 2 + j; }

 private:
  BlockStructure blocks_;
  std::vector<double> mu_;
};

/// (X, Y) = -B(X, Y) = -2n Tr(XY), B the Killing form of su(n).
double killing_inner(const SuVector& x, const SuVector& y);
double killing_norm(const SuVector& x);

struct ReductiveSplit {
  SuVector isotropy;  // block-diagonal part (k)
  SuVector tangent;   // off-diagonal blocks (m)
};

ReductiveSplit reductive_split(const SuVector& x, const BlockStructure& blocks);
SuVector m_projection(const SuVector& x, const BlockStructure& blocks);

/// Scales block (i, j) and its mirror (j, i) by mu_ij. The input must have
/// vanishing diagonal blocks (kStructureMismatch otherwise).
SuVector apply_metric(const MetricOperator& metric, const SuVector& tangent,
                      const Tolerances& tol = {});

/// Lie bracket XY - YX.
SuVector bracket(const SuVector& x, const SuVector& y);

/// Ad(U)X = U X U^dagger. Throws kNotUnitary.
SuVector ad_conjugate(const ComplexMatrix& u, const SuVector& x, const Tolerances& tol = {});

/// exp(tX), the homogeneous curve through the origin, as a unitary matrix.
ComplexMatrix coset_orbit(const SuVector& x, double t);

struct StructuralCheck {
  bool equigeodesic = false;
  /// Normalized residual of the criterion that was applied.
  double residual = 0.0;
  /// Two blocks of sizes (k, n - k) with k, n - k > 1: the block-product test
  /// has no distinct triple, so the answer carries no information.
  bool vacuous = false;
};

/// Block criterion for X generating an equigeodesic through the origin.
///   (1, n-1):  ||A x - i alpha x|| <= 1e-9 * max(1, ||A|| ||x||)
///   (n-1, 1):  same test with the roles of the two blocks swapped
///   t >= 3:    max over distinct i, j, k of ||X_ij X_jk|| <= 1e-9 * max(1, ||X_m||^2)
StructuralCheck equigeodesic_structural(const SuVector& x, const BlockStructure& blocks,
                                        double tol = 1e-9);
bool is_equigeodesic_structural(const SuVector& x, const BlockStructure& blocks,
                                double tol = 1e-9);

struct VariationalCheck {
  bool equigeodesic = false;
  double max_residual = 0.0;
};

/// Checks [X, Lambda X_m]_m = 0 for `samples` random metric operators.
/// Residual: Killing norm of the projected bracket over max(1, (X, X)).
VariationalCheck is_equigeodesic_variational(const SuVector& x, const BlockStructure& blocks,
                                             int samples, std::uint64_t seed,
                                             double tol = 1e-9);

/// Residual of the bracket test for one fixed metric operator.
double variational_residual(const SuVector& x, const MetricOperator& metric);

}  // namespace optspeed
