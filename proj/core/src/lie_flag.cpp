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

#include "optspeed/lie_flag.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "optspeed/error.hpp"

namespace optspeed {

namespace {

void require_same_dim(const SuVector& x, const SuVector& y) {
  if (x.dim() != y.dim()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "su(" + std::to_string(x.dim()) + ") vs su(" + std::to_string(y.dim()) + ")");
  }
}

void require_blocks_fit(const SuVector& x, const BlockStructure& blocks) {
  if (blocks.dim() != x.dim()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "block structure of size " + std::to_string(blocks.dim()) +
                    " applied to su(" + std::to_string(x.dim()) + ")");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// BlockStructure

BlockStructure::BlockStructure(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.size() < 2) {
    throw Error(ErrorCode::kMalformedBlocks, "a flag needs at least two blocks");
  }
  offsets_.reserve(parts_.size());
  for (int p : parts_) {
    if (p <= 0) throw Error(ErrorCode::kMalformedBlocks, "block sizes must be positive");
    offsets_.push_back(dim_);
    dim_ += p;
  }
}

BlockStructure BlockStructure::pure_state(int n) {
  if (n < 2) throw Error(ErrorCode::kMalformedBlocks, "pure-state flag needs n >= 2");
  return BlockStructure({1, n - 1});
}

// ---------------------------------------------------------------------------
// SuVector

SuVector::SuVector(ComplexMatrix m, const Tolerances& tol) : m_(std::move(m)) {
  require_square(m_);
  const double scale = tol.structural * std::max(1.0, m_.norm());
  if ((m_ + m_.adjoint()).norm() > scale) {
    throw Error(ErrorCode::kNotSkewHermitian,
                "||X + X^dagger|| = " + std::to_string((m_ + m_.adjoint()).norm()));
  }
  if (std::abs(m_.trace()) > scale) {
    throw Error(ErrorCode::kNotTraceless, "|Tr X| = " + std::to_string(std::abs(m_.trace())));
  }
}

SuVector SuVector::from_blocks(double alpha, const ComplexVector& x, const ComplexMatrix& a,
                               const Tolerances& tol) {
  const auto k = x.size();
  if (a.rows() != k || a.cols() != k) {
    throw Error(ErrorCode::kDimensionMismatch, "A must be (n-1)x(n-1) for x of length n-1");
  }
  ComplexMatrix m(k + 1, k + 1);
  m(0, 0) = Complex(0.0, alpha);
  m.col(0).tail(k) = x;
  m.row(0).tail(k) = -x.adjoint();
  m.bottomRightCorner(k, k) = a;
  return SuVector(std::move(m), tol);
}

SuVector SuVector::operator+(const SuVector& o) const {
  require_same_dim(*this, o);
  return SuVector(m_ + o.m_, Unchecked{});
}

SuVector SuVector::operator-(const SuVector& o) const {
  require_same_dim(*this, o);
  return SuVector(m_ - o.m_, Unchecked{});
}

// ---------------------------------------------------------------------------
// MetricOperator

MetricOperator::MetricOperator(BlockStructure blocks, std::vector<double> mu)
    : blocks_(std::move(blocks)), mu_(std::move(mu)) {
  const auto t = static_cast<std::size_t>(blocks_.count());
  if (mu_.size() != t * (t - 1) / 2) {
    throw Error(ErrorCode::kStructureMismatch,
                "expected " + std::to_string(t * (t - 1) / 2) + " multipliers, got " +
                    std::to_string(mu_.size()));
  }
  for (double m : mu_) {
    if (!(m > 0.0) || !std::isfinite(m)) {
      throw Error(ErrorCode::kInvalidArgument, "metric multipliers must be positive");
    }
  }
}

MetricOperator MetricOperator::uniform(BlockStructure blocks, double mu) {
  const auto t = static_cast<std::size_t>(blocks.count());
  return MetricOperator(std::move(blocks), std::vector<double>(t * (t - 1) / 2, mu));
}

MetricOperator MetricOperator::random(BlockStructure blocks, std::mt19937_64& rng, double lo,
                                      double hi) {
  if (!(lo > 0.0) || !(hi >= lo)) {
    throw Error(ErrorCode::kInvalidArgument, "log-uniform range must satisfy 0 < lo <= hi");
  }
  const auto t = static_cast<std::size_t>(blocks.count());
  std::uniform_real_distribution<double> exponent(std::log(lo), std::log(hi));
  std::vector<double> mu(t * (t - 1) / 2);
  for (auto& m : mu) m = std::exp(exponent(rng));
  return MetricOperator(std::move(blocks), std::move(mu));
}

double MetricOperator::mu(int i, int j) const {
  if (i < j) std::swap(i, j);
  if (i == j || i >= blocks_.count() || j < 0) {
    throw Error(ErrorCode::kInvalidArgument, "metric multipliers exist only for i != j");
  }
  return mu_[static_cast<std::size_t>(pair_index(i, j))];
}

// ---------------------------------------------------------------------------
// Algebra

double killing_inner(const SuVector& x, const SuVector& y) {
  require_same_dim(x, y);
  const ComplexMatrix& a = x.matrix();
  const ComplexMatrix& b = y.matrix();
  const Complex trace = a.transpose().cwiseProduct(b).sum();
  if (std::abs(trace.imag()) > 1e-10 * std::max(1.0, a.norm() * b.norm())) {
    throw Error(ErrorCode::kNotSkewHermitian, "Tr(XY) has a non-negligible imaginary part");
  }
  return -2.0 * x.dim() * trace.real();
}

double killing_norm(const SuVector& x) { return std::sqrt(std::max(0.0, killing_inner(x, x))); }

ReductiveSplit reductive_split(const SuVector& x, const BlockStructure& blocks) {
  require_blocks_fit(x, blocks);
  ComplexMatrix isotropy = zeros(x.dim());
  for (int b = 0; b < blocks.count(); ++b) {
    blocks.block(isotropy, b, b) = blocks.block(x.matrix(), b, b);
  }
  ComplexMatrix tangent = x.matrix();
  for (int b = 0; b < blocks.count(); ++b) blocks.block(tangent, b, b).setZero();
  return {SuVector::unchecked(std::move(isotropy)), SuVector::unchecked(std::move(tangent))};
}

SuVector m_projection(const SuVector& x, const BlockStructure& blocks) {
  require_blocks_fit(x, blocks);
  ComplexMatrix tangent = x.matrix();
  for (int b = 0; b < blocks.count(); ++b) blocks.block(tangent, b, b).setZero();
  return SuVector::unchecked(std::move(tangent));
}

SuVector apply_metric(const MetricOperator& metric, const SuVector& tangent,
                      const Tolerances& tol) {
  const BlockStructure& blocks = metric.blocks();
  if (blocks.dim() != tangent.dim()) {
    throw Error(ErrorCode::kStructureMismatch, "metric operator and vector sizes differ");
  }
  const double scale = tol.structural * std::max(1.0, tangent.matrix().norm());
  for (int b = 0; b < blocks.count(); ++b) {
    if (blocks.block(tangent.matrix(), b, b).norm() > scale) {
      throw Error(ErrorCode::kStructureMismatch, "metric operators act on m only");
    }
  }
  ComplexMatrix out = zeros(tangent.dim());
  for (int i = 0; i < blocks.count(); ++i) {
    for (int j = 0; j < blocks.count(); ++j) {
      if (i == j) continue;
      blocks.block(out, i, j) = metric.mu(i, j) * blocks.block(tangent.matrix(), i, j);
    }
  }
  return SuVector::unchecked(std::move(out));
}

SuVector bracket(const SuVector& x, const SuVector& y) {
  require_same_dim(x, y);
  const ComplexMatrix& a = x.matrix();
  const ComplexMatrix& b = y.matrix();
  return SuVector::unchecked(a * b - b * a);
}

SuVector ad_conjugate(const ComplexMatrix& u, const SuVector& x, const Tolerances& tol) {
  if (u.rows() != x.dim() || u.cols() != x.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "Ad(U) with U of the wrong size");
  }
  if (!is_unitary(u, tol)) throw Error(ErrorCode::kNotUnitary, "Ad(U) needs a unitary U");
  return SuVector::unchecked(u * x.matrix() * u.adjoint());
}

ComplexMatrix coset_orbit(const SuVector& x, double t) {
  // exp(tX) = exp(-i (iX) t) with iX Hermitian.
  const ComplexMatrix h = kI * x.matrix();
  return unitary_exp(herm_eig(0.5 * (h + h.adjoint())), t, 1.0);
}

// ---------------------------------------------------------------------------
// Equigeodesic criteria

namespace {

double line_criterion_residual(double alpha, const ComplexVector& x, const ComplexMatrix& a) {
  const double r = (a * x - Complex(0.0, alpha) * x).norm();
  return r / std::max(1.0, a.norm() * x.norm());
}

}  // namespace

StructuralCheck equigeodesic_structural(const SuVector& x, const BlockStructure& blocks,
                                        double tol) {
  require_blocks_fit(x, blocks);
  const ComplexMatrix& m = x.matrix();
  const int n = x.dim();
  StructuralCheck out;
  if (blocks.is_pure_state()) {
    out.residual = line_criterion_residual(x.alpha(), x.x(), x.a());
  } else if (blocks.is_pure_state_mirrored()) {
    const ComplexVector column = m.col(n - 1).head(n - 1);
    out.residual =
        line_criterion_residual(m(n - 1, n - 1).imag(), column, m.topLeftCorner(n - 1, n - 1));
  } else if (blocks.count() == 2) {
    out.vacuous = true;
    out.equigeodesic = true;
    return out;
  } else {
    double worst = 0.0;
    const int t = blocks.count();
    for (int i = 0; i < t; ++i) {
      for (int j = 0; j < t; ++j) {
        if (j == i) continue;
        for (int k = 0; k < t; ++k) {
          if (k == i || k == j) continue;
          const ComplexMatrix product = blocks.block(m, i, j) * blocks.block(m, j, k);
          worst = std::max(worst, product.norm());
        }
      }
    }
    const double tangent = m_projection(x, blocks).matrix().norm();
    out.residual = worst / std::max(1.0, tangent * tangent);
  }
  out.equigeodesic = out.residual <= tol;
  return out;
}

bool is_equigeodesic_structural(const SuVector& x, const BlockStructure& blocks, double tol) {
  return equigeodesic_structural(x, blocks, tol).equigeodesic;
}

double variational_residual(const SuVector& x, const MetricOperator& metric) {
  const BlockStructure& blocks = metric.blocks();
  const SuVector scaled = apply_metric(metric, m_projection(x, blocks));
  const SuVector projected = m_projection(bracket(x, scaled), blocks);
  return killing_norm(projected) / std::max(1.0, killing_inner(x, x));
}

VariationalCheck is_equigeodesic_variational(const SuVector& x, const BlockStructure& blocks,
                                             int samples, std::uint64_t seed, double tol) {
  require_blocks_fit(x, blocks);
  if (samples < 1) throw Error(ErrorCode::kInvalidArgument, "need at least one sample");
  std::mt19937_64 rng(seed);
  VariationalCheck out;
  for (int s = 0; s < samples; ++s) {
    const MetricOperator metric = MetricOperator::random(blocks, rng);
    out.max_residual = std::max(out.max_residual, variational_residual(x, metric));
  }
  out.equigeodesic = out.max_residual <= tol;
  return out;
}

}  // namespace optspeed
