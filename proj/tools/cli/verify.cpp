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

#include "cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "cli/json_io.hpp"
#include "optspeed/evolution.hpp"
#include "optspeed/lie_flag.hpp"
#include "optspeed/quantum_states.hpp"
#include "optspeed/sampling.hpp"
#include "optspeed/synthesis.hpp"

namespace optspeed::cli {

namespace {

using sampling::random_equigeodesic;
using sampling::random_hermitian;
using sampling::random_state;
using sampling::random_su;
using sampling::random_unitary;

constexpr double kPi = std::numbers::pi;

class Tracker {
 public:
  /// residual <= bound.
  void upper(double residual, double bound, const char* what) {
    max_residual = std::max(max_residual, residual);
    if (!(residual <= bound)) note(what, residual);
  }
  void require(bool ok, const char* what) {
    if (!ok) note(what, std::nan(""));
  }

  double max_residual = 0.0;
  bool failed = false;
  std::string message;

 private:
  void note(const char* what, double value) {
    if (!failed) {
      std::ostringstream os;
      os << what;
      if (!std::isnan(value)) os << " (" << value << ")";
      message = os.str();
    }
    failed = true;
  }
};

struct Context {
  std::mt19937_64& rng;
  int n;

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
  }
  double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }
};

struct Property {
  const char* suite;
  const char* name;
  int min_n;
  int max_n;  // 0: use n_max
  bool single_trial;
  std::function<void(Tracker&, Context&)> body;
};

double projector_gap(const PureState& a, const PureState& b) {
  const ComplexVector& u = a.amplitudes();
  const ComplexVector& v = b.amplitudes();
  return (u * u.adjoint() - v * v.adjoint()).norm();
}

ComplexMatrix from_local_blocks(const ComplexMatrix& basis, double alpha, const ComplexVector& x,
                                const ComplexMatrix& a) {
  HamiltonianBlocks blocks{alpha, x, a, basis};
  return blocks.reassemble();
}

// Hamiltonian whose blocks relative to phi violate A x = alpha x by a fixed
// margin relative to ||A|| and, with |x| = 1, by `absolute` outright.
ComplexMatrix violating_hamiltonian(const PureState& phi, Context& ctx, double margin,
                                    double absolute = 0.0) {
  const int k = ctx.n - 1;
  const ComplexMatrix basis =
      sampling::random_unitary_mapping(PureState::basis(ctx.n, 0), phi, ctx.rng);
  for (;;) {
    const double alpha = ctx.uniform(-1.0, 1.0);
    const ComplexVector x = sampling::gaussian_vector(k, ctx.rng).normalized();
    const ComplexMatrix a = random_hermitian(k, ctx.rng);
    const double violation = (a * x - alpha * x).norm();
    if (a.norm() > 0.1 && violation > margin * a.norm() && violation > absolute) return from_local_blocks(basis, alpha, x, a);
  }
}

bool complement_spectrum_inside(const HamiltonianBlocks& b) {
  const int k = static_cast<int>(b.x.size());
  const double r = b.x.norm();
  if (k < 2 || r == 0.0) return true;
  ComplexMatrix seed(k, k);
  seed << b.x / r, identity(k).leftCols(k - 1);
  const ComplexMatrix q = Eigen::HouseholderQR<ComplexMatrix>(seed).householderQ();
  const ComplexMatrix w = q.rightCols(k - 1);
  const RealVector spec = herm_eig(w.adjoint() * b.a * w).values;
  const double slack = 1e-9 * std::max(1.0, r);
  return spec.minCoeff() >= b.alpha - r - slack && spec.maxCoeff() <= b.alpha + r + slack;
}

std::vector<Property> algebra_properties() {
  std::vector<Property> out;
  out.push_back({"algebra", "eig_round_trip", 1, 0, false, [](Tracker& t, Context& c) {
                   const ComplexMatrix h = random_hermitian(c.n, c.rng, c.log_uniform(1e-3, 1e2));
                   const HermitianEigen eig = herm_eig(h);
                   const ComplexMatrix back =
                       eig.vectors * eig.values.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
                   t.upper((back - h).norm() / std::max(1.0, h.norm()), 1e-10, "reconstruction");
                   t.upper((eig.vectors.adjoint() * eig.vectors - identity(c.n)).norm(), 1e-10,
                           "orthonormality");
                   for (int k = 1; k < c.n; ++k) {
                     t.require(eig.values[k] >= eig.values[k - 1], "ascending eigenvalues");
                   }
                 }});
  out.push_back({"algebra", "exp_unitarity", 1, 0, false, [](Tracker& t, Context& c) {
                   ComplexMatrix h = random_hermitian(c.n, c.rng);
                   h *= c.uniform(0.0, 100.0) / std::max(1e-300, h.norm());
                   const ComplexMatrix u = unitary_exp(h, c.uniform(-1e3, 1e3));
                   t.upper((u.adjoint() * u - identity(c.n)).norm(), 1e-10, "unitarity");
                 }});
  out.push_back({"algebra", "exp_group_law", 1, 0, false, [](Tracker& t, Context& c) {
                   const ComplexMatrix h = random_hermitian(c.n, c.rng);
                   const double s = c.uniform(-10.0, 10.0);
                   const double r = c.uniform(-10.0, 10.0);
                   const HermitianEigen eig = herm_eig(h);
                   const ComplexMatrix lhs = unitary_exp(eig, s) * unitary_exp(eig, r);
                   t.upper((lhs - unitary_exp(eig, s + r)).norm(), 1e-9, "group law");
                 }});
  out.push_back({"algebra", "ad_invariance", 2, 0, false, [](Tracker& t, Context& c) {
                   const SuVector x = random_su(c.n, c.rng);
                   const SuVector y = random_su(c.n, c.rng);
                   const ComplexMatrix u = random_unitary(c.n, c.rng);
                   const double before = killing_inner(x, y);
                   const double after = killing_inner(ad_conjugate(u, x), ad_conjugate(u, y));
                   t.upper(std::abs(after - before) / (1.0 + killing_norm(x) * killing_norm(y)),
                           1e-8, "Ad-invariance");
                 }});
  out.push_back({"algebra", "criterion_equivalence", 2, 6, false, [](Tracker& t, Context& c) {
                   const BlockStructure blocks = BlockStructure::pure_state(c.n);
                   const std::uint64_t seed = c.rng();
                   const SuVector good = random_equigeodesic(c.n, c.rng);
                   const bool good_structural = is_equigeodesic_structural(good, blocks);
                   const VariationalCheck good_var = is_equigeodesic_variational(good, blocks, 16, seed);
                   t.require(good_structural, "constructed equigeodesic rejected");
                   t.require(good_structural == good_var.equigeodesic, "criteria disagree (true case)");
                   t.upper(good_var.max_residual, 1e-9, "true-case residual");

                   const SuVector generic = random_su(c.n, c.rng);
                   const bool generic_structural = is_equigeodesic_structural(generic, blocks);
                   const VariationalCheck generic_var =
                       is_equigeodesic_variational(generic, blocks, 16, seed);
                   t.require(!generic_structural, "generic vector accepted");
                   t.require(generic_structural == generic_var.equigeodesic,
                             "criteria disagree (generic case)");
                   t.require(generic_var.max_residual > 1e-3, "generic residual too small");
                 }});
  out.push_back({"algebra", "projection_idempotence", 2, 0, false, [](Tracker& t, Context& c) {
                   std::vector<int> parts;
                   int left = c.n;
                   while (left > 0) {
                     const int p = std::uniform_int_distribution<int>(1, left)(c.rng);
                     parts.push_back(p);
                     left -= p;
                   }
                   if (parts.size() < 2) parts = {1, c.n - 1};
                   const BlockStructure blocks(parts);
                   const SuVector x = random_su(c.n, c.rng);
                   const ReductiveSplit split = reductive_split(x, blocks);
                   const ReductiveSplit again = reductive_split(split.tangent, blocks);
                   t.upper(again.isotropy.matrix().norm() +
                               (again.tangent.matrix() - split.tangent.matrix()).norm(),
                           0.0, "idempotence");
                   t.upper((split.isotropy.matrix() + split.tangent.matrix() - x.matrix()).norm(),
                           0.0, "exact sum");
                   t.upper(std::abs(killing_inner(split.isotropy, split.tangent)) /
                               std::max(1.0, killing_inner(x, x)),
                           1e-9, "Killing orthogonality");
                 }});
  out.push_back({"algebra", "bracket_closure", 2, 0, false, [](Tracker& t, Context& c) {
                   const SuVector x = random_su(c.n, c.rng);
                   const SuVector y = random_su(c.n, c.rng);
                   const SuVector z = random_su(c.n, c.rng);
                   const ComplexMatrix b = bracket(x, y).matrix();
                   t.upper((b + b.adjoint()).norm() / std::max(1.0, b.norm()), 1e-10,
                           "skew-Hermitian");
                   t.upper(std::abs(b.trace()), 1e-10, "traceless");
                   const SuVector jacobi = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) +
                                           bracket(z, bracket(x, y));
                   const double scale =
                       std::max(1.0, x.matrix().norm() * y.matrix().norm() * z.matrix().norm());
                   t.upper(jacobi.matrix().norm() / scale, 1e-9, "Jacobi identity");
                 }});
  out.push_back({"algebra", "corollary_block_diagonal", 3, 0, false, [](Tracker& t, Context& c) {
                   const BlockStructure blocks = BlockStructure::pure_state(c.n);
                   const SuVector x = random_equigeodesic(c.n, c.rng);
                   const SuVector xm = m_projection(x, blocks);
                   for (int k = 0; k < 5; ++k) {
                     const double time = c.uniform(0.0, 10.0);
                     const ComplexMatrix w = coset_orbit(x, time) * coset_orbit(xm, -time);
                     const double off = blocks.block(w, 0, 1).norm() + blocks.block(w, 1, 0).norm();
                     t.upper(off, 1e-8, "block-diagonal residual");
                   }
                 }});
  return out;
}

std::vector<Property> synthesis_properties() {
  std::vector<Property> out;
  out.push_back({"synthesis", "fs_metric", 1, 0, false, [](Tracker& t, Context& c) {
                   const PureState a = random_state(c.n, c.rng);
                   const PureState b = random_state(c.n, c.rng);
                   const PureState d = random_state(c.n, c.rng);
                   const double ab = fs_distance(a, b);
                   t.upper(fs_distance(a, d) - (ab + fs_distance(b, d)), 1e-10, "triangle");
                   t.upper(std::abs(ab - fs_distance(b, a)), 1e-12, "symmetry");
                   const PureState rotated(a.amplitudes() * std::polar(1.0, c.uniform(0, 2 * kPi)));
                   t.upper(std::abs(fs_distance(rotated, b) - ab), 1e-12, "phase invariance");
                   t.require(ab >= 0.0 && ab <= kPi / 2, "range");
                   t.upper(fs_distance(a, a), 1e-12, "identity of rays");
                 }});
  out.push_back({"synthesis", "fs_unitary_invariance", 1, 0, false, [](Tracker& t, Context& c) {
                   const PureState a = random_state(c.n, c.rng);
                   const PureState b = random_state(c.n, c.rng);
                   const ComplexMatrix u = random_unitary(c.n, c.rng);
                   const double moved = fs_distance(PureState::normalized(u * a.amplitudes()),
                                                    PureState::normalized(u * b.amplitudes()));
                   t.upper(std::abs(moved - fs_distance(a, b)), 1e-10, "unitary invariance");
                 }});
  out.push_back({"synthesis", "popoviciu", 2, 0, false, [](Tracker& t, Context& c) {
                   const ComplexMatrix h = random_hermitian(c.n, c.rng);
                   const MaxUncertainty max = energy_uncertainty_max(h);
                   const PureState phi = random_state(c.n, c.rng);
                   t.upper(energy_uncertainty(h, phi) - max.value, 1e-10, "bound");
                   t.upper(std::abs(energy_uncertainty(h, max.witness) - max.value), 1e-10,
                           "superposition witness");
                   t.upper(std::abs(energy_uncertainty(h, max.mixture) - max.value), 1e-10,
                           "balanced mixture");
                 }});
  out.push_back({"synthesis", "uncertainty_conservation", 1, 0, false, [](Tracker& t, Context& c) {
                   const ComplexMatrix h = random_hermitian(c.n, c.rng);
                   const PureState phi = random_state(c.n, c.rng);
                   const double initial = energy_uncertainty(h, phi);
                   const PureState later = propagate(h, phi, c.uniform(0.0, 10.0));
                   t.upper(std::abs(energy_uncertainty(h, later) - initial), 1e-10, "drift");
                 }});
  out.push_back({"synthesis", "quasi_pure_spectrum", 2, 0, false, [](Tracker& t, Context& c) {
                   double p1 = 0.0;
                   double p2 = 0.0;
                   do {
                     p1 = c.uniform(0.0, 1.0);
                     p2 = (1.0 - p1) / (c.n - 1);
                   } while (std::abs(p1 - p2) < 1e-3);
                   const PureState first = random_state(c.n, c.rng);
                   const QuasiPureSpec spec{p1, p2, sampling::random_basis_with_first(first, c.rng)};
                   const DensityMatrix rho = quasi_pure(spec);
                   RealVector expected = RealVector::Constant(c.n, p2);
                   expected[0] = p1;
                   std::sort(expected.begin(), expected.end());
                   t.upper((rho.spectrum() - expected).cwiseAbs().maxCoeff(), 1e-10, "spectrum");
                   t.upper(std::abs(rho.matrix().trace() - 1.0), 1e-12, "trace");
                 }});
  out.push_back({"synthesis", "characterization_round_trip", 2, 0, false,
                 [](Tracker& t, Context& c) {
                   const PureState phi = random_state(c.n, c.rng);
                   const PureState psi = random_state(c.n, c.rng);
                   const double energy = c.log_uniform(0.1, 10.0);
                   const Units units{c.log_uniform(0.1, 10.0)};
                   const SynthesizedHamiltonian core = optimal_hamiltonian(phi, psi, energy);
                   const ComplexMatrix family = optimal_family_sample(phi, psi, energy, c.rng());
                   const BlockStructure blocks = BlockStructure::pure_state(c.n);
                   for (const ComplexMatrix* h : {&core.hamiltonian, &family}) {
                     t.require(is_optimal_speed(*h, phi).kind == Verdict::kOptimal, "verdict");
                     const EquigeodesicVector eq = equigeodesic_vector_of(*h, phi);
                     t.require(is_equigeodesic_structural(
                                   ad_conjugate(eq.base.adjoint(), eq.vector), blocks),
                               "structural criterion");
                     const double arrival = units.hbar * core.distance / energy;
                     const PureState reached = propagate(*h, phi, arrival, units);
                     const double fidelity = std::norm(psi.amplitudes().dot(reached.amplitudes()));
                     t.upper(1.0 - fidelity, 1e-9, "arrival infidelity");
                     t.upper(std::abs(energy_uncertainty(*h, phi) - energy), 1e-10,
                             "energy uncertainty");
                   }
                 }});
  out.push_back({"synthesis", "saturation", 2, 0, false, [](Tracker& t, Context& c) {
                   const PureState phi = random_state(c.n, c.rng);
                   const PureState psi = random_state(c.n, c.rng);
                   const ComplexMatrix canonical = optimal_hamiltonian(phi, psi, 1.0).hamiltonian;
                   const ComplexMatrix family = optimal_family_sample(phi, psi, 1.0, c.rng());
                   const ComplexMatrix generic = random_hermitian(c.n, c.rng);
                   for (const ComplexMatrix* h : {&canonical, &family, &generic}) {
                     const OptimalityVerdict v = is_optimal_speed(*h, phi);
                     const double gap = std::abs(v.delta_e - v.delta_e_max);
                     const bool saturated = gap <= 1e-8 * std::max(1.0, v.delta_e_max);
                     if (saturated) t.require(v.kind == Verdict::kOptimal, "saturated but not optimal");
                     if (v.kind != Verdict::kOptimal) continue;
                     // Optimal: saturated exactly when A on the complement of span{phi, x}
                     // stays inside [alpha - |x|, alpha + |x|].
                     const bool inside = complement_spectrum_inside(adapted_blocks(*h, phi));
                     t.require(saturated == inside, "optimal saturation mismatch");
                     if (inside) t.upper(gap, 1e-8, "optimal gap");
                   }
                   t.require(is_optimal_speed(family, phi).kind == Verdict::kOptimal,
                             "family sample not optimal");
                   const OptimalityVerdict v = is_optimal_speed(canonical, phi);
                   t.upper(std::abs(v.delta_e - v.delta_e_max), 1e-8, "canonical not saturated");
                 }});
  out.push_back({"synthesis", "strict_gap", 2, 0, false, [](Tracker& t, Context& c) {
                   const PureState phi = random_state(c.n, c.rng);
                   const ComplexMatrix h = violating_hamiltonian(phi, c, 0.1);
                   const HamiltonianBlocks blocks = adapted_blocks(h, phi);
                   const double margin = energy_uncertainty_max(h).value - blocks.x.norm();
                   t.require(margin > 1e-12, "Delta E_max not strictly above ||x||");
                 }});
  out.push_back({"synthesis", "qsl_inequality", 2, 0, false, [](Tracker& t, Context& c) {
                   const PureState phi = random_state(c.n, c.rng);
                   const Units units{c.log_uniform(0.5, 2.0)};
                   const bool optimal_case = c.uniform(0.0, 1.0) < 0.5;
                   ComplexMatrix h;
                   double t_star = 0.0;
                   if (optimal_case) {
                     const double energy = c.log_uniform(0.2, 5.0);
                     h = optimal_family_sample(phi, random_state(c.n, c.rng), energy, c.rng());
                     t_star = c.uniform(0.05, 0.95) * (kPi / 2) * units.hbar / energy;
                   } else {
                     h = violating_hamiltonian(phi, c, 0.5, 0.5);
                     const double delta_e = energy_uncertainty(h, phi);
                     t_star = c.uniform(0.3, 0.9) * (kPi / 2) * units.hbar / delta_e;
                   }
                   const PureState psi = propagate(h, phi, t_star, units);
                   const double bound = qsl_time(phi, psi, h, units);
                   const auto arrival = first_arrival_time(h, phi, psi, 1.01 * t_star, units);
                   t.require(arrival.has_value(), "target never reached");
                   if (!arrival) return;
                   t.upper(bound - *arrival, 1e-7, "arrival below the speed limit");
                   const bool optimal = is_optimal_speed(h, phi).kind == Verdict::kOptimal;
                   t.require(optimal == optimal_case, "verdict");
                   if (optimal) {
                     t.upper(std::abs(*arrival - bound), 1e-6, "optimal arrival != bound");
                   } else {
                     t.require(*arrival - bound > 1e-3 * bound, "suboptimal arrival at the bound");
                   }
                 }});
  out.push_back({"synthesis", "phase_gauge", 2, 0, false, [](Tracker& t, Context& c) {
                   const PureState phi = random_state(c.n, c.rng);
                   const PureState psi = random_state(c.n, c.rng);
                   const PureState phi2(phi.amplitudes() * std::polar(1.0, c.uniform(0, 2 * kPi)));
                   const PureState psi2(psi.amplitudes() * std::polar(1.0, c.uniform(0, 2 * kPi)));
                   const ComplexMatrix h1 = optimal_hamiltonian(phi, psi, 1.0).hamiltonian;
                   const ComplexMatrix h2 = optimal_hamiltonian(phi2, psi2, 1.0).hamiltonian;
                   for (int k = 0; k < 5; ++k) {
                     const double time = c.uniform(0.0, 3.0);
                     t.upper(projector_gap(propagate(h1, phi, time), propagate(h2, phi, time)), 1e-9,
                             "projector trajectories differ");
                   }
                 }});
  out.push_back({"synthesis", "qubit_oracle", 2, 2, true, [](Tracker& t, Context&) {
                   const PureState zero = PureState::basis(2, 0);
                   const PureState one = PureState::basis(2, 1);
                   const ComplexMatrix h = optimal_hamiltonian(zero, one, 1.0).hamiltonian;
                   const auto arrival = first_arrival_time(h, zero, one, 10.0);
                   t.require(arrival.has_value(), "no arrival");
                   if (arrival) t.upper(std::abs(*arrival - kPi / 2), 1e-7, "arrival");
                   t.upper(std::abs(qsl_time(zero, one, h) - kPi / 2), 1e-12, "qsl time");
                   const OptimalityVerdict v = is_optimal_speed(h, zero);
                   t.upper(std::abs(v.delta_e - 1.0) + std::abs(v.delta_e_max - 1.0), 1e-12,
                           "uncertainties");
                 }});
  return out;
}

std::vector<Property> evolution_properties() {
  std::vector<Property> out;
  out.push_back({"evolution", "flow", 1, 0, false, [](Tracker& t, Context& c) {
                   const ComplexMatrix h = random_hermitian(c.n, c.rng);
                   const PureState phi = random_state(c.n, c.rng);
                   const double s = c.uniform(-5.0, 5.0);
                   const double r = c.uniform(-5.0, 5.0);
                   const PureState twice = propagate(h, propagate(h, phi, s), r);
                   t.upper((twice.amplitudes() - propagate(h, phi, s + r).amplitudes()).norm(), 1e-10,
                           "flow");
                 }});
  out.push_back({"evolution", "conservation", 2, 0, false, [](Tracker& t, Context& c) {
                   const ComplexMatrix h = random_hermitian(c.n, c.rng);
                   const double time = c.uniform(-10.0, 10.0);
                   const PureState phi = random_state(c.n, c.rng);
                   t.upper(std::abs(propagate(h, phi, time).amplitudes().norm() - 1.0), 1e-12, "norm");
                   const ComplexMatrix g = sampling::gaussian_matrix(c.n, c.rng);
                   ComplexMatrix mixed = g * g.adjoint();
                   mixed /= mixed.trace().real();
                   const DensityMatrix rho(0.5 * (mixed + mixed.adjoint()));
                   const DensityMatrix later = propagate_density(h, rho, time);
                   t.upper(std::abs(later.matrix().trace() - 1.0), 1e-10, "trace");
                   t.upper((later.spectrum() - rho.spectrum()).cwiseAbs().maxCoeff(), 1e-10,
                           "spectrum");
                 }});
  out.push_back({"evolution", "corollary_trajectories", 2, 0, false, [](Tracker& t, Context& c) {
                   const SuVector x = random_equigeodesic(c.n, c.rng);
                   const SuVector xm = m_projection(x, BlockStructure::pure_state(c.n));
                   const ComplexMatrix h = kI * x.matrix();
                   const ComplexMatrix hm = kI * xm.matrix();
                   const PureState origin = PureState::basis(c.n, 0);
                   for (int k = 0; k < 10; ++k) {
                     const double time = c.uniform(0.0, 10.0);
                     t.upper(projector_gap(propagate(h, origin, time), propagate(hm, origin, time)),
                             1e-9, "projector trajectories differ");
                   }
                 }});
  out.push_back({"evolution", "quasi_pure_reduction", 3, 6, false, [](Tracker& t, Context& c) {
                   const PureState phi = random_state(c.n, c.rng);
                   const PureState psi = random_state(c.n, c.rng);
                   double p1 = 0.0;
                   double p2 = 0.0;
                   do {
                     p1 = c.uniform(0.0, 1.0);
                     p2 = (1.0 - p1) / (c.n - 1);
                   } while (std::abs(p1 - p2) < 0.05);
                   const QuasiPureSpec from{p1, p2, sampling::random_basis_with_first(phi, c.rng)};
                   const QuasiPureSpec to{p1, p2, sampling::random_basis_with_first(psi, c.rng)};
                   const ComplexMatrix u = sampling::random_unitary_mapping(phi, psi, c.rng);
                   t.require(quasi_pure_transport(from, to, u), "transport");

                   const double energy = c.log_uniform(0.2, 5.0);
                   const SynthesizedHamiltonian core = optimal_hamiltonian(phi, psi, energy);
                   const double horizon = 1.01 * core.distance / energy + 1e-3;
                   const auto pure = first_arrival_time(core.hamiltonian, phi, psi, horizon);
                   const auto mixed = first_arrival_time_density(core.hamiltonian, quasi_pure(from),
                                                                 quasi_pure(to), horizon);
                   t.require(pure.has_value() && mixed.has_value(), "arrival missing");
                   if (pure && mixed) t.upper(std::abs(*pure - *mixed), 1e-7, "arrival times differ");
                 }});
  out.push_back({"evolution", "optimal_geometry", 2, 0, false, [](Tracker& t, Context& c) {
                   const PureState phi = random_state(c.n, c.rng);
                   const PureState psi = random_state(c.n, c.rng);
                   const double energy = c.log_uniform(0.2, 5.0);
                   const Units units{c.log_uniform(0.5, 2.0)};
                   const bool family = c.uniform(0.0, 1.0) < 0.5;
                   const ComplexMatrix h = family
                                               ? optimal_family_sample(phi, psi, energy, c.rng())
                                               : optimal_hamiltonian(phi, psi, energy).hamiltonian;
                   const double s = fs_distance(phi, psi);
                   const double window = units.hbar * std::min(s, kPi / 2 - 2e-3) / energy;
                   const double step = units.hbar / energy / 200.0;
                   const int steps = std::max(2, static_cast<int>(std::ceil(window / step)));
                   const std::vector<double> grid = uniform_grid(0.0, window, steps);
                   const Trajectory traj = sample_trajectory(h, phi, grid, units);
                   for (double v : fs_speed_profile(traj)) {
                     t.upper(std::abs(v - energy / units.hbar), 1e-6, "speed");
                   }
                   t.upper(geodesic_defect(traj), 1e-6, "geodesic defect");
                   t.upper(subspace_leakage(traj, phi, psi), 1e-10, "leakage");
                 }});
  return out;
}

Property negative_control() {
  return {"control", "negative_control", 2, 2, true, [](Tracker& t, Context&) {
            // sigma_x + sigma_z from |0> is suboptimal; claiming saturation must fail.
            ComplexMatrix h(2, 2);
            h << 1.0, 1.0, 1.0, -1.0;
            const OptimalityVerdict v = is_optimal_speed(h, PureState::basis(2, 0));
            t.upper(std::abs(v.delta_e - v.delta_e_max), 1e-8, "forced saturation claim");
          }};
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::size_t property, int trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(property), static_cast<std::uint32_t>(trial)};
  return std::mt19937_64(seq);
}

}  // namespace

Suite suite_from_string(const std::string& name) {
  if (name == "algebra") return Suite::kAlgebra;
  if (name == "synthesis") return Suite::kSynthesis;
  if (name == "evolution") return Suite::kEvolution;
  if (name == "all") return Suite::kAll;
  throw ParseError("unknown suite \"" + name + "\"");
}

std::string to_string(Suite suite) {
  switch (suite) {
    case Suite::kAlgebra: return "algebra";
    case Suite::kSynthesis: return "synthesis";
    case Suite::kEvolution: return "evolution";
    case Suite::kAll: return "all";
  }
  return "unknown";
}

std::vector<PropertyResult> run_verify(const VerifyOptions& options) {
  if (options.trials < 1) throw ParseError("--trials must be at least 1");
  if (options.n_max < 2) throw ParseError("--n-max must be at least 2");

  std::vector<Property> properties;
  auto append = [&](std::vector<Property> more) {
    for (auto& p : more) properties.push_back(std::move(p));
  };
  if (options.suite == Suite::kAlgebra || options.suite == Suite::kAll) append(algebra_properties());
  if (options.suite == Suite::kSynthesis || options.suite == Suite::kAll) {
    append(synthesis_properties());
  }
  if (options.suite == Suite::kEvolution || options.suite == Suite::kAll) {
    append(evolution_properties());
  }
  if (options.negative_control) properties.push_back(negative_control());

  std::vector<PropertyResult> results;
  for (std::size_t p = 0; p < properties.size(); ++p) {
    const Property& prop = properties[p];
    PropertyResult result{prop.suite, prop.name, 0, 0.0, 0, {}};
    const int trials = prop.single_trial ? 1 : options.trials;
    const int hi = prop.max_n > 0 ? std::min(prop.max_n, options.n_max) : options.n_max;
    const int lo = std::min(prop.min_n, hi);
    for (int trial = 0; trial < trials; ++trial) {
      std::mt19937_64 rng = trial_rng(options.seed, p, trial);
      Context ctx{rng, std::uniform_int_distribution<int>(lo, hi)(rng)};
      Tracker tracker;
      try {
        prop.body(tracker, ctx);
      } catch (const std::exception& e) {
        tracker.require(false, e.what());
      }
      ++result.trials;
      result.max_residual = std::max(result.max_residual, tracker.max_residual);
      if (tracker.failed) {
        if (result.failures == 0) {
          result.first_failure = "trial " + std::to_string(trial) + ", n=" +
                                 std::to_string(ctx.n) + ": " + tracker.message;
        }
        ++result.failures;
      }
    }
    results.push_back(std::move(result));
  }
  return results;
}

}  // namespace optspeed::cli
