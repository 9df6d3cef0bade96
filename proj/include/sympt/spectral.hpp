// Copyright 2026 The sympt Authors
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

#include <functional>
#include <string>
#include <vector>

#include "sympt/core_algebra.hpp"
#include "sympt/hamiltonian.hpp"
#include "sympt/types.hpp"

namespace sympt {

struct SpectralOptions {
  // Eigenvalues closer than cluster_tol * scale are treated as one cluster
  // and tested for a shared eigenspace.
  double cluster_tol = 1e-7;
};

struct SpectralReport {
  std::vector<cplx> eigenvalues;  // sorted by real part, then imaginary part
  CMatrix right_eigenvectors;     // unit-norm columns, same order
  double eigvec_condition = 1.0;  // σ_max / σ_min of the eigenvector matrix
  double min_gap = 0.0;           // smallest pairwise |λ_i - λ_j|
  double scale = 1.0;             // max(1, ‖H‖_F)
  int defective_clusters = 0;     // clusters with geometric < algebraic multiplicity

  double max_abs_imag() const;
};

/// Dense non-Hermitian eigendecomposition. Near-coincident eigenvalues are
/// grouped; a cluster whose eigenspace is smaller than its size is reported
/// as defective, with its eigenvalues merged and its missing eigenvector
/// columns repeated (the condition number then saturates at 1/ε).
/// Throws SolverFailure if the Schur iteration does not converge.
SpectralReport spectrum(const EffectiveHamiltonian &H, const SpectralOptions &options = {});

enum class Phase { PTSymmetric, PTBroken, NearEP };

struct PhaseEvidence {
  double max_abs_imag = 0.0;
  double min_gap = 0.0;
  double eigvec_condition = 0.0;
  double scale = 1.0;
  double tol_real = 0.0;
  double cond_threshold = 0.0;
};

struct PhaseLabel {
  Phase label = Phase::PTSymmetric;
  bool degenerate = false;  // min_gap ≤ tol_real·scale
  PhaseEvidence evidence;
};

inline constexpr double kDefaultTolReal = 1e-9;
inline constexpr double kDefaultCondThreshold = 1e3;

PhaseLabel classify_phase(const SpectralReport &report, double tol_real = kDefaultTolReal,
                          double cond_threshold = kDefaultCondThreshold);

std::string phase_name(Phase phase);

enum class SymmetryRelation { Commutes, Anticommutes };

struct SymmetryCertificate {
  std::string operator_label;
  SymmetryRelation relation = SymmetryRelation::Commutes;
  double residual = 0.0;  // relative to ‖H‖_F

  bool holds(double tol = 1e-10) const { return residual <= tol; }
};

/// ‖P H* P⁻¹ ∓ H‖_F / ‖H‖_F. Throws SingularMatrix if P is not invertible.
SymmetryCertificate check_antilinear_symmetry(const EffectiveHamiltonian &H, const StructuralMatrix &P,
                                              SymmetryRelation expected);

/// ‖Π H Π + H‖_F / ‖H‖_F. Throws InvalidStructure unless Π is a Hermitian
/// involution.
SymmetryCertificate check_chiral(const EffectiveHamiltonian &H, const StructuralMatrix &Pi);

/// True iff the eigenvalue multiset is closed under λ → -λ and λ → λ*, each
/// checked by greedy nearest-neighbour matching within tol·max(1, max|λ|).
bool particle_hole_check(const SpectralReport &report, double tol = 1e-8);
bool particle_hole_check(const std::vector<cplx> &eigenvalues, double tol = 1e-8);

enum class TransitionKind { EP, DP };

struct TransitionOptions {
  double tol_real = kDefaultTolReal;
  double cond_threshold = kDefaultCondThreshold;
  double param_tol = 1e-12;  // bracket width at which the searches stop
  double gap_tol = 1e-6;     // a gap minimum must fall below gap_tol·scale
  int scan_points = 64;      // coarse scan before the golden-section search
  SpectralOptions spectral;
};

struct TransitionResult {
  double param_star = 0.0;
  TransitionKind kind = TransitionKind::DP;
  double eigvec_condition = 0.0;
  double min_gap = 0.0;
  bool via_bisection = false;
};

using SpecFamily = std::function<QuadraticHamiltonianSpec(double)>;

/// Bisection on the symmetric/broken boundary when the phase differs at the
/// endpoints, otherwise golden-section minimisation of min_gap. The kind is
/// EP when the eigenvector condition at param_star reaches cond_threshold.
/// Throws NoTransition when neither search finds a degeneracy.
TransitionResult locate_transition(const SpecFamily &family, double lo, double hi,
                                   const TransitionOptions &options = {});

std::string transition_name(TransitionKind kind);

}  // namespace sympt
