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

#include "sympt/hamiltonian.hpp"
#include "sympt/types.hpp"

namespace sympt {

/// M(t) = exp(-i H_eff t) acting on [a†; a], together with its structural
/// certificates. Row p of M expresses a†_p(t) in the initial operators.
struct SymplecticPropagator {
  int n_modes = 0;
  CMatrix matrix;
  double t = 0.0;
  double symplectic_residual = 0.0;  // ‖M Ω Mᵀ - Ω‖_F
  double structure_residual = 0.0;   // ‖M - (σ_x⊗1) M* (σ_x⊗1)‖_F
  cplx determinant = 1.0;
};

/// The Bogoliubov blocks of M = [[F, G], [G*, F*]].
struct BlockPair {
  CMatrix F;
  CMatrix G;

  int n_modes() const { return static_cast<int>(F.rows()); }
  /// ‖F F† - G G† - 1‖_F
  double commutator_residual() const;
};

inline constexpr double kDefaultOverflowBound = 50.0;

/// Wraps a matrix and fills in its residuals.
SymplecticPropagator make_propagator(CMatrix matrix, double t);

/// Scaling-and-squaring exponential of -i H t. Throws OverflowRisk when
/// ‖H‖₁·|t| exceeds `overflow_bound`.
SymplecticPropagator propagate(const EffectiveHamiltonian &H, double t,
                               double overflow_bound = kDefaultOverflowBound);

/// cos/cosh(Δt)·1 - i H sin/sinh(Δt)/Δ for the crossed single-mode squeezer,
/// with Δ² = κ² - ω₀² and a series branch for |Δt| < 1e-4.
SymplecticPropagator closed_form_sms(double omega0, double kappa, double t);

/// Throws StructureViolation when structure_residual exceeds
/// tol·max(1, ‖M‖_F); a negative tol selects 1e-10.
BlockPair split_blocks(const SymplecticPropagator &M, double tol = -1.0);

CMatrix assemble_blocks(const BlockPair &blocks);

/// M⁻¹ = [[F†, -Gᵀ], [-G†, Fᵀ]], exact for symplectic M.
CMatrix symplectic_inverse(const CMatrix &M);

enum class TrotterOrder { First = 1, Second = 2 };

/// Order 1: (Π_k e^{-i H_k t/n})ⁿ. Order 2: the symmetric Strang product.
SymplecticPropagator trotter_propagate(const HamiltonianTermList &terms, double t, int n_steps,
                                       TrotterOrder order, double overflow_bound = kDefaultOverflowBound);

}  // namespace sympt
