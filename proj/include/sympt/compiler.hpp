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

#include <string>
#include <vector>

#include "sympt/clements.hpp"
#include "sympt/evolution.hpp"
#include "sympt/types.hpp"

namespace sympt {

/// M = M_U M_Σ M_V† with F = U cosh(R) V† and G = U sinh(R) Vᵀ.
struct SvdTriple {
  CMatrix U_passive;
  RVector squeeze_params;  // r_k ≥ 0, descending
  CMatrix V_passive;
  double reconstruction_residual = 0.0;  // ‖M - M_U M_Σ M_V†‖_F
};

/// diag(X, X*): the 2N x 2N image of a passive transformation X.
CMatrix passive_matrix(const CMatrix &X);

/// [[cosh R, sinh R], [sinh R, cosh R]] in the [a†; a] basis.
CMatrix squeeze_matrix(const RVector &r);

/// diag(e^{r_1} .. e^{r_N}, e^{-r_1} .. e^{-r_N}); squeeze_matrix equals
/// Q · this · Q† with Q = squeeze_rotation(N).
CMatrix squeeze_diagonal(const RVector &r);

/// (1/√2) [[1, 1], [1, -1]] ⊗ 1_N.
CMatrix squeeze_rotation(int n_modes);

CMatrix assemble(const SvdTriple &svd);

/// Takagi-based Bloch-Messiah factorisation. Throws StructureViolation when
/// M is not a Bogoliubov matrix to tol·max(1, ‖M‖²); a negative tol selects
/// 1e-9.
SvdTriple symplectic_svd(const SymplecticPropagator &M, double tol = -1.0);

enum class GateType { PhaseShift, BeamSplitter, SingleModeSqueeze, TwoModeSqueezeHerald };

// Fock-space meaning of each gate X, through X a†_k X† (modes are 0-based):
//   PhaseShift(p, φ)            e^{iφ n_p}:  a†_p → e^{iφ} a†_p
//   BeamSplitter(m, m+1, θ, φ)  a†_k → Σ_l T(θ, φ)_lk a†_l
//   SingleModeSqueeze(p, r, φ)  a†_p → cosh r a†_p + e^{-iφ} sinh r a_p
//   TwoModeSqueezeHerald(j, b, r)  exp(r (a_j a_b - a†_j a†_b)), then a
//                                  detection on b
struct Gate {
  GateType type = GateType::PhaseShift;
  std::vector<int> modes;
  double theta = 0.0;
  double phi = 0.0;
  double r = 0.0;
};

struct CircuitProgram {
  int n_modes = 0;
  std::vector<int> ancilla_modes;
  int source_mode = 0;
  double r_herald = 0.0;
  std::vector<Gate> gates;  // execution order
};

inline constexpr double kDefaultRHerald = 0.1;
inline constexpr double kDefaultSqueezeClip = 5.0;

struct EmitOptions {
  double r_herald = kDefaultRHerald;
  double squeeze_clip = kDefaultSqueezeClip;
};

/// The circuit that prepares X a†_j X† |0⟩ where X realises M:
///   squeezers Σ†, mesh Ū, heralded two-mode squeezer on (j, b), mesh Uᵀ,
///   squeezers Σ, mesh V*.
/// Every stage is emitted in full even when it is trivial. Throws
/// SqueezeOutOfRange when some r_k exceeds squeeze_clip.
CircuitProgram emit_circuit(const SvdTriple &svd, int source_mode, const EmitOptions &options = {});

/// Appends a Clements mesh for U: its cells, then one phase shifter per mode.
void append_mesh(std::vector<Gate> &gates, const ClementsMesh &mesh);

std::string gate_type_name(GateType type);

}  // namespace sympt
