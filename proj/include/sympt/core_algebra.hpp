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
#include <string_view>

#include "sympt/types.hpp"

namespace sympt {

/// Operator ordering shared by every 2N x 2N matrix in the library: the
/// column vector is [a†_1 .. a†_N, a_1 .. a_N].
struct ModeOrdering {
  int n_modes = 1;

  static constexpr std::string_view convention = "daggers-first";

  int dimension() const { return 2 * n_modes; }
  int creation(int mode) const { return mode; }
  int annihilation(int mode) const { return n_modes + mode; }
};

enum class Pauli { I, X, Y, Z };

enum class StructuralKind { Omega, Chiral, ParityCandidate };

struct StructuralMatrix {
  StructuralKind kind = StructuralKind::ParityCandidate;
  CMatrix matrix;
  std::string label;
};

const Eigen::Matrix2cd &pauli(Pauli p);

/// Ω = iσ_y ⊗ 1_N, i.e. [[0, 1], [-1, 0]] in N x N blocks.
StructuralMatrix omega_form(int n_modes);

/// Kronecker product σ_p ⊗ block. Throws DimensionMismatch for a
/// non-square block.
CMatrix pauli_tensor(Pauli p, const CMatrix &block);

/// σ_outer ⊗ σ_inner as a 4 x 4 structural matrix (two-mode operators).
StructuralMatrix pauli_pair(Pauli outer, Pauli inner, StructuralKind kind);

/// σ_p ⊗ 1_N for arbitrary N.
StructuralMatrix pauli_identity(Pauli p, int n_modes, StructuralKind kind);

/// P · conj(H) · P^{-1}: the adjoint action of the antilinear operator P∗.
/// Throws SingularMatrix when P is not invertible.
CMatrix antilinear_conjugate(const CMatrix &P, const CMatrix &H);

struct MatrixPredicates {
  bool is_hermitian = false;
  bool is_anti_hermitian = false;
  bool is_symmetric = false;
  bool is_unitary = false;
  double hermitian_residual = 0.0;       // ‖A - A†‖_F
  double anti_hermitian_residual = 0.0;  // ‖A + A†‖_F
  double symmetric_residual = 0.0;       // ‖A - Aᵀ‖_F
  double unitary_residual = 0.0;         // ‖A A† - 1‖_F
};

MatrixPredicates matrix_predicates(const CMatrix &A, double tol);

/// 1e-10 relative to the Frobenius norm of the operand (floored at 1).
double default_tolerance(const CMatrix &A);

inline constexpr double kDefaultRelativeTolerance = 1e-10;

}  // namespace sympt
