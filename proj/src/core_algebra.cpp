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

#include "sympt/core_algebra.hpp"

#include <algorithm>

#include "sympt/errors.hpp"

namespace sympt {

namespace {

Eigen::Matrix2cd make_pauli(Pauli p) {
  Eigen::Matrix2cd m;
  switch (p) {
    case Pauli::I:
      m << 1, 0, 0, 1;
      break;
    case Pauli::X:
      m << 0, 1, 1, 0;
      break;
    case Pauli::Y:
      m << 0, -kI, kI, 0;
      break;
    case Pauli::Z:
      m << 1, 0, 0, -1;
      break;
  }
  return m;
}

std::string pauli_name(Pauli p) {
  switch (p) {
    case Pauli::I:
      return "1";
    case Pauli::X:
      return "σ_x";
    case Pauli::Y:
      return "σ_y";
    case Pauli::Z:
      return "σ_z";
  }
  return "?";
}

CMatrix kron(const CMatrix &a, const CMatrix &b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace

const Eigen::Matrix2cd &pauli(Pauli p) {
  static const Eigen::Matrix2cd table[4] = {
      make_pauli(Pauli::I), make_pauli(Pauli::X), make_pauli(Pauli::Y),
      make_pauli(Pauli::Z)};
  return table[static_cast<int>(p)];
}

StructuralMatrix omega_form(int n_modes) {
  if (n_modes < 1) {
    throw DimensionMismatch("omega_form requires n_modes >= 1");
  }
  const Eigen::Index n = n_modes;
  CMatrix omega = CMatrix::Zero(2 * n, 2 * n);
  omega.topRightCorner(n, n) = CMatrix::Identity(n, n);
  omega.bottomLeftCorner(n, n) = -CMatrix::Identity(n, n);
  return {StructuralKind::Omega, std::move(omega), "iσ_y⊗1"};
}

CMatrix pauli_tensor(Pauli p, const CMatrix &block) {
  if (block.rows() != block.cols() || block.rows() == 0) {
    throw DimensionMismatch("pauli_tensor block must be square and non-empty");
  }
  return kron(pauli(p), block);
}

StructuralMatrix pauli_pair(Pauli outer, Pauli inner, StructuralKind kind) {
  return {kind, kron(pauli(outer), pauli(inner)),
          pauli_name(outer) + "⊗" + pauli_name(inner)};
}

StructuralMatrix pauli_identity(Pauli p, int n_modes, StructuralKind kind) {
  return {kind, pauli_tensor(p, CMatrix::Identity(n_modes, n_modes)),
          pauli_name(p) + "⊗1"};
}

CMatrix antilinear_conjugate(const CMatrix &P, const CMatrix &H) {
  if (P.rows() != P.cols() || H.rows() != H.cols() || P.rows() != H.rows()) {
    throw DimensionMismatch("antilinear_conjugate: P and H must be square and of equal size");
  }
  Eigen::FullPivLU<CMatrix> lu(P);
  if (!lu.isInvertible()) {
    throw SingularMatrix("antilinear_conjugate: P is singular");
  }
  // X = P conj(H) P^{-1}  <=>  Pᵀ Xᵀ = (P conj(H))ᵀ
  const CMatrix rhs = P * H.conjugate();
  Eigen::FullPivLU<CMatrix> lu_t(P.transpose());
  return lu_t.solve(rhs.transpose()).transpose();
}

MatrixPredicates matrix_predicates(const CMatrix &A, double tol) {
  if (A.rows() != A.cols()) {
    throw DimensionMismatch("matrix_predicates requires a square matrix");
  }
  MatrixPredicates out;
  const CMatrix adj = A.adjoint();
  out.hermitian_residual = (A - adj).norm();
  out.anti_hermitian_residual = (A + adj).norm();
  out.symmetric_residual = (A - A.transpose()).norm();
  out.unitary_residual = (A * adj - CMatrix::Identity(A.rows(), A.cols())).norm();
  out.is_hermitian = out.hermitian_residual <= tol;
  out.is_anti_hermitian = out.anti_hermitian_residual <= tol;
  out.is_symmetric = out.symmetric_residual <= tol;
  out.is_unitary = out.unitary_residual <= tol;
  return out;
}

double default_tolerance(const CMatrix &A) {
  return kDefaultRelativeTolerance * std::max(1.0, A.norm());
}

}  // namespace sympt
