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

#include "sympt/evolution.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "sympt/core_algebra.hpp"
#include "sympt/errors.hpp"
#include "sympt/expm.hpp"

namespace sympt {

namespace {

CMatrix exp_step(const EffectiveHamiltonian &H, double t, double bound) {
  if (norm1(H.matrix) * std::abs(t) > bound) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), "‖H‖·|t| = %.3g exceeds the overflow bound %.3g",
                  norm1(H.matrix) * std::abs(t), bound);
    throw OverflowRisk(buf);
  }
  return expm(CMatrix(-kI * t * H.matrix));
}

// sin(ωt)/ω or sinh(Δt)/Δ written as a function of x = (κ² - ω₀²)t².
double sinc_like(double x, double t) {
  if (std::abs(x) < 1e-8) return t * (1.0 + x / 6.0 + x * x / 120.0);
  const double a = std::sqrt(std::abs(x));
  return x > 0.0 ? t * std::sinh(a) / a : t * std::sin(a) / a;
}

double cos_like(double x) {
  const double a = std::sqrt(std::abs(x));
  return x >= 0.0 ? std::cosh(a) : std::cos(a);
}

}  // namespace

double BlockPair::commutator_residual() const {
  const Eigen::Index n = F.rows();
  return (F * F.adjoint() - G * G.adjoint() - CMatrix::Identity(n, n)).norm();
}

SymplecticPropagator make_propagator(CMatrix matrix, double t) {
  if (matrix.rows() != matrix.cols() || matrix.rows() % 2 != 0 || matrix.rows() == 0) {
    throw DimensionMismatch("propagator must be 2N x 2N");
  }
  SymplecticPropagator out;
  out.n_modes = static_cast<int>(matrix.rows() / 2);
  out.t = t;
  const CMatrix omega = omega_form(out.n_modes).matrix;
  const CMatrix sx = pauli_identity(Pauli::X, out.n_modes, StructuralKind::ParityCandidate).matrix;
  out.symplectic_residual = (matrix * omega * matrix.transpose() - omega).norm();
  out.structure_residual = (matrix - sx * matrix.conjugate() * sx).norm();
  out.determinant = matrix.determinant();
  out.matrix = std::move(matrix);
  return out;
}

SymplecticPropagator propagate(const EffectiveHamiltonian &H, double t, double overflow_bound) {
  return make_propagator(exp_step(H, t, overflow_bound), t);
}

SymplecticPropagator closed_form_sms(double omega0, double kappa, double t) {
  const CMatrix H = build_heff(preset_cross_sms(omega0, kappa)).matrix;
  const double x = (kappa * kappa - omega0 * omega0) * t * t;
  const double c = cos_like(x);
  const double s = sinc_like(x, t);
  CMatrix M = c * CMatrix::Identity(4, 4) - kI * s * H;
  return make_propagator(std::move(M), t);
}

BlockPair split_blocks(const SymplecticPropagator &M, double tol) {
  if (tol < 0.0) tol = kDefaultRelativeTolerance;
  const double limit = tol * std::max(1.0, M.matrix.norm());
  if (M.structure_residual > limit) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), "propagator lacks the [[F, G], [G*, F*]] form, residual %.1e",
                  M.structure_residual);
    throw StructureViolation(buf);
  }
  const Eigen::Index n = M.n_modes;
  return {M.matrix.topLeftCorner(n, n), M.matrix.topRightCorner(n, n)};
}

CMatrix assemble_blocks(const BlockPair &blocks) {
  const Eigen::Index n = blocks.F.rows();
  CMatrix M(2 * n, 2 * n);
  M.topLeftCorner(n, n) = blocks.F;
  M.topRightCorner(n, n) = blocks.G;
  M.bottomLeftCorner(n, n) = blocks.G.conjugate();
  M.bottomRightCorner(n, n) = blocks.F.conjugate();
  return M;
}

CMatrix symplectic_inverse(const CMatrix &M) {
  const Eigen::Index n = M.rows() / 2;
  const CMatrix F = M.topLeftCorner(n, n);
  const CMatrix G = M.topRightCorner(n, n);
  CMatrix out(2 * n, 2 * n);
  out.topLeftCorner(n, n) = F.adjoint();
  out.topRightCorner(n, n) = -G.transpose();
  out.bottomLeftCorner(n, n) = -G.adjoint();
  out.bottomRightCorner(n, n) = F.transpose();
  return out;
}

SymplecticPropagator trotter_propagate(const HamiltonianTermList &terms, double t, int n_steps,
                                       TrotterOrder order, double overflow_bound) {
  if (n_steps < 1) {
    throw ValidationError("n_steps must be positive");
  }
  if (terms.terms.empty()) {
    throw ValidationError("empty term list");
  }
  const double dt = t / n_steps;
  const std::size_t k = terms.terms.size();
  std::vector<EffectiveHamiltonian> heffs;
  heffs.reserve(k);
  for (const auto &term : terms.terms) heffs.push_back(build_heff(term));
  const Eigen::Index dim = heffs.front().matrix.rows();

  CMatrix step = CMatrix::Identity(dim, dim);
  if (order == TrotterOrder::First) {
    for (const auto &h : heffs) step = step * exp_step(h, dt, overflow_bound);
  } else {
    std::vector<CMatrix> half;
    for (std::size_t i = 0; i + 1 < k; ++i) half.push_back(exp_step(heffs[i], 0.5 * dt, overflow_bound));
    for (const auto &h : half) step = step * h;
    step = step * exp_step(heffs.back(), dt, overflow_bound);
    for (auto it = half.rbegin(); it != half.rend(); ++it) step = step * *it;
  }

  CMatrix M = CMatrix::Identity(dim, dim);
  for (int i = 0; i < n_steps; ++i) M = M * step;
  return make_propagator(std::move(M), t);
}

}  // namespace sympt
