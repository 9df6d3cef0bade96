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

#include "sympt/compiler.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "sympt/errors.hpp"
#include "sympt/takagi.hpp"

namespace sympt {

CMatrix passive_matrix(const CMatrix &X) {
  const Eigen::Index n = X.rows();
  CMatrix out = CMatrix::Zero(2 * n, 2 * n);
  out.topLeftCorner(n, n) = X;
  out.bottomRightCorner(n, n) = X.conjugate();
  return out;
}

CMatrix squeeze_matrix(const RVector &r) {
  const Eigen::Index n = r.size();
  CMatrix out = CMatrix::Zero(2 * n, 2 * n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out(k, k) = out(n + k, n + k) = std::cosh(r[k]);
    out(k, n + k) = out(n + k, k) = std::sinh(r[k]);
  }
  return out;
}

CMatrix squeeze_diagonal(const RVector &r) {
  const Eigen::Index n = r.size();
  CMatrix out = CMatrix::Zero(2 * n, 2 * n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out(k, k) = std::exp(r[k]);
    out(n + k, n + k) = std::exp(-r[k]);
  }
  return out;
}

CMatrix squeeze_rotation(int n_modes) {
  const Eigen::Index n = n_modes;
  const double h = 1.0 / std::sqrt(2.0);
  CMatrix q(2 * n, 2 * n);
  q << h * CMatrix::Identity(n, n), h * CMatrix::Identity(n, n), h * CMatrix::Identity(n, n),
      -h * CMatrix::Identity(n, n);
  return q;
}

CMatrix assemble(const SvdTriple &svd) {
  return passive_matrix(svd.U_passive) * squeeze_matrix(svd.squeeze_params) *
         passive_matrix(svd.V_passive.adjoint());
}

SvdTriple symplectic_svd(const SymplecticPropagator &M, double tol) {
  if (tol < 0.0) tol = 1e-9;
  const double limit = tol * std::max(1.0, M.matrix.squaredNorm());
  if (M.structure_residual > limit || M.symplectic_residual > limit) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), "not a Bogoliubov matrix: symplectic %.1e, structure %.1e",
                  M.symplectic_residual, M.structure_residual);
    throw StructureViolation(buf);
  }
  const Eigen::Index n = M.n_modes;
  const CMatrix F = M.matrix.topLeftCorner(n, n);
  const CMatrix G = M.matrix.topRightCorner(n, n);

  // Upper-right block of M M† is F Gᵀ + G Fᵀ = U sinh(2R) Uᵀ.
  const CMatrix B = F * G.transpose() + G * F.transpose();
  const TakagiResult tk = takagi(0.5 * (B + B.transpose()), 1e-8);

  SvdTriple out;
  out.U_passive = tk.U;
  out.squeeze_params = tk.singular.unaryExpr([](double s) { return 0.5 * std::asinh(s); });
  RVector inv_cosh = out.squeeze_params.unaryExpr([](double r) { return 1.0 / std::cosh(r); });
  out.V_passive = F.adjoint() * tk.U * inv_cosh.asDiagonal();
  out.reconstruction_residual = (M.matrix - assemble(out)).norm();
  return out;
}

void append_mesh(std::vector<Gate> &gates, const ClementsMesh &mesh) {
  for (const auto &c : mesh.cells) {
    gates.push_back({GateType::BeamSplitter, {c.m, c.m + 1}, c.theta, c.phi, 0.0});
  }
  for (int p = 0; p < mesh.size; ++p) {
    gates.push_back({GateType::PhaseShift, {p}, 0.0, mesh.output_phases[p], 0.0});
  }
}

CircuitProgram emit_circuit(const SvdTriple &svd, int source_mode, const EmitOptions &options) {
  const int n = static_cast<int>(svd.U_passive.rows());
  if (source_mode < 0 || source_mode >= n) {
    throw ValidationError("source mode out of range");
  }
  for (Eigen::Index k = 0; k < svd.squeeze_params.size(); ++k) {
    if (svd.squeeze_params[k] > options.squeeze_clip) {
      char buf[128];
      std::snprintf(buf, sizeof(buf), "squeezing r_%d = %.3g exceeds the clip %.3g",
                    static_cast<int>(k) + 1, svd.squeeze_params[k], options.squeeze_clip);
      throw SqueezeOutOfRange(buf);
    }
  }

  CircuitProgram prog;
  prog.n_modes = n;
  prog.source_mode = source_mode;
  prog.r_herald = options.r_herald;
  const int ancilla = n;
  prog.ancilla_modes = {ancilla};

  const CMatrix &U = svd.U_passive;
  for (int k = 0; k < n; ++k) {
    prog.gates.push_back({GateType::SingleModeSqueeze, {k}, 0.0, std::numbers::pi, svd.squeeze_params[k]});
  }
  append_mesh(prog.gates, clements_decompose(U.conjugate()));
  prog.gates.push_back({GateType::TwoModeSqueezeHerald, {source_mode, ancilla}, 0.0, 0.0, options.r_herald});
  append_mesh(prog.gates, clements_decompose(U.transpose()));
  for (int k = 0; k < n; ++k) {
    prog.gates.push_back({GateType::SingleModeSqueeze, {k}, 0.0, 0.0, svd.squeeze_params[k]});
  }
  append_mesh(prog.gates, clements_decompose(svd.V_passive.conjugate()));
  return prog;
}

std::string gate_type_name(GateType type) {
  switch (type) {
    case GateType::PhaseShift:
      return "ps";
    case GateType::BeamSplitter:
      return "bs";
    case GateType::SingleModeSqueeze:
      return "sq";
    case GateType::TwoModeSqueezeHerald:
      return "tmsh";
  }
  return "unknown";
}

}  // namespace sympt
