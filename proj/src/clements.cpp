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

#include "sympt/clements.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "sympt/errors.hpp"

namespace sympt {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNullTol = 1e-15;

double wrap_angle(double a) {
  double w = std::fmod(a, 2.0 * kPi);
  if (w < 0.0) w += 2.0 * kPi;
  if (w >= 2.0 * kPi) w = 0.0;
  return w;
}

// Right-multiplies columns (m, m+1) by T(θ, φ)†.
void apply_right_inverse(CMatrix &U, int m, double theta, double phi) {
  const Eigen::Matrix2cd Ti = mesh_cell_matrix(theta, phi).adjoint();
  const CMatrix cols = U.middleCols(m, 2) * Ti;
  U.middleCols(m, 2) = cols;
}

// Left-multiplies rows (m, m+1) by T(θ, φ).
void apply_left(CMatrix &U, int m, double theta, double phi) {
  const CMatrix rows = mesh_cell_matrix(theta, phi) * U.middleRows(m, 2);
  U.middleRows(m, 2) = rows;
}

}  // namespace

Eigen::Matrix2cd mesh_cell_matrix(double theta, double phi) {
  const cplx e = std::polar(1.0, phi);
  Eigen::Matrix2cd t;
  t << e * std::cos(theta), -std::sin(theta), e * std::sin(theta), std::cos(theta);
  return t;
}

ClementsMesh clements_decompose(const CMatrix &U, double tol) {
  const int n = static_cast<int>(U.rows());
  if (U.cols() != n || n == 0) {
    throw DimensionMismatch("clements_decompose needs a non-empty square matrix");
  }
  const double residual = (U * U.adjoint() - CMatrix::Identity(n, n)).norm();
  if (residual > tol) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "matrix not unitary, residual %.1e", residual);
    throw NotUnitary(buf);
  }

  CMatrix local = U;
  std::vector<MeshCell> right;  // nulled from the right, execution order
  std::vector<MeshCell> left;   // nulled from the left, still to be pushed through D
  for (int k = 0, i = n - 2; i >= 0; ++k, --i) {
    if (k % 2 == 0) {
      for (int j = n - 2 - i; j >= 0; --j) {
        const int row = i + j + 1;
        MeshCell c{j, 0.0, 0.0};
        if (local(row, j + 1) == 0.0 && std::abs(local(row, j)) > kNullTol) {
          c.theta = kPi / 2;
        } else if (local(row, j + 1) != 0.0) {
          const cplx r = local(row, j) / local(row, j + 1);
          c.theta = std::atan(std::abs(r));
          c.phi = std::arg(r);
        }
        apply_right_inverse(local, c.m, c.theta, c.phi);
        right.push_back(c);
      }
    } else {
      for (int j = 0; j <= n - 2 - i; ++j) {
        const int row = i + j + 1;
        MeshCell c{row - 1, 0.0, 0.0};
        if (local(row - 1, j) == 0.0 && std::abs(local(row, j)) > kNullTol) {
          c.theta = kPi / 2;
        } else if (local(row - 1, j) != 0.0) {
          const cplx r = -local(row, j) / local(row - 1, j);
          c.theta = std::atan(std::abs(r));
          c.phi = std::arg(r);
        }
        apply_left(local, c.m, c.theta, c.phi);
        left.push_back(c);
      }
    }
  }

  // T⁻¹ D = D' T' with θ' = θ, φ' = α - β + π, α' = β - φ + π, β' = β.
  RVector phases(n);
  for (int p = 0; p < n; ++p) phases[p] = std::arg(local(p, p));
  ClementsMesh mesh;
  mesh.size = n;
  mesh.cells = right;
  for (auto it = left.rbegin(); it != left.rend(); ++it) {
    const double alpha = phases[it->m];
    const double beta = phases[it->m + 1];
    if (it->theta == 0.0) {
      mesh.cells.push_back({it->m, 0.0, 0.0});
      phases[it->m] = alpha - it->phi;
      continue;
    }
    mesh.cells.push_back({it->m, it->theta, wrap_angle(alpha - beta + kPi)});
    phases[it->m] = beta - it->phi + kPi;
  }
  for (auto &c : mesh.cells) c.phi = wrap_angle(c.phi);
  mesh.output_phases = phases.unaryExpr([](double a) { return wrap_angle(a); });
  return mesh;
}

CMatrix clements_reconstruct(const ClementsMesh &mesh) {
  CMatrix U = CMatrix::Identity(mesh.size, mesh.size);
  for (const auto &c : mesh.cells) apply_left(U, c.m, c.theta, c.phi);
  for (int p = 0; p < mesh.size; ++p) U.row(p) *= std::polar(1.0, mesh.output_phases[p]);
  return U;
}

}  // namespace sympt
