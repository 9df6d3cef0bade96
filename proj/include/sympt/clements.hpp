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

#include <vector>

#include "sympt/types.hpp"

namespace sympt {

/// One beam-splitter cell on modes (m, m+1) with transfer matrix
///
///   T(θ, φ) = [[e^{iφ} cos θ, -sin θ], [e^{iφ} sin θ, cos θ]].
struct MeshCell {
  int m = 0;
  double theta = 0.0;  // [0, π/2]
  double phi = 0.0;    // [0, 2π)
};

/// Rectangular interferometer: U = D · T_K ⋯ T_1 with cells listed in
/// execution order and D = diag(e^{i output_phases}).
struct ClementsMesh {
  int size = 0;
  std::vector<MeshCell> cells;
  RVector output_phases;
};

Eigen::Matrix2cd mesh_cell_matrix(double theta, double phi);

/// Throws NotUnitary when ‖U U† - 1‖_F > tol.
ClementsMesh clements_decompose(const CMatrix &U, double tol = 1e-9);

CMatrix clements_reconstruct(const ClementsMesh &mesh);

}  // namespace sympt
