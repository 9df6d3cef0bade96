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

#include "sympt/types.hpp"

namespace sympt {

struct TakagiResult {
  CMatrix U;          // unitary
  RVector singular;   // non-negative, descending
};

/// Takagi factorisation B = U diag(s) Uᵀ of a complex symmetric matrix.
/// Columns for s_k > 0 come from the real symmetric embedding
/// [[Re B, Im B], [Im B, -Re B]]; the null space is completed by
/// Gram-Schmidt. Each column is signed so that its largest entry has a
/// positive real part. Singular values at or below zero_tol·max(1, ‖B‖_F)
/// are treated as zero. Throws SymmetryViolation when ‖B - Bᵀ‖_F exceeds
/// symmetry_tol·max(1, ‖B‖_F).
TakagiResult takagi(const CMatrix &B, double symmetry_tol = 1e-10, double zero_tol = 1e-14);

}  // namespace sympt
