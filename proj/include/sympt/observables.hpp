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

#include "sympt/evolution.hpp"
#include "sympt/types.hpp"

namespace sympt {

// Vacuum moments of the evolved operators. With a†_p(t) = Σ_q F_pq a†_q +
// G_pq a_q the only nonzero vacuum contraction is ⟨a_q a†_r⟩ = δ_qr, so
//
//   n_p = ⟨a†_p a_p⟩ = Σ_q |G_pq|²
//   c_p = ⟨a†_p a†_p⟩ = Σ_q F_pq G_pq,   ⟨a_p a_p⟩ = c_p*
//
// For the Gaussian vacuum, Wick's theorem expands the four-point function
// over the pairings (12)(34), (13)(24) and (14)(23):
//
//   ⟨a†a a†a⟩ = ⟨a†a⟩⟨a†a⟩ + ⟨a†a†⟩⟨a a⟩ + ⟨a†a⟩⟨a a†⟩
//             = n² + |c|² + n(n + 1),
//
// so (ΔN_p)² = n_p(n_p + 1) + |c_p|².

struct MomentReport {
  RVector mean_n;
  RVector var_n;
  CVector anomalous;  // ⟨a_p(t) a_p(t)⟩
};

RVector mean_occupations(const BlockPair &blocks);

double occupation_variance(const BlockPair &blocks, int p);

CVector anomalous_moments(const BlockPair &blocks);

double total_number(const BlockPair &blocks);

MomentReport vacuum_moments(const BlockPair &blocks);

}  // namespace sympt
