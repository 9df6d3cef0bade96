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

#include <cstdint>
#include <random>
#include <vector>

#include "sympt/types.hpp"

namespace sympt {

/// A validated quadratic bosonic Hamiltonian
///
///   H = Σ_pq W_pq a†_p a_q + ½ Σ_pq (K_pq a_p a_q + K*_pq a†_p a†_q)
///
/// with W Hermitian and K complex symmetric. The ½ on the pair terms makes K
/// exactly the upper-right block of the effective matrix, so an unordered
/// two-mode pair {p, q} contributes K_pq a_p a_q + h.c. once.
class QuadraticHamiltonianSpec {
 public:
  int n_modes() const { return static_cast<int>(W_.rows()); }
  const CMatrix &W() const { return W_; }
  const CMatrix &K() const { return K_; }

  friend QuadraticHamiltonianSpec validate_spec(const CMatrix &W, const CMatrix &K, double tol);

 private:
  QuadraticHamiltonianSpec(CMatrix W, CMatrix K) : W_(std::move(W)), K_(std::move(K)) {}

  CMatrix W_;
  CMatrix K_;
};

/// Checks W = W† and K = Kᵀ to `tol` (absolute, Frobenius) and symmetrises
/// away the sub-tolerance remainder. Throws DimensionMismatch,
/// HermiticityViolation or SymmetryViolation.
QuadraticHamiltonianSpec validate_spec(const CMatrix &W, const CMatrix &K, double tol = 1e-10);

/// Entrywise sum of two specs on the same modes.
QuadraticHamiltonianSpec add_specs(const QuadraticHamiltonianSpec &a, const QuadraticHamiltonianSpec &b);

/// The four terms of H_eff = 1⊗(Wᵀ-W)/2 + σ_z⊗(Wᵀ+W)/2 + iσ_y⊗K_H + iσ_x⊗K_AH.
struct HeffParts {
  CMatrix antisymmetric_w;  // 1₂ ⊗ (Wᵀ - W)/2
  CMatrix symmetric_w;      // σ_z ⊗ (Wᵀ + W)/2
  CMatrix hermitian_k;      // iσ_y ⊗ K_H
  CMatrix anti_hermitian_k; // iσ_x ⊗ K_AH
  CMatrix K_H;              // (K + K†)/2
  CMatrix K_AH;             // with i K_AH = (K - K†)/2

  CMatrix sum() const { return antisymmetric_w + symmetric_w + hermitian_k + anti_hermitian_k; }
};

struct EffectiveHamiltonian {
  int n_modes = 0;
  CMatrix matrix;  // [[Wᵀ, K], [-K†, -W]] in daggers-first ordering
  HeffParts parts;
};

EffectiveHamiltonian build_heff(const QuadraticHamiltonianSpec &spec);

/// Wraps an arbitrary 2N x 2N matrix (e.g. a hand-written test operator) so
/// the spectral routines can consume it. `parts` is left empty.
EffectiveHamiltonian wrap_matrix(const CMatrix &matrix);

QuadraticHamiltonianSpec preset_beam_splitter(double omega1, double omega2, double g);
QuadraticHamiltonianSpec preset_two_mode_squeezer(double omega1, double omega2, double kappa);
QuadraticHamiltonianSpec preset_cross_sms(double omega0, double kappa);

/// W = (A + A†)/2, K = (B + Bᵀ)/2 with i.i.d. standard complex Gaussian
/// entries. With `zero_k` the squeezing block is dropped.
QuadraticHamiltonianSpec random_spec(int n_modes, std::mt19937_64 &rng, bool zero_k = false);

/// Random member of the K_H = 0, Wᵀ = W class (real symmetric W, K = iR with
/// R real symmetric), which carries the chiral and PT symmetries.
QuadraticHamiltonianSpec random_chiral_spec(int n_modes, std::mt19937_64 &rng);

/// A Hamiltonian written as a sum of local pieces.
struct HamiltonianTermList {
  std::vector<QuadraticHamiltonianSpec> terms;
  std::vector<std::vector<int>> modes_touched;

  QuadraticHamiltonianSpec total() const;
};

HamiltonianTermList make_term_list(std::vector<QuadraticHamiltonianSpec> terms);

/// Splits a spec into its number-conserving part (W, 0) and its squeezing
/// part (0, K).
HamiltonianTermList split_passive_squeezing(const QuadraticHamiltonianSpec &spec);

}  // namespace sympt
