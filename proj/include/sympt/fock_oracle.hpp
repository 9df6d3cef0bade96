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

#include <cstddef>
#include <vector>

#include "sympt/compiler.hpp"
#include "sympt/hamiltonian.hpp"
#include "sympt/observables.hpp"
#include "sympt/types.hpp"

namespace sympt {

inline constexpr std::size_t kDefaultDimensionCap = std::size_t{1} << 16;

/// Product basis with a uniform per-mode cutoff. Flat index
/// Σ_p n_p (cutoff+1)^{N-1-p}: mode 0 is the most significant digit.
class FockBasis {
 public:
  /// Throws DimensionCap when (cutoff+1)^N exceeds `cap`.
  FockBasis(int n_modes, int cutoff, std::size_t cap = kDefaultDimensionCap);

  int n_modes() const { return n_modes_; }
  int cutoff() const { return cutoff_; }
  std::size_t dimension() const { return dimension_; }
  std::size_t stride(int mode) const { return strides_[mode]; }

  std::size_t index(const std::vector<int> &occupations) const;
  std::vector<int> occupations(std::size_t index) const;
  int occupation(std::size_t index, int mode) const {
    return static_cast<int>((index / strides_[mode]) % static_cast<std::size_t>(cutoff_ + 1));
  }

 private:
  int n_modes_;
  int cutoff_;
  std::size_t dimension_;
  std::vector<std::size_t> strides_;
};

struct FockState {
  FockBasis basis;
  CVector amplitudes;
  double norm_leakage = 0.0;  // probability that some mode sits at the cutoff
};

double norm_leakage(const FockBasis &basis, const CVector &amplitudes);

FockState vacuum_state(const FockBasis &basis);
FockState basis_state(const FockBasis &basis, const std::vector<int> &occupations);

/// The truncated second-quantised Hamiltonian
///   Σ W_pq a†_p a_q + ½ Σ (K_pq a_p a_q + K*_pq a†_p a†_q)
/// as a dense Hermitian matrix.
CMatrix build_fock_hamiltonian(const QuadraticHamiltonianSpec &spec, const FockBasis &basis);

/// Cached Hermitian eigendecomposition; evolve() may be called concurrently.
class FockPropagator {
 public:
  explicit FockPropagator(const CMatrix &H);

  /// exp(-i H t) ψ0 with norm_leakage recomputed.
  FockState evolve(const FockState &psi0, double t) const;

 private:
  RVector energies_;
  CMatrix vectors_;
};

FockState evolve_state(const CMatrix &H, double t, const FockState &psi0);

/// Exact ⟨N_p⟩, (ΔN_p)² and ⟨a_p a_p⟩ from the amplitudes.
MomentReport number_moments(const FockState &psi);

/// Applies a†_p and renormalises. Throws ZeroProbability if the result
/// vanishes inside the truncation.
FockState apply_creation(const FockState &psi, int mode);

enum class Detector {
  PhotonNumberResolving,  // projects on n_b = 1 and removes the ancilla
  Threshold,              // projects on n_b ≥ 1 and keeps the ancilla
};

struct HeraldResult {
  FockState state;
  double probability = 0.0;
};

/// Throws ZeroProbability when the projection annihilates the state.
HeraldResult herald(const FockState &psi, int ancilla, Detector detector = Detector::PhotonNumberResolving);

/// The second-quantised unitary of a circuit gate applied along its modes.
FockState apply_gate(const FockState &psi, const Gate &gate);

struct CircuitRun {
  FockState state;  // ancilla removed (resolving) or kept (threshold)
  double herald_probability = 1.0;
};

/// Runs the program from vacuum on `basis`, which must hold the system and
/// ancilla modes. Heralded gates are followed by herald().
CircuitRun run_circuit(const CircuitProgram &program, const FockBasis &basis,
                       Detector detector = Detector::PhotonNumberResolving);

/// e^{-iHt} a†_j e^{iHt} |0⟩, normalised: the state the compiled circuit of
/// M(t) should prepare.
FockState single_photon_target(const QuadraticHamiltonianSpec &spec, double t, int source_mode,
                               const FockBasis &basis);

/// ⟨target| ρ |target⟩ where ρ is the marginal of `state` on the leading
/// target.basis.n_modes() modes; extra trailing modes are traced out.
double fidelity(const FockState &target, const FockState &state);

struct DiscrepancyReport {
  RVector mean_oracle;
  RVector mean_symplectic;
  RVector var_oracle;
  RVector var_symplectic;
  double mean_discrepancy = 0.0;  // max over modes
  double var_discrepancy = 0.0;
  double norm_leakage = 0.0;
  double tolerance = 0.0;         // max(1e-6, 10·norm_leakage)
  bool pass = false;
};

/// Evolves the vacuum in the truncated space and compares its moments with
/// the Wick moments of M(t). Both sides use the operator picture
/// a†(t) = e^{-iHt} a† e^{iHt}, i.e. the state e^{iHt}|0⟩.
DiscrepancyReport compare_symplectic(const QuadraticHamiltonianSpec &spec, double t, const FockBasis &basis);

}  // namespace sympt
