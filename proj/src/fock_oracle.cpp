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

#include "sympt/fock_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "sympt/errors.hpp"
#include "sympt/evolution.hpp"
#include "sympt/kernels.hpp"

namespace sympt {

namespace {

CMatrix hermitian_exp(const CMatrix &H, double t) {
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(H);
  if (eig.info() != Eigen::Success) {
    throw SolverFailure("Hermitian eigensolver failed");
  }
  const CVector phases = (-kI * t * eig.eigenvalues().cast<cplx>()).array().exp();
  return eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
}

// W = i log T for a 2 x 2 unitary T, so that e^{-iW} = T.
CMatrix passive_generator(const Eigen::Matrix2cd &T) {
  const CMatrix t_dyn = T;
  Eigen::ComplexSchur<CMatrix> schur(t_dyn);
  const CMatrix &Q = schur.matrixU();
  const CMatrix &S = schur.matrixT();
  CMatrix angles = CMatrix::Zero(2, 2);
  for (int k = 0; k < 2; ++k) angles(k, k) = std::arg(S(k, k));
  CMatrix W = -Q * angles * Q.adjoint();
  return 0.5 * (W + W.adjoint());
}

QuadraticHamiltonianSpec gate_generator(const Gate &g) {
  switch (g.type) {
    case GateType::PhaseShift: {
      CMatrix W(1, 1);
      W(0, 0) = -g.phi;
      return validate_spec(W, CMatrix::Zero(1, 1));
    }
    case GateType::BeamSplitter:
      return validate_spec(passive_generator(mesh_cell_matrix(g.theta, g.phi)), CMatrix::Zero(2, 2), 1e-9);
    case GateType::SingleModeSqueeze: {
      CMatrix K(1, 1);
      K(0, 0) = kI * g.r * std::polar(1.0, -g.phi);
      return validate_spec(CMatrix::Zero(1, 1), K);
    }
    case GateType::TwoModeSqueezeHerald: {
      CMatrix K = CMatrix::Zero(2, 2);
      K(0, 1) = K(1, 0) = kI * g.r;
      return validate_spec(CMatrix::Zero(2, 2), K);
    }
  }
  throw ValidationError("unknown gate");
}

// Applies a local operator on `modes` (local mode 0 most significant).
CVector apply_local(const FockBasis &basis, const CVector &psi, const std::vector<int> &modes,
                    const CMatrix &op) {
  const std::size_t local_dim = static_cast<std::size_t>(op.rows());
  const int d = basis.cutoff() + 1;
  std::vector<std::size_t> offsets(local_dim, 0);
  for (std::size_t l = 0; l < local_dim; ++l) {
    std::size_t rest = l;
    for (int k = static_cast<int>(modes.size()) - 1; k >= 0; --k) {
      offsets[l] += (rest % d) * basis.stride(modes[k]);
      rest /= d;
    }
  }
  CVector out = psi;
  CVector in_local(local_dim);
  CVector out_local(local_dim);
  for (std::size_t i = 0; i < basis.dimension(); ++i) {
    bool base = true;
    for (int m : modes) base = base && basis.occupation(i, m) == 0;
    if (!base) continue;
    for (std::size_t l = 0; l < local_dim; ++l) in_local[l] = psi[i + offsets[l]];
    kernels::gemv(op.data(), local_dim, local_dim, local_dim, in_local.data(), out_local.data());
    for (std::size_t l = 0; l < local_dim; ++l) out[i + offsets[l]] = out_local[l];
  }
  return out;
}

FockState make_state(const FockBasis &basis, CVector amplitudes) {
  const double leak = norm_leakage(basis, amplitudes);
  return {basis, std::move(amplitudes), leak};
}

}  // namespace

FockBasis::FockBasis(int n_modes, int cutoff, std::size_t cap) : n_modes_(n_modes), cutoff_(cutoff) {
  if (n_modes < 1 || cutoff < 0) {
    throw ValidationError("Fock basis needs n_modes >= 1 and cutoff >= 0");
  }
  strides_.assign(n_modes, 1);
  std::size_t dim = 1;
  for (int p = n_modes - 1; p >= 0; --p) {
    strides_[p] = dim;
    if (dim > cap / static_cast<std::size_t>(cutoff + 1)) {
      throw DimensionCap("Fock dimension (" + std::to_string(cutoff + 1) + ")^" + std::to_string(n_modes) +
                         " exceeds the cap " + std::to_string(cap));
    }
    dim *= static_cast<std::size_t>(cutoff + 1);
  }
  dimension_ = dim;
}

std::size_t FockBasis::index(const std::vector<int> &occupations) const {
  if (static_cast<int>(occupations.size()) != n_modes_) {
    throw DimensionMismatch("occupation list has the wrong length");
  }
  std::size_t idx = 0;
  for (int p = 0; p < n_modes_; ++p) {
    if (occupations[p] < 0 || occupations[p] > cutoff_) {
      throw ValidationError("occupation outside the truncated basis");
    }
    idx += static_cast<std::size_t>(occupations[p]) * strides_[p];
  }
  return idx;
}

std::vector<int> FockBasis::occupations(std::size_t index) const {
  std::vector<int> occ(n_modes_);
  for (int p = 0; p < n_modes_; ++p) occ[p] = occupation(index, p);
  return occ;
}

double norm_leakage(const FockBasis &basis, const CVector &amplitudes) {
  double leak = 0.0;
  for (std::size_t i = 0; i < basis.dimension(); ++i) {
    for (int p = 0; p < basis.n_modes(); ++p) {
      if (basis.occupation(i, p) == basis.cutoff()) {
        leak += std::norm(amplitudes[i]);
        break;
      }
    }
  }
  return leak;
}

FockState vacuum_state(const FockBasis &basis) {
  CVector a = CVector::Zero(basis.dimension());
  a[0] = 1.0;
  return make_state(basis, std::move(a));
}

FockState basis_state(const FockBasis &basis, const std::vector<int> &occupations) {
  CVector a = CVector::Zero(basis.dimension());
  a[basis.index(occupations)] = 1.0;
  return make_state(basis, std::move(a));
}

CMatrix build_fock_hamiltonian(const QuadraticHamiltonianSpec &spec, const FockBasis &basis) {
  const int n = spec.n_modes();
  if (n != basis.n_modes()) {
    throw DimensionMismatch("spec and basis mode counts differ");
  }
  const std::size_t dim = basis.dimension();
  const CMatrix &W = spec.W();
  const CMatrix &K = spec.K();
  const int c = basis.cutoff();
  CMatrix H = CMatrix::Zero(dim, dim);
  CMatrix pair = CMatrix::Zero(dim, dim);  // ½ Σ K_pq a_p a_q

  for (std::size_t i = 0; i < dim; ++i) {
    const std::vector<int> occ = basis.occupations(i);
    for (int p = 0; p < n; ++p) {
      H(i, i) += W(p, p).real() * static_cast<double>(occ[p]);
      for (int q = 0; q < n; ++q) {
        if (q != p && occ[q] > 0 && occ[p] < c && W(p, q) != 0.0) {
          const std::size_t j = i - basis.stride(q) + basis.stride(p);
          H(j, i) += W(p, q) * std::sqrt(static_cast<double>(occ[q]) * (occ[p] + 1));
        }
        if (K(p, q) == 0.0) continue;
        if (p == q) {
          if (occ[p] >= 2) {
            const std::size_t j = i - 2 * basis.stride(p);
            pair(j, i) += 0.5 * K(p, p) * std::sqrt(static_cast<double>(occ[p]) * (occ[p] - 1));
          }
        } else if (occ[p] >= 1 && occ[q] >= 1) {
          const std::size_t j = i - basis.stride(p) - basis.stride(q);
          pair(j, i) += 0.5 * K(p, q) * std::sqrt(static_cast<double>(occ[p]) * occ[q]);
        }
      }
    }
  }
  H += pair + pair.adjoint();
  return 0.5 * (H + H.adjoint());
}

FockPropagator::FockPropagator(const CMatrix &H) {
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(H);
  if (eig.info() != Eigen::Success) {
    throw SolverFailure("Hermitian eigensolver failed on the Fock Hamiltonian");
  }
  energies_ = eig.eigenvalues();
  vectors_ = eig.eigenvectors();
}

FockState FockPropagator::evolve(const FockState &psi0, double t) const {
  const std::size_t dim = static_cast<std::size_t>(vectors_.rows());
  if (static_cast<std::size_t>(psi0.amplitudes.size()) != dim) {
    throw DimensionMismatch("state and Hamiltonian dimensions differ");
  }
  CVector coeffs(dim);
  kernels::gemv_adjoint(vectors_.data(), dim, dim, dim, psi0.amplitudes.data(), coeffs.data());
  const CVector phases = (-kI * t * energies_.cast<cplx>()).array().exp();
  kernels::hadamard(coeffs.data(), phases.data(), dim);
  CVector out(dim);
  kernels::gemv(vectors_.data(), dim, dim, dim, coeffs.data(), out.data());
  return make_state(psi0.basis, std::move(out));
}

FockState evolve_state(const CMatrix &H, double t, const FockState &psi0) {
  return FockPropagator(H).evolve(psi0, t);
}

MomentReport number_moments(const FockState &psi) {
  const FockBasis &basis = psi.basis;
  const int n = basis.n_modes();
  const std::size_t dim = basis.dimension();
  MomentReport out;
  out.mean_n.resize(n);
  out.var_n.resize(n);
  out.anomalous.resize(n);
  std::vector<double> w1(dim), w2(dim);
  const double total = kernels::norm2(psi.amplitudes.data(), dim);
  for (int p = 0; p < n; ++p) {
    cplx pair = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
      const int k = basis.occupation(i, p);
      w1[i] = k;
      w2[i] = static_cast<double>(k) * k;
      if (k >= 2) {
        pair += std::conj(psi.amplitudes[i - 2 * basis.stride(p)]) * std::sqrt(static_cast<double>(k) * (k - 1)) *
                psi.amplitudes[i];
      }
    }
    const double mean = kernels::weighted_norm2(psi.amplitudes.data(), w1.data(), dim) / total;
    const double second = kernels::weighted_norm2(psi.amplitudes.data(), w2.data(), dim) / total;
    out.mean_n[p] = mean;
    out.var_n[p] = std::max(0.0, second - mean * mean);
    out.anomalous[p] = pair / total;
  }
  return out;
}

FockState apply_creation(const FockState &psi, int mode) {
  const FockBasis &basis = psi.basis;
  if (mode < 0 || mode >= basis.n_modes()) {
    throw ValidationError("mode index out of range");
  }
  CVector out = CVector::Zero(basis.dimension());
  for (std::size_t i = 0; i < basis.dimension(); ++i) {
    const int k = basis.occupation(i, mode);
    if (k < basis.cutoff()) out[i + basis.stride(mode)] = std::sqrt(static_cast<double>(k + 1)) * psi.amplitudes[i];
  }
  const double nrm = out.norm();
  if (nrm == 0.0) {
    throw ZeroProbability("creation operator annihilated the truncated state");
  }
  return make_state(basis, out / nrm);
}

HeraldResult herald(const FockState &psi, int ancilla, Detector detector) {
  const FockBasis &basis = psi.basis;
  if (ancilla < 0 || ancilla >= basis.n_modes()) {
    throw ValidationError("ancilla outside the basis");
  }
  const double total = psi.amplitudes.squaredNorm();
  HeraldResult out{psi, 0.0};
  if (detector == Detector::Threshold) {
    CVector projected = psi.amplitudes;
    for (std::size_t i = 0; i < basis.dimension(); ++i) {
      if (basis.occupation(i, ancilla) == 0) projected[i] = 0.0;
    }
    out.probability = projected.squaredNorm() / total;
    if (out.probability <= 0.0) throw ZeroProbability("no photon reaches the herald detector");
    out.state = make_state(basis, projected / projected.norm());
    return out;
  }

  if (basis.n_modes() == 1) {
    throw ValidationError("cannot remove the only mode of the basis");
  }
  if (basis.cutoff() < 1) {
    throw ZeroProbability("cutoff 0 admits no herald photon");
  }
  const FockBasis reduced(basis.n_modes() - 1, basis.cutoff());
  CVector projected = CVector::Zero(reduced.dimension());
  std::vector<int> occ_full(basis.n_modes());
  for (std::size_t r = 0; r < reduced.dimension(); ++r) {
    const std::vector<int> occ = reduced.occupations(r);
    for (int p = 0, k = 0; p < basis.n_modes(); ++p) occ_full[p] = p == ancilla ? 1 : occ[k++];
    projected[r] = psi.amplitudes[basis.index(occ_full)];
  }
  out.probability = projected.squaredNorm() / total;
  if (out.probability <= 0.0) throw ZeroProbability("herald outcome n_b = 1 has zero probability");
  out.state = make_state(reduced, projected / projected.norm());
  return out;
}

FockState apply_gate(const FockState &psi, const Gate &gate) {
  const FockBasis &basis = psi.basis;
  for (int m : gate.modes) {
    if (m < 0 || m >= basis.n_modes()) throw ValidationError("gate mode outside the basis");
  }
  const FockBasis local(static_cast<int>(gate.modes.size()), basis.cutoff());
  const CMatrix op = hermitian_exp(build_fock_hamiltonian(gate_generator(gate), local), 1.0);
  return make_state(basis, apply_local(basis, psi.amplitudes, gate.modes, op));
}

CircuitRun run_circuit(const CircuitProgram &program, const FockBasis &basis, Detector detector) {
  const int needed = program.n_modes + static_cast<int>(program.ancilla_modes.size());
  if (basis.n_modes() != needed) {
    throw DimensionMismatch("basis must hold " + std::to_string(needed) + " modes (system plus ancillas)");
  }
  CircuitRun run{vacuum_state(basis), 1.0};
  // Resolved ancillas are removed once measured; later gates never touch
  // them because every ancilla index exceeds the system modes.
  for (const auto &g : program.gates) {
    run.state = apply_gate(run.state, g);
    if (g.type == GateType::TwoModeSqueezeHerald) {
      HeraldResult h = herald(run.state, g.modes[1], detector);
      run.herald_probability *= h.probability;
      run.state = std::move(h.state);
    }
  }
  return run;
}

FockState single_photon_target(const QuadraticHamiltonianSpec &spec, double t, int source_mode,
                               const FockBasis &basis) {
  const FockPropagator prop(build_fock_hamiltonian(spec, basis));
  const FockState back = prop.evolve(vacuum_state(basis), -t);
  const FockState raised = apply_creation(back, source_mode);
  FockState out = prop.evolve(raised, t);
  const double nrm = out.amplitudes.norm();
  out.amplitudes /= nrm;
  return out;
}

double fidelity(const FockState &target, const FockState &state) {
  const FockBasis &tb = target.basis;
  const FockBasis &sb = state.basis;
  if (sb.n_modes() < tb.n_modes() || sb.cutoff() != tb.cutoff()) {
    throw DimensionMismatch("state basis does not extend the target basis");
  }
  const std::size_t block = sb.dimension() / tb.dimension();
  const double total = state.amplitudes.squaredNorm();
  double f = 0.0;
  for (std::size_t b = 0; b < block; ++b) {
    cplx overlap = 0.0;
    for (std::size_t i = 0; i < tb.dimension(); ++i) {
      overlap += std::conj(target.amplitudes[i]) * state.amplitudes[i * block + b];
    }
    f += std::norm(overlap);
  }
  return f / (total * target.amplitudes.squaredNorm());
}

DiscrepancyReport compare_symplectic(const QuadraticHamiltonianSpec &spec, double t, const FockBasis &basis) {
  const FockState psi = evolve_state(build_fock_hamiltonian(spec, basis), -t, vacuum_state(basis));
  const MomentReport oracle = number_moments(psi);
  const MomentReport wick = vacuum_moments(split_blocks(propagate(build_heff(spec), t)));

  DiscrepancyReport out;
  out.mean_oracle = oracle.mean_n;
  out.var_oracle = oracle.var_n;
  out.mean_symplectic = wick.mean_n;
  out.var_symplectic = wick.var_n;
  out.mean_discrepancy = (oracle.mean_n - wick.mean_n).cwiseAbs().maxCoeff();
  out.var_discrepancy = (oracle.var_n - wick.var_n).cwiseAbs().maxCoeff();
  out.norm_leakage = psi.norm_leakage;
  out.tolerance = std::max(1e-6, 10.0 * psi.norm_leakage);
  out.pass = out.mean_discrepancy <= out.tolerance && out.var_discrepancy <= out.tolerance;
  return out;
}

}  // namespace sympt
