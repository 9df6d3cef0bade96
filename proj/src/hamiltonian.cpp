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

#include "sympt/hamiltonian.hpp"

#include <cstdio>
#include <string>

#include "sympt/core_algebra.hpp"
#include "sympt/errors.hpp"

namespace sympt {

namespace {

std::string format_residual(double r) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.1e", r);
  return buf;
}

CMatrix complex_gaussian(int n, std::mt19937_64 &rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  CMatrix m(n, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      m(i, j) = cplx(re, im);
    }
  }
  return m;
}

RMatrix real_gaussian(int n, std::mt19937_64 &rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  RMatrix m(n, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) m(i, j) = normal(rng);
  }
  return m;
}

}  // namespace

QuadraticHamiltonianSpec validate_spec(const CMatrix &W, const CMatrix &K, double tol) {
  if (W.rows() != W.cols() || K.rows() != K.cols() || W.rows() != K.rows() || W.rows() == 0) {
    throw DimensionMismatch("W and K must be square, non-empty and of equal size");
  }
  const double herm = (W - W.adjoint()).norm();
  if (herm > tol) {
    throw HermiticityViolation("W not Hermitian, residual " + format_residual(herm));
  }
  const double sym = (K - K.transpose()).norm();
  if (sym > tol) {
    throw SymmetryViolation("K not symmetric, residual " + format_residual(sym));
  }
  CMatrix w = 0.5 * (W + W.adjoint());
  CMatrix k = 0.5 * (K + K.transpose());
  return QuadraticHamiltonianSpec(std::move(w), std::move(k));
}

QuadraticHamiltonianSpec add_specs(const QuadraticHamiltonianSpec &a, const QuadraticHamiltonianSpec &b) {
  if (a.n_modes() != b.n_modes()) {
    throw DimensionMismatch("add_specs: mode counts differ");
  }
  return validate_spec(a.W() + b.W(), a.K() + b.K(), 1e-10 * (1.0 + a.W().norm() + b.W().norm() + a.K().norm() + b.K().norm()));
}

EffectiveHamiltonian build_heff(const QuadraticHamiltonianSpec &spec) {
  const int n = spec.n_modes();
  const CMatrix &W = spec.W();
  const CMatrix &K = spec.K();

  EffectiveHamiltonian out;
  out.n_modes = n;
  out.matrix.resize(2 * n, 2 * n);
  out.matrix.topLeftCorner(n, n) = W.transpose();
  out.matrix.topRightCorner(n, n) = K;
  out.matrix.bottomLeftCorner(n, n) = -K.adjoint();
  out.matrix.bottomRightCorner(n, n) = -W;

  HeffParts &p = out.parts;
  p.K_H = 0.5 * (K + K.adjoint());
  p.K_AH = -0.5 * kI * (K - K.adjoint());
  p.antisymmetric_w = pauli_tensor(Pauli::I, 0.5 * (W.transpose() - W));
  p.symmetric_w = pauli_tensor(Pauli::Z, 0.5 * (W.transpose() + W));
  p.hermitian_k = kI * pauli_tensor(Pauli::Y, p.K_H);
  p.anti_hermitian_k = kI * pauli_tensor(Pauli::X, p.K_AH);
  return out;
}

EffectiveHamiltonian wrap_matrix(const CMatrix &matrix) {
  if (matrix.rows() != matrix.cols() || matrix.rows() % 2 != 0) {
    throw DimensionMismatch("wrap_matrix expects a 2N x 2N matrix");
  }
  EffectiveHamiltonian out;
  out.n_modes = static_cast<int>(matrix.rows() / 2);
  out.matrix = matrix;
  return out;
}

QuadraticHamiltonianSpec preset_beam_splitter(double omega1, double omega2, double g) {
  CMatrix W(2, 2);
  W << omega1, g, g, omega2;
  return validate_spec(W, CMatrix::Zero(2, 2));
}

QuadraticHamiltonianSpec preset_two_mode_squeezer(double omega1, double omega2, double kappa) {
  // iκ(a₁a₂ - a†₂a†₁) is K_12 a₁a₂ + h.c. with K_12 = K_21 = iκ, which puts
  // iκ σ_x ⊗ σ_x into the effective matrix.
  CMatrix W(2, 2);
  W << omega1, 0, 0, omega2;
  CMatrix K(2, 2);
  K << 0, kI * kappa, kI * kappa, 0;
  return validate_spec(W, K);
}

QuadraticHamiltonianSpec preset_cross_sms(double omega0, double kappa) {
  // g_21 = -g_12 = iω₀, κ_1 = iκ = -κ_2.
  CMatrix W(2, 2);
  W << 0, -kI * omega0, kI * omega0, 0;
  CMatrix K(2, 2);
  K << kI * kappa, 0, 0, -kI * kappa;
  return validate_spec(W, K);
}

QuadraticHamiltonianSpec random_spec(int n_modes, std::mt19937_64 &rng, bool zero_k) {
  const CMatrix A = complex_gaussian(n_modes, rng);
  const CMatrix B = complex_gaussian(n_modes, rng);
  CMatrix W = 0.5 * (A + A.adjoint());
  CMatrix K = zero_k ? CMatrix::Zero(n_modes, n_modes) : CMatrix(0.5 * (B + B.transpose()));
  return validate_spec(W, K);
}

QuadraticHamiltonianSpec random_chiral_spec(int n_modes, std::mt19937_64 &rng) {
  const RMatrix A = real_gaussian(n_modes, rng);
  const RMatrix B = real_gaussian(n_modes, rng);
  const RMatrix w = 0.5 * (A + A.transpose());
  const RMatrix r = 0.5 * (B + B.transpose());
  return validate_spec(w.cast<cplx>(), kI * r.cast<cplx>());
}

QuadraticHamiltonianSpec HamiltonianTermList::total() const {
  if (terms.empty()) {
    throw DimensionMismatch("empty term list");
  }
  QuadraticHamiltonianSpec sum = terms.front();
  for (std::size_t i = 1; i < terms.size(); ++i) sum = add_specs(sum, terms[i]);
  return sum;
}

HamiltonianTermList make_term_list(std::vector<QuadraticHamiltonianSpec> terms) {
  HamiltonianTermList out;
  for (const auto &term : terms) {
    if (term.n_modes() != terms.front().n_modes()) {
      throw DimensionMismatch("all terms must act on the same mode register");
    }
    std::vector<int> touched;
    for (int p = 0; p < term.n_modes(); ++p) {
      if (term.W().row(p).norm() > 0.0 || term.W().col(p).norm() > 0.0 || term.K().row(p).norm() > 0.0) {
        touched.push_back(p);
      }
    }
    out.modes_touched.push_back(std::move(touched));
  }
  out.terms = std::move(terms);
  return out;
}

HamiltonianTermList split_passive_squeezing(const QuadraticHamiltonianSpec &spec) {
  const int n = spec.n_modes();
  return make_term_list({validate_spec(spec.W(), CMatrix::Zero(n, n)),
                         validate_spec(CMatrix::Zero(n, n), spec.K())});
}

}  // namespace sympt
