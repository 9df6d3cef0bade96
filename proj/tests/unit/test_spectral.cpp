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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sympt/core_algebra.hpp"
#include "sympt/errors.hpp"
#include "sympt/hamiltonian.hpp"
#include "sympt/spectral.hpp"

namespace sympt {
namespace {

using testing::multiset_distance;

TEST(Spectrum, BeamSplitterHasOrthogonalEigenvectors) {
  const SpectralReport r = spectrum(build_heff(preset_beam_splitter(1, 1, 0.5)));
  EXPECT_LT(multiset_distance(r.eigenvalues, {1.5, 0.5, -0.5, -1.5}), 1e-12);
  EXPECT_LT(r.eigvec_condition, 1.0 + 1e-10);
}

TEST(Spectrum, TwoModeSqueezerDoublyDegenerate) {
  const SpectralReport r = spectrum(build_heff(preset_two_mode_squeezer(1, 1, 0.6)));
  EXPECT_LT(multiset_distance(r.eigenvalues, {0.8, 0.8, -0.8, -0.8}), 1e-12);
}

TEST(Spectrum, CrossSqueezerImaginaryBeyondThreshold) {
  const SpectralReport r = spectrum(build_heff(preset_cross_sms(1, 1.25)));
  EXPECT_LT(multiset_distance(r.eigenvalues, {cplx(0, 0.75), cplx(0, 0.75), cplx(0, -0.75), cplx(0, -0.75)}),
            1e-12);
}

TEST(Spectrum, SortedByRealThenImaginary) {
  std::mt19937_64 rng(21);
  const SpectralReport r = spectrum(build_heff(random_spec(5, rng)));
  for (std::size_t i = 1; i < r.eigenvalues.size(); ++i) {
    const cplx a = r.eigenvalues[i - 1], b = r.eigenvalues[i];
    EXPECT_TRUE(a.real() < b.real() || (a.real() == b.real() && a.imag() <= b.imag()));
  }
}

TEST(Spectrum, EigenResidualOnRandomSpecs) {
  std::mt19937_64 rng(23);
  for (int n = 1; n <= 16; n += 3) {
    const EffectiveHamiltonian H = build_heff(random_spec(n, rng));
    const SpectralReport r = spectrum(H);
    ASSERT_EQ(static_cast<int>(r.eigenvalues.size()), 2 * n);
    for (int k = 0; k < 2 * n; ++k) {
      const CVector v = r.right_eigenvectors.col(k);
      EXPECT_NEAR(v.norm(), 1.0, 1e-12);
      EXPECT_LE((H.matrix * v - r.eigenvalues[k] * v).norm(), 1e-9 * H.matrix.norm());
    }
    EXPECT_GE(r.eigvec_condition, 1.0);
  }
}

TEST(Spectrum, RealWhenSqueezingAbsent) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    const EffectiveHamiltonian H = build_heff(random_spec(1 + trial % 8, rng, true));
    EXPECT_LE(spectrum(H).max_abs_imag(), 1e-12 * H.matrix.norm());
  }
}

TEST(Spectrum, DefectiveClusterAtExceptionalPoint) {
  const SpectralReport r = spectrum(build_heff(preset_two_mode_squeezer(1, 1, 1)));
  EXPECT_GE(r.defective_clusters, 1);
  EXPECT_GE(r.eigvec_condition, 1e3);
}

TEST(ClassifyPhase, TwoModeSqueezerBelowAndAboveThreshold) {
  EXPECT_EQ(classify_phase(spectrum(build_heff(preset_two_mode_squeezer(1, 1, 0.6)))).label, Phase::PTSymmetric);
  EXPECT_EQ(classify_phase(spectrum(build_heff(preset_two_mode_squeezer(1, 1, 1.25)))).label, Phase::PTBroken);
}

TEST(ClassifyPhase, DiabolicPointIsDegenerateButNotNearEP) {
  const double w0 = 0.8;
  const PhaseLabel p = classify_phase(spectrum(build_heff(preset_beam_splitter(w0, w0, w0))));
  EXPECT_EQ(p.label, Phase::PTSymmetric);
  EXPECT_TRUE(p.degenerate);
  EXPECT_LT(p.evidence.eigvec_condition, 10.0);
}

TEST(ClassifyPhase, ExceptionalPointIsNearEP) {
  const PhaseLabel p = classify_phase(spectrum(build_heff(preset_two_mode_squeezer(1, 1, 1))));
  EXPECT_EQ(p.label, Phase::NearEP);
  EXPECT_EQ(phase_name(p.label), "NearEP");
}

TEST(ClassifyPhase, EvidenceRecordsThresholds) {
  const PhaseLabel p = classify_phase(spectrum(build_heff(preset_beam_splitter(1, 0.5, 0.3))), 1e-8, 50.0);
  EXPECT_EQ(p.evidence.tol_real, 1e-8);
  EXPECT_EQ(p.evidence.cond_threshold, 50.0);
}

TEST(ClassifyPhase, InvariantsOnRandomSpecs) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const SpectralReport r = spectrum(build_heff(random_spec(1 + trial % 4, rng)));
    const PhaseLabel p = classify_phase(r);
    const double bound = kDefaultTolReal * r.scale;
    if (p.label == Phase::PTSymmetric) {
      EXPECT_LE(r.max_abs_imag(), bound);
    }
    if (p.label == Phase::PTBroken) {
      EXPECT_GT(r.max_abs_imag(), bound);
    }
  }
}

TEST(AntilinearSymmetry, TwoModeSqueezerParity) {
  const EffectiveHamiltonian H = build_heff(preset_two_mode_squeezer(1.2, 0.7, 0.6));
  const SymmetryCertificate c =
      check_antilinear_symmetry(H, pauli_identity(Pauli::Z, 2, StructuralKind::ParityCandidate),
                                SymmetryRelation::Commutes);
  EXPECT_LE(c.residual, 1e-12);
  EXPECT_EQ(c.relation, SymmetryRelation::Commutes);
}

TEST(AntilinearSymmetry, CrossSqueezerFamily) {
  const EffectiveHamiltonian H = build_heff(preset_cross_sms(1, 0.6));
  const auto kind = StructuralKind::ParityCandidate;
  EXPECT_LE(check_antilinear_symmetry(H, pauli_pair(Pauli::X, Pauli::X, kind), SymmetryRelation::Commutes).residual,
            1e-12);
  EXPECT_LE(check_antilinear_symmetry(H, pauli_pair(Pauli::I, Pauli::X, kind), SymmetryRelation::Commutes).residual,
            1e-12);
  EXPECT_LE(check_antilinear_symmetry(H, pauli_pair(Pauli::Z, Pauli::Z, kind), SymmetryRelation::Commutes).residual,
            1e-12);
  const SymmetryCertificate anti =
      check_antilinear_symmetry(H, pauli_pair(Pauli::X, Pauli::I, kind), SymmetryRelation::Anticommutes);
  EXPECT_LE(anti.residual, 1e-12);
  EXPECT_EQ(anti.relation, SymmetryRelation::Anticommutes);
  // The same operator does not commute.
  EXPECT_GT(check_antilinear_symmetry(H, pauli_pair(Pauli::X, Pauli::I, kind), SymmetryRelation::Commutes).residual,
            0.1);
}

TEST(AntilinearSymmetry, SingularOperatorRejected) {
  StructuralMatrix P = pauli_identity(Pauli::Z, 2, StructuralKind::ParityCandidate);
  P.matrix(0, 0) = 0.0;
  EXPECT_THROW(check_antilinear_symmetry(build_heff(preset_cross_sms(1, 0.6)), P, SymmetryRelation::Commutes),
               SingularMatrix);
}

TEST(Chiral, HoldsForRealSymmetricWAndAntiHermitianK) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + trial % 6;
    const EffectiveHamiltonian H = build_heff(random_chiral_spec(n, rng));
    EXPECT_LE(check_chiral(H, pauli_identity(Pauli::Y, n, StructuralKind::Chiral)).residual, 1e-12);
  }
}

TEST(Chiral, CrossSqueezerWithInnerSigmaX) {
  const EffectiveHamiltonian H = build_heff(preset_cross_sms(1, 0.6));
  EXPECT_LE(check_chiral(H, pauli_pair(Pauli::I, Pauli::X, StructuralKind::Chiral)).residual, 1e-12);
  EXPECT_GT(check_chiral(H, pauli_identity(Pauli::Y, 2, StructuralKind::Chiral)).residual, 0.1);
}

TEST(Chiral, BeamSplitterBelongsToChiralClass) {
  // Real symmetric W with K = 0 is in the chiral class, so σ_y⊗1 anticommutes exactly.
  const EffectiveHamiltonian H = build_heff(preset_beam_splitter(1.0, 0.6, 0.4));
  EXPECT_LE(check_chiral(H, pauli_identity(Pauli::Y, 2, StructuralKind::Chiral)).residual, 1e-15);
}

TEST(Chiral, ComplexCouplingBreaksChiralSymmetry) {
  CMatrix W(2, 2);
  W << 1.0, cplx(0.2, 0.5), cplx(0.2, -0.5), 0.4;
  const EffectiveHamiltonian H = build_heff(validate_spec(W, CMatrix::Zero(2, 2)));
  EXPECT_GT(check_chiral(H, pauli_identity(Pauli::Y, 2, StructuralKind::Chiral)).residual, 0.1);
}

TEST(Chiral, RejectsNonInvolution) {
  StructuralMatrix Pi = pauli_identity(Pauli::Y, 2, StructuralKind::Chiral);
  Pi.matrix *= 2.0;
  EXPECT_THROW(check_chiral(build_heff(preset_cross_sms(1, 0.6)), Pi), InvalidStructure);
}

TEST(ParticleHole, Examples) {
  EXPECT_TRUE(particle_hole_check(spectrum(build_heff(preset_cross_sms(1, 0.6)))));
  const SpectralReport tms = spectrum(build_heff(preset_two_mode_squeezer(1.25, 0.75, 0.6)));
  EXPECT_LT(multiset_distance(tms.eigenvalues, {1.05, 0.55, -0.55, -1.05}), 1e-12);
  EXPECT_TRUE(particle_hole_check(tms));
  EXPECT_FALSE(particle_hole_check(std::vector<cplx>{1.0, 2.0, -1.0, -3.0}));
}

TEST(ParticleHole, ClosedForChiralClass) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    EXPECT_TRUE(particle_hole_check(spectrum(build_heff(random_chiral_spec(1 + trial % 6, rng)))));
  }
}

TEST(ParticleHole, ComplexPairWithoutConjugateFails) {
  EXPECT_FALSE(particle_hole_check(std::vector<cplx>{cplx(1, 0.5), cplx(-1, -0.5)}));
  EXPECT_TRUE(particle_hole_check(std::vector<cplx>{cplx(1, 0.5), cplx(-1, -0.5), cplx(1, -0.5), cplx(-1, 0.5)}));
}

TEST(Transition, ConditionGrowsTowardExceptionalPoint) {
  double previous = 0.0;
  for (int k = 2; k <= 6; ++k) {
    const double kappa = 1.0 - std::pow(10.0, -k);
    const double cond = spectrum(build_heff(preset_two_mode_squeezer(1, 1, kappa))).eigvec_condition;
    EXPECT_GT(cond, previous) << "k=" << k;
    previous = cond;
  }
}

TEST(Transition, DiabolicPointStaysWellConditioned) {
  for (int k = 2; k <= 8; ++k) {
    const double g = 0.8 - std::pow(10.0, -k);
    const SpectralReport r = spectrum(build_heff(preset_beam_splitter(0.8, 0.8, g)));
    EXPECT_LT(r.eigvec_condition, 10.0);
    EXPECT_LT(r.min_gap, 3.0 * std::pow(10.0, -k));
  }
}

TEST(Transition, TwoModeSqueezerExceptionalPoint) {
  const TransitionResult r =
      locate_transition([](double k) { return preset_two_mode_squeezer(1, 1, k); }, 0.5, 1.5);
  EXPECT_NEAR(r.param_star, 1.0, 1e-6);
  EXPECT_EQ(r.kind, TransitionKind::EP);
  EXPECT_TRUE(r.via_bisection);
}

TEST(Transition, CrossSqueezerExceptionalPoint) {
  const TransitionResult r = locate_transition([](double k) { return preset_cross_sms(1, k); }, 0.5, 1.5);
  EXPECT_NEAR(r.param_star, 1.0, 1e-6);
  EXPECT_EQ(r.kind, TransitionKind::EP);
}

TEST(Transition, BeamSplitterDiabolicPoint) {
  const TransitionResult r =
      locate_transition([](double g) { return preset_beam_splitter(0.8, 0.8, g); }, 0.5, 1.0);
  EXPECT_NEAR(r.param_star, 0.8, 1e-6);
  EXPECT_EQ(r.kind, TransitionKind::DP);
  EXPECT_FALSE(r.via_bisection);
  EXPECT_EQ(transition_name(r.kind), "DP");
}

TEST(Transition, DetunedBeamSplitterDiabolicPoint) {
  const double w1 = 1.0, w2 = 0.6;
  const double w0 = 0.5 * (w1 + w2), dw = 0.5 * (w1 - w2);
  const TransitionResult r =
      locate_transition([&](double g) { return preset_beam_splitter(w1, w2, g); }, 0.3, 1.0);
  EXPECT_NEAR(r.param_star, std::sqrt(w0 * w0 - dw * dw), 1e-6);
  EXPECT_EQ(r.kind, TransitionKind::DP);
}

TEST(Transition, NoTransitionWhenGapStaysOpen) {
  EXPECT_THROW(locate_transition([](double k) { return preset_two_mode_squeezer(1.25, 0.75, k); }, 0.1, 0.5),
               NoTransition);
}

}  // namespace
}  // namespace sympt
