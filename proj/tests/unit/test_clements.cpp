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
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sympt/clements.hpp"
#include "sympt/errors.hpp"

namespace sympt {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(MeshCell, PinnedConvention) {
  const double th = 0.3, ph = 1.1;
  const Eigen::Matrix2cd T = mesh_cell_matrix(th, ph);
  const cplx e = std::polar(1.0, ph);
  EXPECT_LT(std::abs(T(0, 0) - e * std::cos(th)), 1e-15);
  EXPECT_LT(std::abs(T(0, 1) + std::sin(th)), 1e-15);
  EXPECT_LT(std::abs(T(1, 0) - e * std::sin(th)), 1e-15);
  EXPECT_LT(std::abs(T(1, 1) - std::cos(th)), 1e-15);
}

TEST(Clements, IdentityHasTrivialParameters) {
  const ClementsMesh mesh = clements_decompose(CMatrix::Identity(4, 4));
  EXPECT_EQ(mesh.cells.size(), 6u);
  for (const MeshCell &c : mesh.cells) {
    EXPECT_NEAR(c.theta, 0.0, 1e-15);
    EXPECT_NEAR(c.phi, 0.0, 1e-15);
  }
  EXPECT_LT(mesh.output_phases.norm(), 1e-15);
}

TEST(Clements, HadamardIsSingleBalancedCell) {
  CMatrix H(2, 2);
  H << 1, 1, 1, -1;
  H /= std::sqrt(2.0);
  const ClementsMesh mesh = clements_decompose(H);
  ASSERT_EQ(mesh.cells.size(), 1u);
  EXPECT_NEAR(mesh.cells[0].theta, kPi / 4, 1e-14);
  EXPECT_NEAR(mesh.cells[0].phi, kPi, 1e-14);
  EXPECT_NEAR(mesh.output_phases[0], kPi, 1e-14);
  EXPECT_NEAR(mesh.output_phases[1], kPi, 1e-14);
  EXPECT_LT((clements_reconstruct(mesh) - H).norm(), 1e-14);
}

TEST(Clements, EmptyMeshReconstructsIdentity) {
  ClementsMesh mesh;
  mesh.size = 3;
  mesh.output_phases = RVector::Zero(3);
  EXPECT_EQ(clements_reconstruct(mesh), CMatrix::Identity(3, 3));
}

TEST(Clements, RandomUnitariesRoundTrip) {
  std::mt19937_64 rng(113);
  for (int n = 1; n <= 16; ++n) {
    const CMatrix U = testing::haar_unitary(n, rng);
    const ClementsMesh mesh = clements_decompose(U);
    EXPECT_EQ(static_cast<int>(mesh.cells.size()), n * (n - 1) / 2);
    EXPECT_LT((clements_reconstruct(mesh) - U).norm(), 1e-10) << "n=" << n;
    for (const MeshCell &c : mesh.cells) {
      EXPECT_GE(c.theta, 0.0);
      EXPECT_LE(c.theta, kPi / 2);
      EXPECT_GE(c.phi, 0.0);
      EXPECT_LT(c.phi, 2 * kPi);
      EXPECT_GE(c.m, 0);
      EXPECT_LT(c.m, n - 1);
    }
  }
}

TEST(Clements, EightModeCellCount) {
  std::mt19937_64 rng(127);
  const ClementsMesh mesh = clements_decompose(testing::haar_unitary(8, rng));
  EXPECT_EQ(mesh.cells.size(), 28u);
}

TEST(Clements, ParameterRoundTrip) {
  std::mt19937_64 rng(131);
  const ClementsMesh a = clements_decompose(testing::haar_unitary(6, rng));
  const ClementsMesh b = clements_decompose(clements_reconstruct(a));
  ASSERT_EQ(a.cells.size(), b.cells.size());
  for (std::size_t k = 0; k < a.cells.size(); ++k) {
    EXPECT_EQ(a.cells[k].m, b.cells[k].m);
    EXPECT_NEAR(a.cells[k].theta, b.cells[k].theta, 1e-9);
  }
  EXPECT_LT((clements_reconstruct(a) - clements_reconstruct(b)).norm(), 1e-10);
}

TEST(Clements, RejectsNonUnitary) {
  CMatrix A = CMatrix::Identity(3, 3);
  A(0, 1) = 0.2;
  EXPECT_THROW(clements_decompose(A), NotUnitary);
}

}  // namespace
}  // namespace sympt
