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

#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sympt/errors.hpp"
#include "sympt/takagi.hpp"

namespace sympt {
namespace {

CMatrix random_symmetric(int n, std::mt19937_64 &rng) {
  std::normal_distribution<double> nd;
  CMatrix A(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double re = nd(rng);
      const double im = nd(rng);
      A(i, j) = cplx(re, im);
    }
  }
  return 0.5 * (A + A.transpose());
}

void expect_factorisation(const CMatrix &B, const TakagiResult &r, double tol) {
  const int n = static_cast<int>(B.rows());
  EXPECT_LT((r.U * r.U.adjoint() - CMatrix::Identity(n, n)).norm(), tol);
  const CMatrix rebuilt = r.U * r.singular.cast<cplx>().asDiagonal() * r.U.transpose();
  EXPECT_LT((rebuilt - B).norm(), tol * std::max(1.0, B.norm()));
  for (int k = 1; k < n; ++k) EXPECT_GE(r.singular[k - 1], r.singular[k]);
  if (n > 0) {
    EXPECT_GE(r.singular[n - 1], 0.0);
  }
}

TEST(Takagi, RandomSymmetricMatrices) {
  std::mt19937_64 rng(103);
  for (int n = 1; n <= 10; ++n) {
    const CMatrix B = random_symmetric(n, rng);
    const TakagiResult r = takagi(B);
    expect_factorisation(B, r, 1e-11);
    const Eigen::JacobiSVD<CMatrix> svd(B);
    EXPECT_LT((r.singular - svd.singularValues()).norm(), 1e-11 * B.norm());
  }
}

TEST(Takagi, DegenerateSingularValues) {
  std::mt19937_64 rng(107);
  const CMatrix Q = testing::haar_unitary(4, rng);
  RVector d(4);
  d << 2.0, 2.0, 0.5, 0.5;
  const CMatrix B = Q * d.cast<cplx>().asDiagonal() * Q.transpose();
  const TakagiResult r = takagi(B);
  expect_factorisation(B, r, 1e-11);
}

TEST(Takagi, RankDeficientAndZero) {
  std::mt19937_64 rng(109);
  const CMatrix Q = testing::haar_unitary(5, rng);
  RVector d(5);
  d << 1.5, 0.7, 0.0, 0.0, 0.0;
  const CMatrix B = Q * d.cast<cplx>().asDiagonal() * Q.transpose();
  expect_factorisation(B, takagi(B), 1e-11);
  const TakagiResult z = takagi(CMatrix::Zero(3, 3));
  EXPECT_EQ(z.singular, RVector::Zero(3));
  EXPECT_LT((z.U * z.U.adjoint() - CMatrix::Identity(3, 3)).norm(), 1e-14);
}

TEST(Takagi, RealNegativeDiagonal) {
  CMatrix B = CMatrix::Zero(2, 2);
  B(0, 0) = -3.0;
  B(1, 1) = cplx(0, 1);
  expect_factorisation(B, takagi(B), 1e-13);
}

TEST(Takagi, RejectsNonSymmetric) {
  CMatrix B(2, 2);
  B << 1, 2, 3, 4;
  EXPECT_THROW(takagi(B), SymmetryViolation);
}

}  // namespace
}  // namespace sympt
