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

#include "sympt/takagi.hpp"

#include <algorithm>
#include <cstdio>

#include <Eigen/Eigenvalues>

#include "sympt/errors.hpp"

namespace sympt {

namespace {

// Orthogonalises v against the first `count` columns of Q (two passes of
// modified Gram-Schmidt). Returns the remaining norm.
double orthogonalise(CVector &v, const CMatrix &Q, int count) {
  for (int pass = 0; pass < 2; ++pass) {
    for (int k = 0; k < count; ++k) v -= Q.col(k).dot(v) * Q.col(k);
  }
  return v.norm();
}

void fix_sign(Eigen::Ref<CVector> v) {
  Eigen::Index arg = 0;
  double best = -1.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    // Small slack keeps the choice stable when two entries tie.
    if (std::abs(v[i]) > best * (1.0 + 1e-9)) {
      best = std::abs(v[i]);
      arg = i;
    }
  }
  if (v[arg].real() < 0.0 || (v[arg].real() == 0.0 && v[arg].imag() < 0.0)) v = -v;
}

}  // namespace

TakagiResult takagi(const CMatrix &B, double symmetry_tol, double zero_tol) {
  const Eigen::Index n = B.rows();
  if (B.cols() != n) {
    throw DimensionMismatch("takagi needs a square matrix");
  }
  const double scale = std::max(1.0, B.norm());
  const double asym = (B - B.transpose()).norm();
  if (asym > symmetry_tol * scale) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "matrix not symmetric, residual %.1e", asym);
    throw SymmetryViolation(buf);
  }

  RMatrix E(2 * n, 2 * n);
  E.topLeftCorner(n, n) = B.real();
  E.topRightCorner(n, n) = B.imag();
  E.bottomLeftCorner(n, n) = B.imag();
  E.bottomRightCorner(n, n) = -B.real();
  Eigen::SelfAdjointEigenSolver<RMatrix> eig(E);
  if (eig.info() != Eigen::Success) {
    throw SolverFailure("symmetric eigensolver failed in takagi");
  }

  TakagiResult out;
  out.U = CMatrix::Zero(n, n);
  out.singular = RVector::Zero(n);
  const double zero = zero_tol * scale;
  int filled = 0;
  // Eigenvalues ascend, so walk the top n from the end.
  for (Eigen::Index k = 2 * n - 1; k >= n && filled < n; --k) {
    const double s = eig.eigenvalues()[k];
    if (s <= zero) break;
    CVector y = eig.eigenvectors().col(k).head(n).cast<cplx>() +
                kI * eig.eigenvectors().col(k).tail(n).cast<cplx>();
    const double r = orthogonalise(y, out.U, filled);
    if (r < 0.5) continue;
    out.U.col(filled) = y / r;
    out.singular[filled] = s;
    ++filled;
  }
  for (Eigen::Index e = 0; e < n && filled < n; ++e) {
    CVector y = CVector::Unit(n, e);
    const double r = orthogonalise(y, out.U, filled);
    if (r < 1e-3) continue;
    out.U.col(filled) = y / r;
    ++filled;
  }
  for (Eigen::Index k = 0; k < n; ++k) fix_sign(out.U.col(k));
  return out;
}

}  // namespace sympt
