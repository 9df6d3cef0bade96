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

#include "sympt/expm.hpp"

#include <array>
#include <cmath>

#include <Eigen/LU>

#include "sympt/errors.hpp"

namespace sympt {

namespace {

constexpr std::array<double, 5> kTheta = {1.495585217958292e-2, 2.539398330063230e-1,
                                          9.504178996162932e-1, 2.097847961257068e0,
                                          5.371920351148152e0};

constexpr double kB3[] = {120.0, 60.0, 12.0, 1.0};
constexpr double kB5[] = {30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0};
constexpr double kB7[] = {17297280.0, 8648640.0, 1995840.0, 277200.0, 25200.0, 1512.0, 56.0, 1.0};
constexpr double kB9[] = {17643225600.0, 8821612800.0, 2075673600.0, 302702400.0, 30270240.0,
                          2162160.0,     110880.0,     3960.0,       90.0,        1.0};
constexpr double kB13[] = {64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
                           1187353796428800.0,  129060195264000.0,   10559470521600.0,
                           670442572800.0,      33522128640.0,       1323241920.0,
                           40840800.0,          960960.0,            16380.0,
                           182.0,               1.0};

CMatrix solve_pade(const CMatrix &U, const CMatrix &V) {
  Eigen::PartialPivLU<CMatrix> lu(V - U);
  return lu.solve(V + U);
}

// Degrees 3..9: U = A Σ b_{2k+1} A^{2k}, V = Σ b_{2k} A^{2k}.
CMatrix pade_low(const CMatrix &A, const double *b, int degree) {
  const Eigen::Index n = A.rows();
  const CMatrix I = CMatrix::Identity(n, n);
  const CMatrix A2 = A * A;
  CMatrix power = I;
  CMatrix u = b[1] * I;
  CMatrix v = b[0] * I;
  for (int k = 2; k <= degree; k += 2) {
    power = power * A2;
    u += b[k + 1] * power;
    v += b[k] * power;
  }
  return solve_pade(A * u, v);
}

CMatrix pade13(const CMatrix &A) {
  const double *b = kB13;
  const Eigen::Index n = A.rows();
  const CMatrix I = CMatrix::Identity(n, n);
  const CMatrix A2 = A * A;
  const CMatrix A4 = A2 * A2;
  const CMatrix A6 = A4 * A2;
  const CMatrix u_inner = A6 * (b[13] * A6 + b[11] * A4 + b[9] * A2) + b[7] * A6 + b[5] * A4 +
                          b[3] * A2 + b[1] * I;
  const CMatrix U = A * u_inner;
  const CMatrix V = A6 * (b[12] * A6 + b[10] * A4 + b[8] * A2) + b[6] * A6 + b[4] * A4 +
                    b[2] * A2 + b[0] * I;
  return solve_pade(U, V);
}

}  // namespace

double norm1(const CMatrix &A) {
  if (A.size() == 0) return 0.0;
  return A.cwiseAbs().colwise().sum().maxCoeff();
}

CMatrix expm(const CMatrix &A) {
  if (A.rows() != A.cols()) {
    throw DimensionMismatch("expm needs a square matrix");
  }
  if (!A.allFinite()) {
    throw OverflowRisk("expm argument has non-finite entries");
  }
  const double nrm = norm1(A);
  if (nrm <= kTheta[0]) return pade_low(A, kB3, 3);
  if (nrm <= kTheta[1]) return pade_low(A, kB5, 5);
  if (nrm <= kTheta[2]) return pade_low(A, kB7, 7);
  if (nrm <= kTheta[3]) return pade_low(A, kB9, 9);

  int s = 0;
  if (nrm > kTheta[4]) s = static_cast<int>(std::ceil(std::log2(nrm / kTheta[4])));
  CMatrix X = pade13(A / std::ldexp(1.0, s));
  for (int k = 0; k < s; ++k) X = X * X;
  return X;
}

}  // namespace sympt
