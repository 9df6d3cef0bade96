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

#include "kernels_internal.hpp"

namespace sympt::kernels::detail {

namespace {

// Plain real/imaginary arithmetic; std::complex operator* carries NaN/Inf
// recovery branches that the SIMD path does not have.
inline void cmadd(double ar, double ai, double xr, double xi, double &yr, double &yi) {
  yr += ar * xr - ai * xi;
  yi += ar * xi + ai * xr;
}

void gemv(const cplx *a, std::size_t lda, std::size_t rows, std::size_t cols, const cplx *x,
          cplx *y) {
  for (std::size_t i = 0; i < rows; ++i) y[i] = 0.0;
  for (std::size_t j = 0; j < cols; ++j) {
    const double xr = x[j].real();
    const double xi = x[j].imag();
    const cplx *col = a + j * lda;
    for (std::size_t i = 0; i < rows; ++i) {
      double yr = y[i].real();
      double yi = y[i].imag();
      cmadd(col[i].real(), col[i].imag(), xr, xi, yr, yi);
      y[i] = cplx(yr, yi);
    }
  }
}

void gemv_adjoint(const cplx *a, std::size_t lda, std::size_t rows, std::size_t cols,
                  const cplx *x, cplx *y) {
  for (std::size_t j = 0; j < cols; ++j) {
    const cplx *col = a + j * lda;
    double sr = 0.0;
    double si = 0.0;
    for (std::size_t i = 0; i < rows; ++i) {
      // conj(a) * x
      cmadd(col[i].real(), -col[i].imag(), x[i].real(), x[i].imag(), sr, si);
    }
    y[j] = cplx(sr, si);
  }
}

void hadamard(cplx *x, const cplx *d, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    double r = 0.0;
    double im = 0.0;
    cmadd(x[i].real(), x[i].imag(), d[i].real(), d[i].imag(), r, im);
    x[i] = cplx(r, im);
  }
}

double weighted_norm2(const cplx *x, const double *w, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += w[i] * (x[i].real() * x[i].real() + x[i].imag() * x[i].imag());
  return s;
}

double norm2(const cplx *x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  return s;
}

}  // namespace

const KernelTable &scalar_table() {
  static const KernelTable t{gemv, gemv_adjoint, hadamard, weighted_norm2, norm2};
  return t;
}

}  // namespace sympt::kernels::detail
