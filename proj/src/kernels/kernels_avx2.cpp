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

// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.

#include <immintrin.h>

#include "kernels_internal.hpp"

namespace sympt::kernels::detail {

namespace {

// Two interleaved complex numbers per register: [re0, im0, re1, im1].
inline __m256d cmul(__m256d a, __m256d b) {
  const __m256d b_re = _mm256_movedup_pd(b);
  const __m256d b_im = _mm256_permute_pd(b, 0xF);
  const __m256d a_swap = _mm256_permute_pd(a, 0x5);
  return _mm256_fmaddsub_pd(a, b_re, _mm256_mul_pd(a_swap, b_im));
}

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

inline const double *dp(const cplx *p) { return reinterpret_cast<const double *>(p); }
inline double *dp(cplx *p) { return reinterpret_cast<double *>(p); }

void gemv(const cplx *a, std::size_t lda, std::size_t rows, std::size_t cols, const cplx *x,
          cplx *y) {
  const std::size_t vec_rows = rows & ~std::size_t{1};
  for (std::size_t i = 0; i < rows; ++i) y[i] = 0.0;
  std::size_t j = 0;
  for (; j + 1 < cols; j += 2) {
    const __m256d x0r = _mm256_set1_pd(x[j].real());
    const __m256d x0i = _mm256_set1_pd(x[j].imag());
    const __m256d x1r = _mm256_set1_pd(x[j + 1].real());
    const __m256d x1i = _mm256_set1_pd(x[j + 1].imag());
    const cplx *c0 = a + j * lda;
    const cplx *c1 = c0 + lda;
    for (std::size_t i = 0; i < vec_rows; i += 2) {
      const __m256d v0 = _mm256_loadu_pd(dp(c0 + i));
      const __m256d v1 = _mm256_loadu_pd(dp(c1 + i));
      __m256d acc = _mm256_loadu_pd(dp(y + i));
      acc = _mm256_add_pd(acc, _mm256_fmaddsub_pd(v0, x0r, _mm256_mul_pd(_mm256_permute_pd(v0, 0x5), x0i)));
      acc = _mm256_add_pd(acc, _mm256_fmaddsub_pd(v1, x1r, _mm256_mul_pd(_mm256_permute_pd(v1, 0x5), x1i)));
      _mm256_storeu_pd(dp(y + i), acc);
    }
    for (std::size_t i = vec_rows; i < rows; ++i) y[i] += c0[i] * x[j] + c1[i] * x[j + 1];
  }
  for (; j < cols; ++j) {
    const __m256d xr = _mm256_set1_pd(x[j].real());
    const __m256d xi = _mm256_set1_pd(x[j].imag());
    const cplx *c0 = a + j * lda;
    for (std::size_t i = 0; i < vec_rows; i += 2) {
      const __m256d v0 = _mm256_loadu_pd(dp(c0 + i));
      __m256d acc = _mm256_loadu_pd(dp(y + i));
      acc = _mm256_add_pd(acc, _mm256_fmaddsub_pd(v0, xr, _mm256_mul_pd(_mm256_permute_pd(v0, 0x5), xi)));
      _mm256_storeu_pd(dp(y + i), acc);
    }
    for (std::size_t i = vec_rows; i < rows; ++i) y[i] += c0[i] * x[j];
  }
}

void gemv_adjoint(const cplx *a, std::size_t lda, std::size_t rows, std::size_t cols,
                  const cplx *x, cplx *y) {
  const std::size_t vec_rows = rows & ~std::size_t{1};
  for (std::size_t j = 0; j < cols; ++j) {
    const cplx *col = a + j * lda;
    // conj(c) * x: re = cr xr + ci xi, im = cr xi - ci xr.
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    for (std::size_t i = 0; i < vec_rows; i += 2) {
      const __m256d c = _mm256_loadu_pd(dp(col + i));
      const __m256d v = _mm256_loadu_pd(dp(x + i));
      acc_re = _mm256_fmadd_pd(c, v, acc_re);
      acc_im = _mm256_fmadd_pd(c, _mm256_permute_pd(v, 0x5), acc_im);
    }
    // acc_im lanes hold [cr xi, ci xr, ...]; flip the odd lanes before summing.
    const __m256d sign = _mm256_set_pd(-1.0, 1.0, -1.0, 1.0);
    double re = hsum(acc_re);
    double im = hsum(_mm256_mul_pd(acc_im, sign));
    for (std::size_t i = vec_rows; i < rows; ++i) {
      const cplx t = std::conj(col[i]) * x[i];
      re += t.real();
      im += t.imag();
    }
    y[j] = cplx(re, im);
  }
}

void hadamard(cplx *x, const cplx *d, std::size_t n) {
  const std::size_t vec_n = n & ~std::size_t{1};
  for (std::size_t i = 0; i < vec_n; i += 2) {
    const __m256d a = _mm256_loadu_pd(dp(x + i));
    const __m256d b = _mm256_loadu_pd(dp(d + i));
    _mm256_storeu_pd(dp(x + i), cmul(a, b));
  }
  for (std::size_t i = vec_n; i < n; ++i) x[i] *= d[i];
}

double weighted_norm2(const cplx *x, const double *w, std::size_t n) {
  const std::size_t vec_n = n & ~std::size_t{1};
  __m256d acc = _mm256_setzero_pd();
  for (std::size_t i = 0; i < vec_n; i += 2) {
    const __m256d v = _mm256_loadu_pd(dp(x + i));
    const __m128d w2 = _mm_loadu_pd(w + i);
    const __m256d ww = _mm256_permute4x64_pd(_mm256_castpd128_pd256(w2), 0x50);
    acc = _mm256_fmadd_pd(ww, _mm256_mul_pd(v, v), acc);
  }
  double s = hsum(acc);
  for (std::size_t i = vec_n; i < n; ++i) s += w[i] * std::norm(x[i]);
  return s;
}

double norm2(const cplx *x, std::size_t n) {
  const std::size_t vec_n = n & ~std::size_t{1};
  __m256d acc = _mm256_setzero_pd();
  for (std::size_t i = 0; i < vec_n; i += 2) {
    const __m256d v = _mm256_loadu_pd(dp(x + i));
    acc = _mm256_fmadd_pd(v, v, acc);
  }
  double s = hsum(acc);
  for (std::size_t i = vec_n; i < n; ++i) s += std::norm(x[i]);
  return s;
}

}  // namespace

const KernelTable &avx2_table() {
  static const KernelTable t{gemv, gemv_adjoint, hadamard, weighted_norm2, norm2};
  return t;
}

}  // namespace sympt::kernels::detail
