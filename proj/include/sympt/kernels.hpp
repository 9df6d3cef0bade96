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

// Data-parallel inner loops of the Fock-space oracle. Every kernel has a
// portable scalar reference and, on x86-64, an AVX2/FMA variant selected at
// runtime. Matrices are column-major complex<double> with a leading
// dimension, matching Eigen's default storage.

#include <complex>
#include <cstddef>
#include <string_view>

namespace sympt::kernels {

using cplx = std::complex<double>;

enum class Isa { Scalar, Avx2 };

struct KernelTable {
  // y = A x, A is rows x cols with leading dimension lda.
  void (*gemv)(const cplx *a, std::size_t lda, std::size_t rows, std::size_t cols,
               const cplx *x, cplx *y);
  // y = A† x.
  void (*gemv_adjoint)(const cplx *a, std::size_t lda, std::size_t rows, std::size_t cols,
                       const cplx *x, cplx *y);
  // x_i *= d_i.
  void (*hadamard)(cplx *x, const cplx *d, std::size_t n);
  // Σ w_i |x_i|².
  double (*weighted_norm2)(const cplx *x, const double *w, std::size_t n);
  // Σ |x_i|².
  double (*norm2)(const cplx *x, std::size_t n);
};

const KernelTable &table(Isa isa);

/// True when `isa` was compiled in and the running CPU supports it.
bool available(Isa isa);

/// The ISA used by the free functions below. Defaults to the best available;
/// the SYMPT_KERNELS=scalar environment variable pins the scalar path.
Isa active_isa();

/// Overrides the active ISA (tests and benchmarks). Ignored if unavailable.
void set_active_isa(Isa isa);

std::string_view isa_name(Isa isa);

inline void gemv(const cplx *a, std::size_t lda, std::size_t rows, std::size_t cols,
                 const cplx *x, cplx *y) {
  table(active_isa()).gemv(a, lda, rows, cols, x, y);
}
inline void gemv_adjoint(const cplx *a, std::size_t lda, std::size_t rows, std::size_t cols,
                         const cplx *x, cplx *y) {
  table(active_isa()).gemv_adjoint(a, lda, rows, cols, x, y);
}
inline void hadamard(cplx *x, const cplx *d, std::size_t n) { table(active_isa()).hadamard(x, d, n); }
inline double weighted_norm2(const cplx *x, const double *w, std::size_t n) {
  return table(active_isa()).weighted_norm2(x, w, n);
}
inline double norm2(const cplx *x, std::size_t n) { return table(active_isa()).norm2(x, n); }

}  // namespace sympt::kernels
