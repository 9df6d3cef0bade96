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

// Reference implementations used only by the tests. Each one avoids the
// library code path it is compared against.

#include <random>
#include <vector>

#include "sympt/types.hpp"

namespace sympt::testing {

/// Scaled Taylor series in long double, squared back up.
CMatrix taylor_expm(const CMatrix &A);

/// Eigen's unsupported MatrixFunctions exponential.
CMatrix eigen_expm(const CMatrix &A);

/// Occupation ⟨N₁(t)⟩ = (κ²/Δ²) sinh²(Δt) with Δ² = κ² - ω₀², both phases
/// and the exceptional point.
double sms_mean(double omega0, double kappa, double t);

/// (κ²/Δ²) sinh²(Δt) [2 cosh²(Δt) + (ω₀²/Δ²) sinh²(Δt)].
double sms_variance(double omega0, double kappa, double t);

/// ±(ω₀ ± √(Δω² + g²)) with ω₀ = (ω₁+ω₂)/2, Δω = (ω₁-ω₂)/2.
std::vector<cplx> bs_eigenvalues(double omega1, double omega2, double g);

/// ±Δω ± √(ω₀² - κ²), imaginary branch above threshold.
std::vector<cplx> tms_eigenvalues(double omega1, double omega2, double kappa);

/// Largest distance in a greedy nearest-neighbour matching of two
/// multisets of equal size.
double multiset_distance(std::vector<cplx> a, std::vector<cplx> b);
double multiset_distance(std::vector<double> a, std::vector<double> b);

/// Haar-random unitary from the QR decomposition of a complex Gaussian.
CMatrix haar_unitary(int n, std::mt19937_64 &rng);

/// Least-squares slope of log y against log x.
double loglog_slope(const std::vector<double> &x, const std::vector<double> &y);

}  // namespace sympt::testing
