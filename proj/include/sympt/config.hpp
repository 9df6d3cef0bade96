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

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "sympt/hamiltonian.hpp"
#include "sympt/types.hpp"

namespace sympt::cli {

struct Tolerances {
  double spec = 1e-10;            // W = W†, K = Kᵀ
  double tol_real = 1e-9;         // realness of eigenvalues, relative
  double cond_threshold = 1e3;    // EP vs DP
  double cluster = 1e-7;          // eigenvalue clustering, relative
  double overflow_bound = 50.0;   // ‖H‖·|t|
};

struct TimeGrid {
  double t_start = 0.0;
  double t_end = 1.0;
  int n_points = 11;
};

/// A validated run description. `canonical` is the sorted JSON dump of the
/// input document, which feeds the config hash.
struct RunConfig {
  std::string preset;  // bs | tms | sms | random | inline
  std::map<std::string, double> params;
  int n_modes = 2;
  std::optional<CMatrix> W;
  std::optional<CMatrix> K;
  Tolerances tolerances;
  TimeGrid t_grid;
  int cutoff = 12;
  std::uint64_t seed = 0;
  std::string canonical;

  /// The spec with `param` (if non-empty) replaced by `value`. Throws
  /// ValidationError for parameters the preset does not have.
  QuadraticHamiltonianSpec build_spec(const std::string &param = "", double value = 0.0) const;
};

/// Throws ParseError (with line and column) or ValidationError.
RunConfig parse_config(const std::string &text);
RunConfig load_config(const std::string &path);

/// 64-bit FNV-1a of the canonical document.
std::uint64_t config_hash(const RunConfig &config);

}  // namespace sympt::cli
