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

#include "sympt/observables.hpp"

#include "sympt/errors.hpp"

namespace sympt {

RVector mean_occupations(const BlockPair &blocks) { return blocks.G.rowwise().squaredNorm(); }

double occupation_variance(const BlockPair &blocks, int p) {
  if (p < 0 || p >= blocks.n_modes()) {
    throw ValidationError("mode index out of range");
  }
  const double n = blocks.G.row(p).squaredNorm();
  const cplx c = (blocks.F.row(p).array() * blocks.G.row(p).array()).sum();
  return n * (n + 1.0) + std::norm(c);
}

CVector anomalous_moments(const BlockPair &blocks) {
  return (blocks.F.array() * blocks.G.array()).rowwise().sum().conjugate();
}

double total_number(const BlockPair &blocks) { return mean_occupations(blocks).sum(); }

MomentReport vacuum_moments(const BlockPair &blocks) {
  MomentReport out;
  out.mean_n = mean_occupations(blocks);
  out.anomalous = anomalous_moments(blocks);
  out.var_n.resize(blocks.n_modes());
  for (int p = 0; p < blocks.n_modes(); ++p) {
    out.var_n[p] = out.mean_n[p] * (out.mean_n[p] + 1.0) + std::norm(out.anomalous[p]);
  }
  return out;
}

}  // namespace sympt
