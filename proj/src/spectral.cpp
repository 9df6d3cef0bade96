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

#include "sympt/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "sympt/errors.hpp"

namespace sympt {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

bool eigen_less(const cplx &a, const cplx &b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

// Single-linkage grouping of eigenvalue indices within `tol`.
std::vector<std::vector<int>> cluster(const CVector &lambda, double tol) {
  const int n = static_cast<int>(lambda.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (std::abs(lambda[i] - lambda[j]) <= tol) parent[find(i)] = find(j);
    }
  }
  std::vector<std::vector<int>> groups;
  std::vector<int> slot(n, -1);
  for (int i = 0; i < n; ++i) {
    const int root = find(i);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(groups.size());
      groups.emplace_back();
    }
    groups[slot[root]].push_back(i);
  }
  return groups;
}

double condition_of(const CMatrix &V) {
  Eigen::JacobiSVD<CMatrix> svd(V);
  const auto &s = svd.singularValues();
  const double cap = 1.0 / kEps;
  if (s.size() == 0) return 1.0;
  const double smin = s[s.size() - 1];
  if (smin <= s[0] * kEps) return cap;
  return std::min(cap, s[0] / smin);
}

bool is_broken(const SpectralReport &r, double tol_real) { return r.max_abs_imag() > tol_real * r.scale; }

}  // namespace

double SpectralReport::max_abs_imag() const {
  double m = 0.0;
  for (const auto &l : eigenvalues) m = std::max(m, std::abs(l.imag()));
  return m;
}

SpectralReport spectrum(const EffectiveHamiltonian &H, const SpectralOptions &options) {
  const CMatrix &A = H.matrix;
  const Eigen::Index n = A.rows();
  if (n == 0 || A.cols() != n) {
    throw DimensionMismatch("spectrum expects a non-empty square matrix");
  }
  if (!A.allFinite()) {
    throw SolverFailure("matrix has non-finite entries");
  }
  Eigen::ComplexEigenSolver<CMatrix> solver(A, true);
  if (solver.info() != Eigen::Success) {
    throw SolverFailure("complex Schur iteration did not converge");
  }

  SpectralReport report;
  report.scale = std::max(1.0, A.norm());
  CVector lambda = solver.eigenvalues();
  CMatrix vectors = solver.eigenvectors();
  const double tol = options.cluster_tol * report.scale;

  for (const auto &group : cluster(lambda, tol)) {
    if (group.size() < 2) continue;
    const int m = static_cast<int>(group.size());
    cplx mean = 0.0;
    for (int i : group) mean += lambda[i];
    mean /= static_cast<double>(m);

    CMatrix shifted = A - mean * CMatrix::Identity(n, n);
    Eigen::JacobiSVD<CMatrix> svd(shifted, Eigen::ComputeFullV);
    const auto &s = svd.singularValues();
    int nullity = 0;
    for (Eigen::Index k = 0; k < s.size(); ++k) {
      if (s[k] <= tol) ++nullity;
    }
    nullity = std::clamp(nullity, 1, m);
    const CMatrix basis = svd.matrixV().rightCols(nullity);
    const bool defective = nullity < m;
    if (defective) ++report.defective_clusters;
    for (int k = 0; k < m; ++k) {
      const int i = group[k];
      vectors.col(i) = basis.col(std::min(k, nullity - 1));
      if (defective) lambda[i] = mean;
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return eigen_less(lambda[a], lambda[b]); });

  report.eigenvalues.resize(n);
  report.right_eigenvectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    report.eigenvalues[k] = lambda[order[k]];
    CVector v = vectors.col(order[k]);
    const double norm = v.norm();
    report.right_eigenvectors.col(k) = norm > 0.0 ? CVector(v / norm) : v;
  }
  report.eigvec_condition = condition_of(report.right_eigenvectors);
  report.min_gap = n > 1 ? std::numeric_limits<double>::infinity() : 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      report.min_gap = std::min(report.min_gap, std::abs(report.eigenvalues[i] - report.eigenvalues[j]));
    }
  }
  return report;
}

PhaseLabel classify_phase(const SpectralReport &report, double tol_real, double cond_threshold) {
  PhaseLabel out;
  auto &e = out.evidence;
  e.max_abs_imag = report.max_abs_imag();
  e.min_gap = report.min_gap;
  e.eigvec_condition = report.eigvec_condition;
  e.scale = report.scale;
  e.tol_real = tol_real;
  e.cond_threshold = cond_threshold;

  out.degenerate = report.min_gap <= tol_real * report.scale;
  if (out.degenerate && report.eigvec_condition >= cond_threshold) {
    out.label = Phase::NearEP;
  } else if (e.max_abs_imag > tol_real * report.scale) {
    out.label = Phase::PTBroken;
  } else {
    out.label = Phase::PTSymmetric;
  }
  return out;
}

std::string phase_name(Phase phase) {
  switch (phase) {
    case Phase::PTSymmetric:
      return "PTSymmetric";
    case Phase::PTBroken:
      return "PTBroken";
    case Phase::NearEP:
      return "NearEP";
  }
  return "unknown";
}

SymmetryCertificate check_antilinear_symmetry(const EffectiveHamiltonian &H, const StructuralMatrix &P,
                                              SymmetryRelation expected) {
  if (P.matrix.rows() != H.matrix.rows() || P.matrix.cols() != H.matrix.cols()) {
    throw DimensionMismatch("symmetry operator and Hamiltonian differ in size");
  }
  const CMatrix image = antilinear_conjugate(P.matrix, H.matrix);
  const double sign = expected == SymmetryRelation::Commutes ? -1.0 : 1.0;
  const double denom = std::max(H.matrix.norm(), std::numeric_limits<double>::min());
  return {P.label + "·T", expected, (image + sign * H.matrix).norm() / denom};
}

SymmetryCertificate check_chiral(const EffectiveHamiltonian &H, const StructuralMatrix &Pi) {
  const CMatrix &p = Pi.matrix;
  if (p.rows() != H.matrix.rows() || p.cols() != H.matrix.cols()) {
    throw DimensionMismatch("chiral operator and Hamiltonian differ in size");
  }
  const double tol = 1e-12 * std::max(1.0, p.norm());
  if ((p - p.adjoint()).norm() > tol) {
    throw InvalidStructure("chiral operator " + Pi.label + " is not Hermitian");
  }
  if ((p * p - CMatrix::Identity(p.rows(), p.cols())).norm() > tol) {
    throw InvalidStructure("chiral operator " + Pi.label + " does not square to the identity");
  }
  const double denom = std::max(H.matrix.norm(), std::numeric_limits<double>::min());
  return {Pi.label, SymmetryRelation::Anticommutes, (p * H.matrix * p + H.matrix).norm() / denom};
}

bool particle_hole_check(const std::vector<cplx> &eigenvalues, double tol) {
  std::vector<cplx> sorted = eigenvalues;
  std::stable_sort(sorted.begin(), sorted.end(), eigen_less);
  double radius = 1.0;
  for (const auto &l : sorted) radius = std::max(radius, std::abs(l));
  const double limit = tol * radius;

  auto closed_under = [&](auto map) {
    std::vector<bool> used(sorted.size(), false);
    for (const auto &l : sorted) {
      const cplx target = map(l);
      std::size_t best = sorted.size();
      double best_d = std::numeric_limits<double>::infinity();
      for (std::size_t k = 0; k < sorted.size(); ++k) {
        if (used[k]) continue;
        const double d = std::abs(sorted[k] - target);
        if (d < best_d) {
          best_d = d;
          best = k;
        }
      }
      if (best == sorted.size() || best_d > limit) return false;
      used[best] = true;
    }
    return true;
  };
  return closed_under([](cplx l) { return -l; }) && closed_under([](cplx l) { return std::conj(l); });
}

bool particle_hole_check(const SpectralReport &report, double tol) {
  return particle_hole_check(report.eigenvalues, tol);
}

TransitionResult locate_transition(const SpecFamily &family, double lo, double hi,
                                   const TransitionOptions &options) {
  if (!(lo < hi)) {
    throw ValidationError("transition search needs lo < hi");
  }
  auto report_at = [&](double x) { return spectrum(build_heff(family(x)), options.spectral); };

  TransitionResult out;
  const SpectralReport r_lo = report_at(lo);
  const SpectralReport r_hi = report_at(hi);
  const bool broken_lo = is_broken(r_lo, options.tol_real);
  const bool broken_hi = is_broken(r_hi, options.tol_real);
  const double width_tol = options.param_tol * std::max(1.0, std::abs(hi - lo));

  double star = 0.0;
  if (broken_lo != broken_hi) {
    double a = lo;
    double b = hi;
    for (int it = 0; it < 200 && b - a > width_tol; ++it) {
      const double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b) break;
      if (is_broken(report_at(mid), options.tol_real) == broken_lo) {
        a = mid;
      } else {
        b = mid;
      }
    }
    star = 0.5 * (a + b);
    out.via_bisection = true;
  } else {
    const int n = std::max(3, options.scan_points);
    double best_x = lo;
    double best_gap = std::numeric_limits<double>::infinity();
    int best_k = 0;
    for (int k = 0; k <= n; ++k) {
      const double x = lo + (hi - lo) * k / n;
      const double gap = report_at(x).min_gap;
      if (gap < best_gap) {
        best_gap = gap;
        best_x = x;
        best_k = k;
      }
    }
    double a = lo + (hi - lo) * std::max(0, best_k - 1) / n;
    double b = lo + (hi - lo) * std::min(n, best_k + 1) / n;
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = report_at(c).min_gap;
    double fd = report_at(d).min_gap;
    for (int it = 0; it < 300 && b - a > width_tol; ++it) {
      if (fc < fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - inv_phi * (b - a);
        fc = report_at(c).min_gap;
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + inv_phi * (b - a);
        fd = report_at(d).min_gap;
      }
    }
    star = fc < fd ? c : d;
    if (std::min(fc, fd) > best_gap) star = best_x;
  }

  const SpectralReport r_star = report_at(star);
  if (!out.via_bisection && r_star.min_gap > options.gap_tol * r_star.scale) {
    throw NoTransition("no phase change and no eigenvalue degeneracy in the range");
  }
  out.param_star = star;
  out.eigvec_condition = r_star.eigvec_condition;
  out.min_gap = r_star.min_gap;
  out.kind = r_star.eigvec_condition >= options.cond_threshold ? TransitionKind::EP : TransitionKind::DP;
  return out;
}

std::string transition_name(TransitionKind kind) { return kind == TransitionKind::EP ? "EP" : "DP"; }

}  // namespace sympt
