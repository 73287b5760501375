// Copyright 2026 The pbgqed Authors
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

#include "pbgqed/steady.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/Eigenvalues>
#include <Eigen/SparseLU>

namespace pbgqed {

namespace {

using Triplet = Eigen::Triplet<Complex>;
using SparseLU = Eigen::SparseLU<SparseMatrix, Eigen::COLAMDOrdering<int>>;

double max_abs(const SparseMatrix& m) {
  double s = 0.0;
  for (Eigen::Index k = 0; k < m.outerSize(); ++k) {
    for (SparseMatrix::InnerIterator it(m, k); it; ++it) s = std::max(s, std::abs(it.value()));
  }
  return s;
}

// Induced infinity norm (largest absolute row sum).
double inf_norm(const SparseMatrix& m) {
  Eigen::VectorXd rows = Eigen::VectorXd::Zero(m.rows());
  for (Eigen::Index k = 0; k < m.outerSize(); ++k) {
    for (SparseMatrix::InnerIterator it(m, k); it; ++it) rows(it.row()) += std::abs(it.value());
  }
  return rows.size() ? rows.maxCoeff() : 0.0;
}

double relative_residual(const SparseMatrix& l, double l_norm, const Eigen::VectorXcd& x) {
  if (l_norm == 0.0) return 0.0;
  return (l * x).cwiseAbs().maxCoeff() / l_norm;
}

// Hermitian part, normalized to unit trace.
DenseMatrix to_state_matrix(const Eigen::VectorXcd& x, int d) {
  DenseMatrix rho = Eigen::Map<const DenseMatrix>(x.data(), d, d);
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return rho / rho.trace().real();
}

Eigen::VectorXcd inverse_iteration(const SparseMatrix& scaled_l, Eigen::VectorXcd v) {
  const Eigen::Index n = scaled_l.rows();
  SparseMatrix shifted = scaled_l;
  SparseMatrix id(n, n);
  id.setIdentity();
  shifted -= Complex(1e-10) * id;
  SparseLU lu;
  lu.compute(shifted);
  if (lu.info() != Eigen::Success) {
    throw SolverError(SolverError::Kind::singular_system,
                      "steady_state: fallback factorization failed: " + lu.lastErrorMessage());
  }
  for (int it = 0; it < 12; ++it) {
    v = lu.solve(v);
    const double norm = v.norm();
    if (!(norm > 0.0) || !std::isfinite(norm)) break;
    v /= norm;
  }
  return v;
}

}  // namespace

SteadyState steady_state(const SystemParams& params, HilbertDims dims,
                         const SteadyOptions& options) {
  const Superoperator liou = liouvillian(params, dims);
  const SparseMatrix& l = liou.matrix();
  const int d = dims.total_dim();
  const Eigen::Index n = l.rows();

  const double scale = max_abs(l);
  if (scale == 0.0) {
    throw SolverError(SolverError::Kind::singular_system,
                      "steady_state: Liouvillian vanishes identically");
  }
  const SparseMatrix scaled = l / Complex(scale);
  const double l_norm = inf_norm(l);

  // The diagonal rows of L sum to zero (trace preservation), so any one of
  // them may be replaced by Tr rho = 1.
  const Eigen::Index replaced = vec_index(0, 0, d);
  std::vector<Triplet> t;
  t.reserve(static_cast<std::size_t>(scaled.nonZeros()) + d);
  for (Eigen::Index k = 0; k < scaled.outerSize(); ++k) {
    for (SparseMatrix::InnerIterator it(scaled, k); it; ++it) {
      if (it.row() != replaced) t.emplace_back(it.row(), it.col(), it.value());
    }
  }
  for (int i = 0; i < d; ++i) t.emplace_back(replaced, vec_index(i, i, d), 1.0);
  SparseMatrix bordered(n, n);
  bordered.setFromTriplets(t.begin(), t.end());
  bordered.makeCompressed();

  SparseLU lu;
  lu.compute(bordered);
  if (lu.info() != Eigen::Success) {
    throw SolverError(SolverError::Kind::singular_system,
                      "steady_state: no unique steady state (" + lu.lastErrorMessage() + ")");
  }
  Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(n);
  rhs(replaced) = 1.0;
  Eigen::VectorXcd x = lu.solve(rhs);
  if (!x.allFinite()) {
    throw SolverError(SolverError::Kind::singular_system,
                      "steady_state: sparse solve produced non-finite values");
  }

  bool used_fallback = false;
  double clipped_magnitude = 0.0;
  DenseMatrix rho = to_state_matrix(x, d);
  Eigen::VectorXcd vec_rho = Eigen::Map<const Eigen::VectorXcd>(rho.data(), rho.size());
  double residual = relative_residual(l, l_norm, vec_rho);

  for (int refine = 0; refine < 3 && residual > options.residual_tol; ++refine) {
    x += lu.solve(rhs - bordered * x);
    rho = to_state_matrix(x, d);
    vec_rho = Eigen::Map<const Eigen::VectorXcd>(rho.data(), rho.size());
    residual = relative_residual(l, l_norm, vec_rho);
  }
  if (residual > options.residual_tol) {
    x = inverse_iteration(scaled, x / x.norm());
    const Complex tr = Eigen::Map<const DenseMatrix>(x.data(), d, d).trace();
    if (std::abs(tr) == 0.0) {
      throw SolverError(SolverError::Kind::singular_system,
                        "steady_state: null vector has zero trace");
    }
    rho = to_state_matrix(x / tr, d);
    vec_rho = Eigen::Map<const Eigen::VectorXcd>(rho.data(), rho.size());
    residual = relative_residual(l, l_norm, vec_rho);
    used_fallback = true;
    if (residual > options.residual_tol) {
      throw SolverError(SolverError::Kind::singular_system,
                        "steady_state: residual " + std::to_string(residual) +
                            " above tolerance after fallback");
    }
  }

  Eigen::SelfAdjointEigenSolver<DenseMatrix> eig(rho);
  if (eig.info() != Eigen::Success) {
    throw SolverError(SolverError::Kind::singular_system,
                      "steady_state: eigen-decomposition of rho failed");
  }
  const double min_eig = eig.eigenvalues().minCoeff();
  if (min_eig < -1e-8) {
    throw SolverError(SolverError::Kind::singular_system,
                      "steady_state: solution has eigenvalue " + std::to_string(min_eig));
  }
  if (min_eig < 0.0) {
    const Eigen::VectorXd clipped = eig.eigenvalues().cwiseMax(0.0);
    rho = eig.eigenvectors() * clipped.asDiagonal() * eig.eigenvectors().adjoint();
    rho = 0.5 * (rho + rho.adjoint()).eval();
    rho /= rho.trace().real();
    clipped_magnitude = -min_eig;
  }

  double tail = 0.0;
  for (int k = std::max(0, dims.n_max() - 1); k <= dims.n_max(); ++k) {
    tail += rho(dims.index(k, AtomLevel::excited), dims.index(k, AtomLevel::excited)).real();
    tail += rho(dims.index(k, AtomLevel::ground), dims.index(k, AtomLevel::ground)).real();
  }
  if (options.check_tail && tail > options.tail_tol) {
    throw SolverError(SolverError::Kind::truncation_insufficient,
                      "steady_state: population " + std::to_string(tail) + " in the top two of " +
                          std::to_string(dims.n_max() + 1) + " Fock levels");
  }

  return SteadyState{DensityMatrix(Operator(dims, std::move(rho))), residual, tail,
                     clipped_magnitude, used_fallback};
}

int initial_n_max(double n_drive, const TruncationOptions& options) {
  const double guess = std::ceil(n_drive + 6.0 * std::sqrt(std::max(0.0, n_drive)));
  const int n = static_cast<int>(std::min<double>(guess, options.max_n_max)) + options.min_n_max;
  return std::clamp(n, options.min_n_max, options.max_n_max);
}

AutoSteadyState solve_auto(const SystemParams& params, const TruncationOptions& options) {
  if (!(options.tail_tol > 0.0)) {
    throw std::invalid_argument("solve_auto: tail_tol must be positive");
  }
  if (options.min_n_max < 1 || options.max_n_max < options.min_n_max || options.growth <= 1.0) {
    throw std::invalid_argument("solve_auto: invalid truncation options");
  }
  SteadyOptions steady;
  steady.tail_tol = options.tail_tol;
  steady.residual_tol = options.residual_tol;
  steady.check_tail = false;

  int n_max = initial_n_max(params.drive_photons(), options);
  for (;;) {
    const HilbertDims dims(n_max);
    SteadyState state = steady_state(params, dims, steady);
    if (state.tail_population <= options.tail_tol) {
      return AutoSteadyState{dims, std::move(state)};
    }
    if (n_max >= options.max_n_max) {
      throw SolverError(SolverError::Kind::resource_cap,
                        "auto_truncate: n_max would exceed the ceiling of " +
                            std::to_string(options.max_n_max) + " (tail population " +
                            std::to_string(state.tail_population) + ")");
    }
    n_max = std::min(options.max_n_max,
                     static_cast<int>(std::ceil(n_max * options.growth)));
  }
}

HilbertDims auto_truncate(const SystemParams& params, const TruncationOptions& options) {
  return solve_auto(params, options).dims;
}

}  // namespace pbgqed
