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

#include "pbgqed/lindblad.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "pbgqed/constants.hpp"

namespace pbgqed {

namespace {

using Triplet = Eigen::Triplet<Complex>;

SparseMatrix to_sparse(const DenseMatrix& m) {
  std::vector<Triplet> t;
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (m(i, j) != Complex(0.0)) t.emplace_back(i, j, m(i, j));
    }
  }
  SparseMatrix s(m.rows(), m.cols());
  s.setFromTriplets(t.begin(), t.end());
  return s;
}

// Appends scale * (A kron B) to `out`.
void add_kron(std::vector<Triplet>& out, const SparseMatrix& a, const SparseMatrix& b,
              Complex scale) {
  const Eigen::Index rb = b.rows();
  const Eigen::Index cb = b.cols();
  for (Eigen::Index ka = 0; ka < a.outerSize(); ++ka) {
    for (SparseMatrix::InnerIterator ia(a, ka); ia; ++ia) {
      const Complex va = scale * ia.value();
      for (Eigen::Index kb = 0; kb < b.outerSize(); ++kb) {
        for (SparseMatrix::InnerIterator ib(b, kb); ib; ++ib) {
          out.emplace_back(ia.row() * rb + ib.row(), ia.col() * cb + ib.col(),
                           va * ib.value());
        }
      }
    }
  }
}

}  // namespace

SystemParams SystemParams::from_ghz(double g0_ghz, double kappa_ghz, double gamma_perp_ghz,
                                    double delta_ghz, double theta_ghz, double n_drive,
                                    double psi) {
  using constants::ghz_angular;
  SystemParams p;
  p.g0 = g0_ghz * ghz_angular;
  p.kappa = kappa_ghz * ghz_angular;
  p.gamma_perp = gamma_perp_ghz * ghz_angular;
  p.delta = delta_ghz * ghz_angular;
  p.theta = theta_ghz * ghz_angular;
  p.psi = psi;
  p.set_drive_photons(n_drive);
  return p;
}

SystemParams SystemParams::pbg_cavity(double delta_ghz, double theta_ghz, double n_drive) {
  return from_ghz(17.0, 4.4, 0.0026, delta_ghz, theta_ghz, n_drive);
}

double SystemParams::drive_photons() const {
  return kappa > 0.0 ? (drive * drive) / (kappa * kappa) : 0.0;
}

void SystemParams::set_drive_photons(double n_drive) {
  if (!(n_drive >= 0.0)) throw std::invalid_argument("SystemParams: n_drive must be >= 0");
  drive = kappa * std::sqrt(n_drive);
}

void SystemParams::validate() const {
  for (double v : {g0, kappa, gamma_perp, delta, theta, drive, psi}) {
    if (!std::isfinite(v)) throw std::invalid_argument("SystemParams: non-finite field");
  }
  if (g0 < 0.0 || kappa < 0.0 || gamma_perp < 0.0) {
    throw std::invalid_argument("SystemParams: g0, kappa and gamma_perp must be >= 0");
  }
  if (psi < 0.0 || psi > 1.0) {
    throw std::invalid_argument("SystemParams: psi must lie in [0, 1]");
  }
}

Superoperator::Superoperator(HilbertDims dims, SparseMatrix matrix)
    : dims_(dims), matrix_(std::move(matrix)) {
  const Eigen::Index n = static_cast<Eigen::Index>(dims_.total_dim()) * dims_.total_dim();
  if (matrix_.rows() != n || matrix_.cols() != n) {
    throw std::invalid_argument("Superoperator: matrix size does not match dims");
  }
}

DenseMatrix Superoperator::apply(const DenseMatrix& rho) const {
  const int d = dims_.total_dim();
  if (rho.rows() != d || rho.cols() != d) {
    throw std::invalid_argument("Superoperator::apply: dimension mismatch");
  }
  Eigen::VectorXcd v = Eigen::Map<const Eigen::VectorXcd>(rho.data(), rho.size());
  Eigen::VectorXcd out = matrix_ * v;
  return Eigen::Map<DenseMatrix>(out.data(), d, d);
}

Operator hamiltonian(const SystemParams& params, HilbertDims dims) {
  params.validate();
  const Complex i(0.0, 1.0);
  const double g = params.coupling();
  const int d = dims.total_dim();
  DenseMatrix h = DenseMatrix::Zero(d, d);
  for (int n = 0; n <= dims.n_max(); ++n) {
    const int e = dims.index(n, AtomLevel::excited);
    const int gr = dims.index(n, AtomLevel::ground);
    h(e, e) = params.delta + n * params.theta;
    h(gr, gr) = n * params.theta;
    if (n == dims.n_max()) continue;
    const double root = std::sqrt(static_cast<double>(n + 1));
    // i E (a+ - a)
    for (AtomLevel level : {AtomLevel::excited, AtomLevel::ground}) {
      const int lo = dims.index(n, level);
      const int hi = dims.index(n + 1, level);
      h(hi, lo) += i * params.drive * root;
      h(lo, hi) -= i * params.drive * root;
    }
    // i g (a+ s - s+ a): |n, e> <-> |n+1, g>
    const int up = dims.index(n + 1, AtomLevel::ground);
    h(up, e) += i * g * root;
    h(e, up) -= i * g * root;
  }
  return Operator(dims, std::move(h));
}

Superoperator liouvillian(const SystemParams& params, HilbertDims dims) {
  const int d = dims.total_dim();
  const Complex i(0.0, 1.0);
  const SparseMatrix h = to_sparse(hamiltonian(params, dims).matrix());
  SparseMatrix id(d, d);
  id.setIdentity();

  std::vector<Triplet> t;
  t.reserve(static_cast<std::size_t>(d) * d * 12);

  // -i[H, rho]  ->  -i (I kron H) + i (H^T kron I)
  add_kron(t, id, h, -i);
  add_kron(t, SparseMatrix(h.transpose()), id, i);

  auto dissipator = [&](const SparseMatrix& c, double rate) {
    if (rate == 0.0) return;
    const SparseMatrix cdc = SparseMatrix(c.adjoint()) * c;
    // 2 c rho c+  ->  2 (conj(c) kron c)
    add_kron(t, SparseMatrix(c.conjugate()), c, 2.0 * rate);
    add_kron(t, id, cdc, -rate);
    add_kron(t, SparseMatrix(cdc.transpose()), id, -rate);
  };
  dissipator(to_sparse(atom_lowering_op(dims).matrix()), params.gamma_perp);
  dissipator(to_sparse(annihilation_op(dims).matrix()), params.kappa);

  const Eigen::Index n = static_cast<Eigen::Index>(d) * d;
  SparseMatrix l(n, n);
  l.setFromTriplets(t.begin(), t.end());
  l.prune([](Eigen::Index, Eigen::Index, const Complex& v) { return v != Complex(0.0); });
  l.makeCompressed();
  return Superoperator(dims, std::move(l));
}

}  // namespace pbgqed
