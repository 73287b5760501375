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

#include "pbgqed/hilbert.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

namespace pbgqed {

namespace {

void check_state(const DenseMatrix& m, const StateTolerances& tol, const char* what) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument(std::string(what) + ": matrix is not square");
  }
  const double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm > tol.hermiticity) {
    throw std::invalid_argument(std::string(what) + ": not Hermitian (deviation " +
                                std::to_string(herm) + ")");
  }
  const Complex tr = m.trace();
  if (std::abs(tr - 1.0) > tol.trace) {
    throw std::invalid_argument(std::string(what) + ": trace " + std::to_string(tr.real()) +
                                " differs from 1");
  }
  Eigen::SelfAdjointEigenSolver<DenseMatrix> eig(m, Eigen::EigenvaluesOnly);
  if (eig.info() != Eigen::Success) {
    throw std::invalid_argument(std::string(what) + ": eigenvalue computation failed");
  }
  if (eig.eigenvalues().minCoeff() < -tol.positivity) {
    throw std::invalid_argument(std::string(what) + ": negative eigenvalue " +
                                std::to_string(eig.eigenvalues().minCoeff()));
  }
}

}  // namespace

HilbertDims::HilbertDims(int n_max) : n_max_(n_max) {
  if (n_max < 1) {
    throw std::invalid_argument("HilbertDims: n_max must be >= 1");
  }
}

Operator::Operator(HilbertDims dims, DenseMatrix matrix)
    : dims_(dims), matrix_(std::move(matrix)) {
  if (matrix_.rows() != dims_.total_dim() || matrix_.cols() != dims_.total_dim()) {
    throw std::invalid_argument("Operator: matrix size does not match dims");
  }
}

Operator Operator::zero(HilbertDims dims) {
  return Operator(dims, DenseMatrix::Zero(dims.total_dim(), dims.total_dim()));
}

Operator Operator::identity(HilbertDims dims) {
  return Operator(dims, DenseMatrix::Identity(dims.total_dim(), dims.total_dim()));
}

Operator Operator::adjoint() const { return Operator(dims_, matrix_.adjoint()); }

Operator& Operator::operator+=(const Operator& other) {
  if (!(dims_ == other.dims_)) throw std::invalid_argument("Operator: dims mismatch");
  matrix_ += other.matrix_;
  return *this;
}

Operator& Operator::operator-=(const Operator& other) {
  if (!(dims_ == other.dims_)) throw std::invalid_argument("Operator: dims mismatch");
  matrix_ -= other.matrix_;
  return *this;
}

Operator& Operator::operator*=(Complex scale) {
  matrix_ *= scale;
  return *this;
}

Operator operator*(const Operator& lhs, const Operator& rhs) {
  if (!(lhs.dims() == rhs.dims())) throw std::invalid_argument("Operator: dims mismatch");
  return Operator(lhs.dims(), lhs.matrix() * rhs.matrix());
}

DensityMatrix::DensityMatrix(Operator op, const StateTolerances& tol) : op_(std::move(op)) {
  check_state(op_.matrix(), tol, "DensityMatrix");
}

DensityMatrix DensityMatrix::pure(HilbertDims dims, const Eigen::VectorXcd& field_amplitudes,
                                  AtomLevel level) {
  if (field_amplitudes.size() != dims.field_dim()) {
    throw std::invalid_argument("DensityMatrix::pure: field vector has wrong length");
  }
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(dims.total_dim());
  for (int n = 0; n < dims.field_dim(); ++n) {
    psi(dims.index(n, level)) = field_amplitudes(n);
  }
  psi /= psi.norm();
  return DensityMatrix(Operator(dims, psi * psi.adjoint()));
}

FieldDensityMatrix::FieldDensityMatrix(DenseMatrix matrix, const StateTolerances& tol)
    : matrix_(std::move(matrix)) {
  if (matrix_.rows() < 2) throw std::invalid_argument("FieldDensityMatrix: n_max must be >= 1");
  check_state(matrix_, tol, "FieldDensityMatrix");
}

double FieldDensityMatrix::mean_photons() const {
  double mean = 0.0;
  for (int n = 0; n < matrix_.rows(); ++n) mean += n * matrix_(n, n).real();
  return mean;
}

Operator annihilation_op(HilbertDims dims) {
  Operator a = Operator::zero(dims);
  DenseMatrix m = a.matrix();
  for (int n = 1; n <= dims.n_max(); ++n) {
    for (int atom = 0; atom < HilbertDims::atom_dim; ++atom) {
      m((n - 1) * 2 + atom, n * 2 + atom) = std::sqrt(static_cast<double>(n));
    }
  }
  return Operator(dims, std::move(m));
}

Operator atom_lowering_op(HilbertDims dims) {
  DenseMatrix m = DenseMatrix::Zero(dims.total_dim(), dims.total_dim());
  for (int n = 0; n <= dims.n_max(); ++n) {
    m(dims.index(n, AtomLevel::ground), dims.index(n, AtomLevel::excited)) = 1.0;
  }
  return Operator(dims, std::move(m));
}

Operator number_op(HilbertDims dims) {
  DenseMatrix m = DenseMatrix::Zero(dims.total_dim(), dims.total_dim());
  for (int i = 0; i < dims.total_dim(); ++i) m(i, i) = static_cast<double>(i / 2);
  return Operator(dims, std::move(m));
}

Complex expectation(const DensityMatrix& rho, const Operator& op) {
  if (!(rho.dims() == op.dims())) {
    throw std::invalid_argument("expectation: dimension mismatch");
  }
  // Tr[rho op] = sum_ij rho_ij op_ji
  return (rho.matrix().transpose().cwiseProduct(op.matrix())).sum();
}

FieldDensityMatrix partial_trace_atom(const DensityMatrix& rho) {
  const int nf = rho.dims().field_dim();
  const DenseMatrix& m = rho.matrix();
  DenseMatrix field(nf, nf);
  for (int n = 0; n < nf; ++n) {
    for (int k = 0; k < nf; ++k) {
      field(n, k) = m(2 * n, 2 * k) + m(2 * n + 1, 2 * k + 1);
    }
  }
  return FieldDensityMatrix(std::move(field));
}

DenseMatrix tensor_product(const DenseMatrix& field, const DenseMatrix& atom) {
  if (atom.rows() != 2 || atom.cols() != 2) {
    throw std::invalid_argument("tensor_product: atom factor must be 2x2");
  }
  const Eigen::Index nf = field.rows();
  DenseMatrix out(2 * nf, 2 * nf);
  for (Eigen::Index n = 0; n < nf; ++n) {
    for (Eigen::Index k = 0; k < nf; ++k) {
      out.block<2, 2>(2 * n, 2 * k) = field(n, k) * atom;
    }
  }
  return out;
}

}  // namespace pbgqed
