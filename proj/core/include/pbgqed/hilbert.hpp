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

#pragma once

#include <complex>

#include <Eigen/Dense>

namespace pbgqed {

using Complex = std::complex<double>;
using DenseMatrix = Eigen::MatrixXcd;

/// Two-level atom basis, ordered (excited, ground).
enum class AtomLevel : int { excited = 0, ground = 1 };

/// Dimensions of the truncated Fock space tensored with a two-level atom.
///
/// Joint basis index is `field_index * 2 + atom_index`.
class HilbertDims {
 public:
  static constexpr int atom_dim = 2;

  /// Throws std::invalid_argument when `n_max < 1`.
  explicit HilbertDims(int n_max);

  int n_max() const { return n_max_; }
  int field_dim() const { return n_max_ + 1; }
  int total_dim() const { return atom_dim * (n_max_ + 1); }

  int index(int photons, AtomLevel level) const {
    return photons * atom_dim + static_cast<int>(level);
  }

  friend bool operator==(const HilbertDims&, const HilbertDims&) = default;

 private:
  int n_max_;
};

/// A square operator on the joint space.
class Operator {
 public:
  Operator(HilbertDims dims, DenseMatrix matrix);

  static Operator zero(HilbertDims dims);
  static Operator identity(HilbertDims dims);

  const HilbertDims& dims() const { return dims_; }
  const DenseMatrix& matrix() const { return matrix_; }

  Operator adjoint() const;

  Operator& operator+=(const Operator& other);
  Operator& operator-=(const Operator& other);
  Operator& operator*=(Complex scale);

  friend Operator operator+(Operator lhs, const Operator& rhs) { return lhs += rhs; }
  friend Operator operator-(Operator lhs, const Operator& rhs) { return lhs -= rhs; }
  friend Operator operator*(Operator lhs, Complex scale) { return lhs *= scale; }
  friend Operator operator*(Complex scale, Operator rhs) { return rhs *= scale; }
  friend Operator operator*(const Operator& lhs, const Operator& rhs);

 private:
  HilbertDims dims_;
  DenseMatrix matrix_;
};

/// Tolerances checked when a density matrix is constructed.
struct StateTolerances {
  double hermiticity = 1e-10;
  double trace = 1e-8;
  double positivity = 1e-8;
};

/// Hermitian, positive-semidefinite, unit-trace state of the atom and field.
class DensityMatrix {
 public:
  /// Validates the matrix against `tol`; throws std::invalid_argument on failure.
  explicit DensityMatrix(Operator op, const StateTolerances& tol = {});

  /// Pure product state |field> (x) |level>.
  static DensityMatrix pure(HilbertDims dims, const Eigen::VectorXcd& field_amplitudes,
                            AtomLevel level);

  const HilbertDims& dims() const { return op_.dims(); }
  const DenseMatrix& matrix() const { return op_.matrix(); }
  const Operator& op() const { return op_; }

 private:
  Operator op_;
};

/// Reduced density matrix of the cavity field (dimension n_max + 1).
class FieldDensityMatrix {
 public:
  explicit FieldDensityMatrix(DenseMatrix matrix, const StateTolerances& tol = {});

  int n_max() const { return static_cast<int>(matrix_.rows()) - 1; }
  const DenseMatrix& matrix() const { return matrix_; }

  double mean_photons() const;

 private:
  DenseMatrix matrix_;
};

/// Field annihilation operator a (x) I_atom, with <n-1|a|n> = sqrt(n).
Operator annihilation_op(HilbertDims dims);

/// Atomic lowering operator I_field (x) |g><e|.
Operator atom_lowering_op(HilbertDims dims);

/// a^dagger a.
Operator number_op(HilbertDims dims);

/// Tr[rho op]. Throws std::invalid_argument on dimension mismatch.
Complex expectation(const DensityMatrix& rho, const Operator& op);

/// Traces out the atom.
FieldDensityMatrix partial_trace_atom(const DensityMatrix& rho);

/// Joint-space matrix of field (x) atom in the library's index ordering.
DenseMatrix tensor_product(const DenseMatrix& field, const DenseMatrix& atom);

}  // namespace pbgqed
