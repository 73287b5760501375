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

#include <Eigen/SparseCore>

#include "pbgqed/hilbert.hpp"

namespace pbgqed {

using SparseMatrix = Eigen::SparseMatrix<Complex>;

/// Rates, detunings and drive of one steady-state problem.
///
/// Every frequency is an angular frequency in rad/s; hbar = 1 in the
/// Hamiltonian. `psi` scales the coupling: g = g0 * psi.
///
/// The dissipators are gamma_perp(2 s rho s+ - s+s rho - rho s+s) and
/// kappa(2 a rho a+ - a+a rho - rho a+a), so kappa and gamma_perp are
/// amplitude decay rates (population decay is twice as fast).
struct SystemParams {
  double g0 = 0.0;
  double kappa = 0.0;
  double gamma_perp = 0.0;
  double delta = 0.0;   ///< atom - laser detuning
  double theta = 0.0;   ///< cavity - laser detuning
  double drive = 0.0;   ///< drive amplitude E
  double psi = 1.0;

  /// Builds parameters from nu/2pi values in GHz; drive given as the
  /// empty resonant-cavity photon number n_drive = E^2 / kappa^2.
  static SystemParams from_ghz(double g0_ghz, double kappa_ghz, double gamma_perp_ghz,
                               double delta_ghz, double theta_ghz, double n_drive,
                               double psi = 1.0);

  /// g0 = 2pi 17 GHz, kappa = 2pi 4.4 GHz, gamma_perp = 2pi 2.6 MHz.
  static SystemParams pbg_cavity(double delta_ghz, double theta_ghz, double n_drive);

  double coupling() const { return g0 * psi; }
  double drive_photons() const;
  void set_drive_photons(double n_drive);

  /// Throws std::invalid_argument if a rate is negative, psi is outside
  /// [0, 1], or a field is not finite.
  void validate() const;
};

/// Liouvillian acting on column-stacked density matrices: vec(drho/dt) = L vec(rho).
class Superoperator {
 public:
  Superoperator(HilbertDims dims, SparseMatrix matrix);

  const HilbertDims& dims() const { return dims_; }
  const SparseMatrix& matrix() const { return matrix_; }

  DenseMatrix apply(const DenseMatrix& rho) const;

 private:
  HilbertDims dims_;
  SparseMatrix matrix_;
};

/// H = delta s+s + theta a+a + i E (a+ - a) + i g0 psi (a+ s - s+ a).
Operator hamiltonian(const SystemParams& params, HilbertDims dims);

Superoperator liouvillian(const SystemParams& params, HilbertDims dims);

/// Column-stacked index of rho(row, col).
inline Eigen::Index vec_index(int row, int col, int dim) {
  return static_cast<Eigen::Index>(col) * dim + row;
}

}  // namespace pbgqed
