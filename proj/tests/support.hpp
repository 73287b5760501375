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

// Closed-form oracles and random-state helpers shared by the test binaries.
// Nothing here calls into the solver.

#include <cmath>
#include <complex>
#include <random>

#include <Eigen/Dense>

#include "pbgqed/hilbert.hpp"
#include "pbgqed/lindblad.hpp"

namespace pbgqed::testing {

/// Fock amplitudes of |alpha> truncated at n_max, from the closed form
/// exp(-|alpha|^2/2) alpha^n / sqrt(n!) via lgamma.
inline Eigen::VectorXcd coherent_amplitudes(int n_max, Complex alpha) {
  Eigen::VectorXcd v(n_max + 1);
  const double r = std::abs(alpha);
  for (int n = 0; n <= n_max; ++n) {
    if (r == 0.0) {
      v(n) = n == 0 ? 1.0 : 0.0;
      continue;
    }
    const double log_mag = -0.5 * r * r + n * std::log(r) - 0.5 * std::lgamma(n + 1.0);
    v(n) = std::polar(std::exp(log_mag), n * std::arg(alpha));
  }
  return v;
}

/// Poisson population above n_max for mean `mean`.
inline double poisson_tail_above(int n_max, double mean) {
  double term = std::exp(-mean);
  double below = 0.0;
  for (int n = 0; n <= n_max; ++n) {
    below += term;
    term *= mean / (n + 1);
  }
  return std::max(0.0, 1.0 - below);
}

inline Complex empty_cavity_amplitude(const SystemParams& p) {
  return p.drive / Complex(p.kappa, p.theta);
}

inline double empty_cavity_photons(const SystemParams& p) {
  return p.drive * p.drive / (p.kappa * p.kappa + p.theta * p.theta);
}

/// Linear response of the coupled moment equations at vanishing drive.
inline Complex weak_drive_amplitude(const SystemParams& p) {
  const double g = p.coupling();
  return p.drive / (Complex(p.kappa, p.theta) + g * g / Complex(p.gamma_perp, p.delta));
}

inline DenseMatrix random_hermitian(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  DenseMatrix a(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) a(r, c) = Complex(n(rng), n(rng));
  return 0.5 * (a + a.adjoint());
}

/// A A^dagger normalized to unit trace: Hermitian and positive.
inline DenseMatrix random_state(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  DenseMatrix a(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) a(r, c) = Complex(n(rng), n(rng));
  DenseMatrix rho = a * a.adjoint();
  return rho / rho.trace();
}

/// Joint-space matrix of field (x) atom, built from the basis formula
/// index = field * 2 + atom.
inline DenseMatrix kron(const DenseMatrix& field, const DenseMatrix& atom) {
  const int nf = static_cast<int>(field.rows());
  DenseMatrix out = DenseMatrix::Zero(2 * nf, 2 * nf);
  for (int f1 = 0; f1 < nf; ++f1)
    for (int f2 = 0; f2 < nf; ++f2)
      for (int a1 = 0; a1 < 2; ++a1)
        for (int a2 = 0; a2 < 2; ++a2) out(2 * f1 + a1, 2 * f2 + a2) = field(f1, f2) * atom(a1, a2);
  return out;
}

inline DenseMatrix field_lowering(int n_max) {
  DenseMatrix a = DenseMatrix::Zero(n_max + 1, n_max + 1);
  for (int n = 1; n <= n_max; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

inline DenseMatrix atom_lowering() {
  DenseMatrix s = DenseMatrix::Zero(2, 2);
  s(1, 0) = 1.0;  // |g><e| with e = 0, g = 1
  return s;
}

/// Master-equation right-hand side evaluated with dense operator products.
inline DenseMatrix master_rhs(const SystemParams& p, int n_max, const DenseMatrix& rho) {
  const Complex i(0.0, 1.0);
  const DenseMatrix id_f = DenseMatrix::Identity(n_max + 1, n_max + 1);
  const DenseMatrix id_a = DenseMatrix::Identity(2, 2);
  const DenseMatrix a = kron(field_lowering(n_max), id_a);
  const DenseMatrix s = kron(id_f, atom_lowering());
  const DenseMatrix ad = a.adjoint();
  const DenseMatrix sd = s.adjoint();
  const DenseMatrix h = p.delta * sd * s + p.theta * ad * a + i * p.drive * (ad - a) +
                        i * p.coupling() * (ad * s - sd * a);
  return -i * (h * rho - rho * h) +
         p.gamma_perp * (2.0 * s * rho * sd - sd * s * rho - rho * sd * s) +
         p.kappa * (2.0 * a * rho * ad - ad * a * rho - rho * ad * a);
}

inline double max_abs(const DenseMatrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace pbgqed::testing
