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

#include <limits>
#include <span>
#include <vector>

#include "pbgqed/lindblad.hpp"

namespace pbgqed {

/// Semiclassical state equation of a driven cavity containing saturable atoms,
/// in magnitude form with u = y^2:
///
///   x^2 = u [ (1 + 2/(N0 D))^2 + (theta/kappa - (2 Delta/gamma)/(N0 D))^2 ],
///   D = 1 + (Delta/gamma)^2 + u.
///
/// x and y are the drive and intracavity amplitudes in units of sqrt(m0).
struct StateEquation {
  double critical_atoms = std::numeric_limits<double>::infinity();  ///< N0
  double atom_detuning = 0.0;    ///< Delta / gamma_perp
  double cavity_detuning = 0.0;  ///< theta / kappa

  /// N0 = 2 gamma_perp kappa / g^2 with g = g0 psi; requires g, kappa, gamma_perp > 0.
  static StateEquation from_params(const SystemParams& params);

  /// Atom terms removed (N0 -> infinity).
  static StateEquation empty_cavity(double cavity_detuning);

  /// Right-hand side x^2(u).
  double drive_squared(double u) const;

  /// d(x^2)/du.
  double drive_squared_slope(double u) const;
};

/// m0 = gamma_perp^2 / (2 g^2) with g = g0 psi.
double saturation_photons(const SystemParams& params);

struct BistabilityBranch {
  double x = 0.0;
  double y = 0.0;
  double n_photons = 0.0;  ///< m0 y^2
  bool stable = false;     ///< d(x^2)/du > 0
};

/// All non-negative roots y of the state equation at drive x, ascending.
std::vector<BistabilityBranch> ob_roots(double x, const StateEquation& eq, double m0);
std::vector<BistabilityBranch> ob_roots(double x, const SystemParams& params);

struct BistabilityPoint {
  double x = 0.0;
  double n_drive = 0.0;  ///< m0 x^2, drive in empty resonant-cavity photons
  std::vector<BistabilityBranch> branches;
};

struct BistableInterval {
  double x_low = 0.0;
  double x_high = 0.0;
  double n_drive_low = 0.0;
  double n_drive_high = 0.0;
};

struct BistabilityCurve {
  std::vector<BistabilityPoint> points;
  /// Drive ranges with more than one root; edges refined by bisection on the
  /// root count between neighbouring grid points.
  std::vector<BistableInterval> bistable_intervals;
};

/// Throws std::invalid_argument unless x_values is ascending and non-negative.
BistabilityCurve ob_curve(std::span<const double> x_values, const StateEquation& eq, double m0);

}  // namespace pbgqed
