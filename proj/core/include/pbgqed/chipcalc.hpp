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

namespace pbgqed {

/// U-wire trap with a homogeneous bias field, SI units.
struct TrapGeometry {
  double current = 0.0;     ///< A
  double bias_field = 0.0;  ///< T
  double height = 0.0;      ///< m, trap minimum above the wire
  double gradient = 0.0;    ///< T/m
};

/// height = mu0 I / (2 pi B), gradient = 2 pi B^2 / (mu0 I).
/// Throws std::invalid_argument unless both inputs are positive.
TrapGeometry u_trap(double current, double bias_field);

struct CouplingFigures {
  double m0 = 0.0;  ///< saturation photon number gamma^2 / (2 g0^2)
  double n0 = 0.0;  ///< critical atom number 2 gamma kappa / g0^2
};

/// Rates may be angular or plain frequencies, as long as all three agree.
CouplingFigures coupling_figures(double g0, double kappa, double gamma_perp);

inline constexpr double default_tuning_coefficient = 20e9;  // Hz / K

/// Linear thermal shift of the cavity resonance, Hz.
double thermal_tuning(double delta_temperature,
                      double coefficient = default_tuning_coefficient);

}  // namespace pbgqed
