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

#include "pbgqed/chipcalc.hpp"

#include <stdexcept>

#include "pbgqed/constants.hpp"

namespace pbgqed {

TrapGeometry u_trap(double current, double bias_field) {
  if (!(current > 0.0) || !(bias_field > 0.0)) {
    throw std::invalid_argument("u_trap: current and bias field must be positive");
  }
  using constants::mu0;
  using constants::two_pi;
  TrapGeometry t;
  t.current = current;
  t.bias_field = bias_field;
  t.height = mu0 / two_pi * current / bias_field;
  t.gradient = two_pi / mu0 * bias_field * bias_field / current;
  return t;
}

CouplingFigures coupling_figures(double g0, double kappa, double gamma_perp) {
  if (!(g0 > 0.0)) throw std::invalid_argument("coupling_figures: g0 must be positive");
  if (kappa < 0.0 || gamma_perp < 0.0) {
    throw std::invalid_argument("coupling_figures: rates must be >= 0");
  }
  return CouplingFigures{gamma_perp * gamma_perp / (2.0 * g0 * g0),
                         2.0 * gamma_perp * kappa / (g0 * g0)};
}

double thermal_tuning(double delta_temperature, double coefficient) {
  return coefficient * delta_temperature;
}

}  // namespace pbgqed
