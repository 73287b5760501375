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

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pbgqed/hilbert.hpp"

namespace pbgqed {

/// Photodetection statistics over one integration window.
struct CountStatistics {
  double mean_counts = 0.0;
  double variance = 0.0;

  /// variance / mean; empty when the mean vanishes.
  std::optional<double> fano() const {
    if (mean_counts > 0.0) return variance / mean_counts;
    return std::nullopt;
  }
};

/// <a+ a>.
double mean_photons(const DensityMatrix& rho);

/// <a+ a a+ a> - <a+ a>^2, clamped at zero.
double photon_number_variance(const DensityMatrix& rho);

/// Expected counts in `dt`: kappa dt <a+ a>.
double photon_count(const DensityMatrix& rho, double kappa, double dt);

/// Count variance in `dt`: kappa dt (<a+ a a+ a> - <a+ a>^2).
double count_variance(const DensityMatrix& rho, double kappa, double dt);

CountStatistics count_statistics(const DensityMatrix& rho, double kappa, double dt);

/// Photon-number Fano factor of the intracavity field (independent of kappa dt).
std::optional<double> fano_factor(const DensityMatrix& rho);

/// <a>, the quantity a heterodyne receiver measures.
Complex heterodyne_amplitude(const DensityMatrix& rho);

class GridTooSmall : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Square grid of coherent amplitudes centered at `center`.
struct QGridSpec {
  double radius = 0.0;
  int points = 161;
  Complex center{0.0, 0.0};

  /// 161 x 161 points with radius 4 sqrt(n_max).
  static QGridSpec default_for(int n_max);
};

struct QFunctionGrid {
  std::vector<double> alpha_re;  ///< column coordinates
  std::vector<double> alpha_im;  ///< row coordinates
  std::vector<double> values;    ///< row-major, values[row * alpha_re.size() + col]
  double cell_area = 0.0;

  double at(std::size_t row, std::size_t col) const { return values[row * alpha_re.size() + col]; }

  /// Riemann sum of Q over the grid.
  double normalization() const;

  /// Strict interior local maxima (8-neighbour) whose value exceeds
  /// `min_fraction` of the global maximum, as (row, col) pairs.
  std::vector<std::pair<std::size_t, std::size_t>> local_maxima(double min_fraction = 1e-3) const;
};

/// Husimi function Q(alpha) = <alpha|rho|alpha> / pi on `spec`.
///
/// Throws GridTooSmall if spec.radius < 3 sqrt(<n> + 1).
QFunctionGrid husimi_q(const FieldDensityMatrix& rho_field, const QGridSpec& spec);

/// Mean force along the coordinate of `g_gradient` (rad/s per meter):
/// <f> = -i hbar dg <a+ s - a s+>, in newtons.
double dipole_force(const DensityMatrix& rho, double g_gradient);

}  // namespace pbgqed
