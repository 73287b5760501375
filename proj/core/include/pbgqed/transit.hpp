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

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pbgqed/lindblad.hpp"
#include "pbgqed/steady.hpp"

namespace pbgqed {

/// Gaussian mode function along the hole axis, psi(z) = exp(-(z - center)^2 / (2 sigma^2)).
struct ModeProfile {
  double sigma = 0.0;   ///< m
  double center = 0.0;  ///< m

  /// sigma = fwhm / (2 sqrt(2 ln 2)).
  static ModeProfile from_fwhm(double fwhm, double center = 0.0);

  /// 225 nm read as the full width at half maximum.
  static ModeProfile pbg_default();

  double fwhm() const;
  double psi(double z) const;
  double psi_gradient(double z) const;  ///< dpsi/dz, 1/m
};

/// Throws std::invalid_argument if profile.sigma <= 0.
double mode_psi(double z, const ModeProfile& profile);

struct TransitOptions {
  double velocity = 0.025;      ///< m/s
  double bin_dt = 1e-6;         ///< s
  double half_window = 15e-6;   ///< bins centered on -half_window .. +half_window
  double peak_coupling = 1.0;   ///< scales psi; < 1 models an off-axis transit
  ModeProfile profile = ModeProfile::pbg_default();
  std::uint64_t seed = 1;
  TruncationOptions truncation;
  int jobs = 0;  ///< <= 0 picks default_jobs()
};

struct TransitTrace {
  std::vector<double> times;     ///< s, bin centers
  std::vector<double> expected;  ///< counts per bin
  std::vector<double> sigma;     ///< counts per bin
  std::vector<double> sampled;   ///< expected + N(0, sigma)
  std::vector<double> coupling;  ///< g(t) / g0
  std::vector<int> n_max;        ///< truncation used per bin
  /// Empty string for solved bins; the solver message otherwise. Failed bins
  /// carry NaN statistics.
  std::vector<std::string> errors;
  std::uint64_t seed = 0;

  std::size_t size() const { return times.size(); }
  bool ok() const;
};

/// Quasi-static transit: one steady state per bin at g = g0 psi(v t), counts
/// over bin_dt, then one seeded Gaussian draw per bin in time order.
TransitTrace transit_trace(const SystemParams& params, const TransitOptions& options);

struct ForceSample {
  double z = 0.0;             ///< m
  double psi = 0.0;
  double force = 0.0;         ///< N
  double acceleration = 0.0;  ///< m/s^2 for the given mass
};

/// Mean force along the hole axis at positions `z`, each from its own steady state.
std::vector<ForceSample> force_profile(const SystemParams& params, const ModeProfile& profile,
                                       std::span<const double> z, double mass,
                                       const TruncationOptions& truncation = {}, int jobs = 0);

/// sqrt(|f_max| dz / mass).
double velocity_kick(double f_max, double dz, double mass);

/// sqrt(2 hbar g0 / mass), from hbar g0 = mass dv^2 / 2.
double simple_kick(double g0, double mass);

/// Inverse of simple_kick: the coupling (rad/s) that yields kick dv.
double coupling_for_kick(double dv, double mass);

/// One-dimensional rms speed sqrt(k_B T / mass).
double thermal_velocity(double temperature, double mass);

}  // namespace pbgqed
