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
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pbgqed/lindblad.hpp"
#include "pbgqed/steady.hpp"
#include "pbgqed/transit.hpp"

namespace pbgqed::cli {

/// Bad flag, key or value; the CLI maps it to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Everything a CLI run needs. Frequencies are nu/2pi in GHz, the drive is
/// n_drive = E^2/kappa^2, all other quantities are SI.
struct RunConfig {
  double g0_ghz = 17.0;
  double kappa_ghz = 4.4;
  double gamma_perp_ghz = 0.0026;
  double delta_ghz = 10.0;
  double theta_ghz = 10.0;
  double n_drive = 2.0;
  double psi = 1.0;

  // Drive sweeps (sweep-drive, bistability). An explicit `drives` list wins
  // over the logarithmic grid.
  double drive_min = 0.01;
  double drive_max = 80.0;
  int drive_points = 30;
  std::vector<double> drives;
  double count_dt = 10e-6;
  int bistability_points = 400;

  // transit
  double velocity = 0.025;
  double bin_dt = 1e-6;
  double half_window = 15e-6;
  double mode_fwhm = 225e-9;
  double peak_coupling = 1.0;

  // qfunc
  int q_points = 161;
  double q_radius = 0.0;  ///< 0 selects 4 sqrt(n_max)

  // trap
  double current = 1.0;
  double bias_gauss = 10.0;
  double delta_temperature = 0.01;

  // force
  int force_points = 81;
  double force_span_sigma = 4.0;
  double kick_dz = 100e-9;

  std::uint64_t seed = 1;
  int nmax_cap = 400;
  double tail_tol = 1e-8;
  int jobs = 0;

  SystemParams system_params() const;
  TruncationOptions truncation() const;
  ModeProfile mode_profile() const;
  /// Explicit drive list, or drive_points log-spaced values in [drive_min, drive_max].
  std::vector<double> drive_grid() const;
  std::vector<double> drive_grid(int points) const;

  /// Throws ConfigError on out-of-range values.
  void validate() const;
};

nlohmann::ordered_json to_json(const RunConfig& config);

/// Applies the keys of `j` on top of `config`; unknown keys are errors.
void apply_json(RunConfig& config, const nlohmann::json& j);

/// Applies a single `key=value` override (value parsed as JSON).
void apply_assignment(RunConfig& config, const std::string& assignment);

/// Reads a JSON config file, or a CSV previously written by this tool (its
/// `# config:` header line).
RunConfig load_config(const std::string& path, RunConfig base = {});

}  // namespace pbgqed::cli
