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

#include "pbgqed/cli/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <variant>

namespace pbgqed::cli {

namespace {

using Field = std::variant<double RunConfig::*, int RunConfig::*, std::uint64_t RunConfig::*,
                           std::vector<double> RunConfig::*>;

struct Key {
  const char* name;
  Field field;
};

// Serialization order of the header.
const Key kKeys[] = {
    {"g0_ghz", &RunConfig::g0_ghz},
    {"kappa_ghz", &RunConfig::kappa_ghz},
    {"gamma_perp_ghz", &RunConfig::gamma_perp_ghz},
    {"delta_ghz", &RunConfig::delta_ghz},
    {"theta_ghz", &RunConfig::theta_ghz},
    {"n_drive", &RunConfig::n_drive},
    {"psi", &RunConfig::psi},
    {"drive_min", &RunConfig::drive_min},
    {"drive_max", &RunConfig::drive_max},
    {"drive_points", &RunConfig::drive_points},
    {"drives", &RunConfig::drives},
    {"count_dt", &RunConfig::count_dt},
    {"bistability_points", &RunConfig::bistability_points},
    {"velocity", &RunConfig::velocity},
    {"bin_dt", &RunConfig::bin_dt},
    {"half_window", &RunConfig::half_window},
    {"mode_fwhm", &RunConfig::mode_fwhm},
    {"peak_coupling", &RunConfig::peak_coupling},
    {"q_points", &RunConfig::q_points},
    {"q_radius", &RunConfig::q_radius},
    {"current", &RunConfig::current},
    {"bias_gauss", &RunConfig::bias_gauss},
    {"delta_temperature", &RunConfig::delta_temperature},
    {"force_points", &RunConfig::force_points},
    {"force_span_sigma", &RunConfig::force_span_sigma},
    {"kick_dz", &RunConfig::kick_dz},
    {"seed", &RunConfig::seed},
    {"nmax_cap", &RunConfig::nmax_cap},
    {"tail_tol", &RunConfig::tail_tol},
    {"jobs", &RunConfig::jobs},
};

void assign(RunConfig& config, const Key& key, const nlohmann::json& value) {
  try {
    std::visit(
        [&](auto member) {
          using T = std::remove_reference_t<decltype(config.*member)>;
          if constexpr (std::is_same_v<T, double>) {
            if (!value.is_number()) throw ConfigError("expected a number");
            config.*member = value.get<double>();
          } else if constexpr (std::is_same_v<T, std::vector<double>>) {
            if (!value.is_array()) throw ConfigError("expected an array of numbers");
            config.*member = value.get<std::vector<double>>();
          } else {
            if (!value.is_number_integer()) throw ConfigError("expected an integer");
            if (std::is_unsigned_v<T> && value.get<long long>() < 0) {
              throw ConfigError("expected a non-negative integer");
            }
            config.*member = value.get<T>();
          }
        },
        key.field);
  } catch (const ConfigError& e) {
    throw ConfigError(std::string("config key '") + key.name + "': " + e.what());
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config key '") + key.name + "': " + e.what());
  }
}

}  // namespace

SystemParams RunConfig::system_params() const {
  return SystemParams::from_ghz(g0_ghz, kappa_ghz, gamma_perp_ghz, delta_ghz, theta_ghz, n_drive,
                                psi);
}

TruncationOptions RunConfig::truncation() const {
  TruncationOptions t;
  t.max_n_max = nmax_cap;
  t.tail_tol = tail_tol;
  return t;
}

ModeProfile RunConfig::mode_profile() const { return ModeProfile::from_fwhm(mode_fwhm); }

std::vector<double> RunConfig::drive_grid() const { return drive_grid(drive_points); }

std::vector<double> RunConfig::drive_grid(int points) const {
  if (!drives.empty()) return drives;
  std::vector<double> grid;
  if (points == 1) {
    grid.push_back(drive_min);
    return grid;
  }
  const double ratio = drive_max / drive_min;
  for (int k = 0; k < points; ++k) {
    grid.push_back(drive_min * std::pow(ratio, static_cast<double>(k) / (points - 1)));
  }
  grid.back() = drive_max;
  return grid;
}

void RunConfig::validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw ConfigError(what);
  };
  require(g0_ghz >= 0.0 && kappa_ghz > 0.0 && gamma_perp_ghz >= 0.0,
          "g0_ghz and gamma_perp_ghz must be >= 0, kappa_ghz > 0");
  require(n_drive >= 0.0, "n_drive must be >= 0");
  require(psi >= 0.0 && psi <= 1.0, "psi must lie in [0, 1]");
  require(drive_min > 0.0 && drive_max >= drive_min, "need 0 < drive_min <= drive_max");
  require(drive_points >= 1 && bistability_points >= 1, "point counts must be >= 1");
  for (double d : drives) require(d >= 0.0, "drives must be >= 0");
  for (std::size_t k = 1; k < drives.size(); ++k) {
    require(drives[k] >= drives[k - 1], "drives must be ascending");
  }
  require(count_dt > 0.0 && bin_dt > 0.0, "count_dt and bin_dt must be positive");
  require(velocity > 0.0 && half_window > 0.0, "velocity and half_window must be positive");
  require(mode_fwhm > 0.0, "mode_fwhm must be positive");
  require(peak_coupling >= 0.0 && peak_coupling <= 1.0, "peak_coupling must lie in [0, 1]");
  require(q_points >= 3 && q_radius >= 0.0, "q_points must be >= 3 and q_radius >= 0");
  require(current > 0.0 && bias_gauss > 0.0, "current and bias_gauss must be positive");
  require(force_points >= 2 && force_span_sigma > 0.0 && kick_dz >= 0.0,
          "force_points >= 2, force_span_sigma > 0, kick_dz >= 0");
  require(nmax_cap >= 4, "nmax_cap must be >= 4");
  require(tail_tol > 0.0, "tail_tol must be positive");
}

nlohmann::ordered_json to_json(const RunConfig& config) {
  nlohmann::ordered_json j;
  for (const Key& key : kKeys) {
    std::visit([&](auto member) { j[key.name] = config.*member; }, key.field);
  }
  return j;
}

void apply_json(RunConfig& config, const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  for (const auto& [name, value] : j.items()) {
    bool found = false;
    for (const Key& key : kKeys) {
      if (name == key.name) {
        assign(config, key, value);
        found = true;
        break;
      }
    }
    if (!found) throw ConfigError("unknown config key '" + name + "'");
  }
}

void apply_assignment(RunConfig& config, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw ConfigError("expected key=value, got '" + assignment + "'");
  }
  const std::string key = assignment.substr(0, eq);
  nlohmann::json value;
  try {
    value = nlohmann::json::parse(assignment.substr(eq + 1));
  } catch (const nlohmann::json::parse_error&) {
    throw ConfigError("cannot parse value in '" + assignment + "'");
  }
  apply_json(config, nlohmann::json{{key, value}});
}

RunConfig load_config(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();

  if (!text.empty() && text.front() == '#') {
    const std::string marker = "# config: ";
    std::istringstream lines(text);
    std::string line;
    bool found = false;
    while (std::getline(lines, line) && !line.empty() && line.front() == '#') {
      if (line.rfind(marker, 0) == 0) {
        text = line.substr(marker.size());
        found = true;
        break;
      }
    }
    if (!found) throw ConfigError("'" + path + "' has no '# config:' header line");
  }
  try {
    apply_json(base, nlohmann::json::parse(text));
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("'" + path + "': " + e.what());
  }
  return base;
}

}  // namespace pbgqed::cli
