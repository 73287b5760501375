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

#include "pbgqed/transit.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "pbgqed/constants.hpp"
#include "pbgqed/observables.hpp"
#include "pbgqed/parallel.hpp"

namespace pbgqed {

namespace {

constexpr double fwhm_per_sigma = 2.3548200450309493;  // 2 sqrt(2 ln 2)

void check_profile(const ModeProfile& profile) {
  if (!(profile.sigma > 0.0)) throw std::invalid_argument("ModeProfile: sigma must be positive");
}

}  // namespace

ModeProfile ModeProfile::from_fwhm(double fwhm, double center) {
  ModeProfile p{fwhm / fwhm_per_sigma, center};
  check_profile(p);
  return p;
}

ModeProfile ModeProfile::pbg_default() { return from_fwhm(225e-9); }

double ModeProfile::fwhm() const { return sigma * fwhm_per_sigma; }

double ModeProfile::psi(double z) const {
  const double u = (z - center) / sigma;
  return std::exp(-0.5 * u * u);
}

double ModeProfile::psi_gradient(double z) const {
  return -(z - center) / (sigma * sigma) * psi(z);
}

double mode_psi(double z, const ModeProfile& profile) {
  check_profile(profile);
  return profile.psi(z);
}

bool TransitTrace::ok() const {
  for (const auto& e : errors) {
    if (!e.empty()) return false;
  }
  return true;
}

TransitTrace transit_trace(const SystemParams& params, const TransitOptions& options) {
  params.validate();
  check_profile(options.profile);
  if (!(options.velocity > 0.0)) throw std::invalid_argument("transit_trace: v must be positive");
  if (!(options.bin_dt > 0.0)) throw std::invalid_argument("transit_trace: bin_dt must be positive");
  if (!(options.peak_coupling >= 0.0 && options.peak_coupling <= 1.0)) {
    throw std::invalid_argument("transit_trace: peak_coupling must lie in [0, 1]");
  }
  if (options.half_window * options.velocity < 2.0 * options.profile.sigma) {
    throw std::invalid_argument("transit_trace: window must cover +-2 sigma of the mode");
  }

  const auto bins =
      static_cast<std::size_t>(std::llround(2.0 * options.half_window / options.bin_dt)) + 1;
  TransitTrace trace;
  trace.seed = options.seed;
  trace.times.resize(bins);
  trace.coupling.resize(bins);
  for (std::size_t k = 0; k < bins; ++k) {
    const double t =
        (static_cast<double>(k) - 0.5 * static_cast<double>(bins - 1)) * options.bin_dt;
    trace.times[k] = t;
    trace.coupling[k] =
        options.peak_coupling * options.profile.psi(options.profile.center + options.velocity * t);
  }

  struct Bin {
    double expected;
    double sigma;
    int n_max;
    std::string error;
  };
  const auto solved = parallel_map(bins, options.jobs, [&](std::size_t k) -> Bin {
    SystemParams p = params;
    p.psi = params.psi * trace.coupling[k];
    try {
      const AutoSteadyState s = solve_auto(p, options.truncation);
      const CountStatistics stats = count_statistics(s.state.rho, p.kappa, options.bin_dt);
      return Bin{stats.mean_counts, std::sqrt(stats.variance), s.dims.n_max(), {}};
    } catch (const SolverError& e) {
      const double nan = std::numeric_limits<double>::quiet_NaN();
      return Bin{nan, nan, 0, e.what()};
    }
  });

  // Noise is drawn after all solves, in bin order, so it only depends on the seed.
  std::mt19937_64 rng(options.seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (const Bin& b : solved) {
    trace.expected.push_back(b.expected);
    trace.sigma.push_back(b.sigma);
    trace.n_max.push_back(b.n_max);
    trace.errors.push_back(b.error);
    const double draw = normal(rng);
    trace.sampled.push_back(b.error.empty() ? b.expected + b.sigma * draw : b.expected);
  }
  return trace;
}

std::vector<ForceSample> force_profile(const SystemParams& params, const ModeProfile& profile,
                                       std::span<const double> z, double mass,
                                       const TruncationOptions& truncation, int jobs) {
  params.validate();
  check_profile(profile);
  if (!(mass > 0.0)) throw std::invalid_argument("force_profile: mass must be positive");
  return parallel_map(z.size(), jobs, [&](std::size_t k) {
    SystemParams p = params;
    const double psi = profile.psi(z[k]);
    p.psi = params.psi * psi;
    const double gradient = params.coupling() * profile.psi_gradient(z[k]);
    const AutoSteadyState s = solve_auto(p, truncation);
    const double f = dipole_force(s.state.rho, gradient);
    return ForceSample{z[k], psi, f, f / mass};
  });
}

double velocity_kick(double f_max, double dz, double mass) {
  if (!(dz >= 0.0) || !(mass > 0.0)) {
    throw std::invalid_argument("velocity_kick: dz must be >= 0 and mass positive");
  }
  return std::sqrt(std::abs(f_max) * dz / mass);
}

double simple_kick(double g0, double mass) {
  if (!(g0 >= 0.0) || !(mass > 0.0)) {
    throw std::invalid_argument("simple_kick: g0 must be >= 0 and mass positive");
  }
  return std::sqrt(2.0 * constants::hbar * g0 / mass);
}

double coupling_for_kick(double dv, double mass) {
  return 0.5 * mass * dv * dv / constants::hbar;
}

double thermal_velocity(double temperature, double mass) {
  if (!(temperature >= 0.0) || !(mass > 0.0)) {
    throw std::invalid_argument("thermal_velocity: T must be >= 0 and mass positive");
  }
  return std::sqrt(constants::boltzmann * temperature / mass);
}

}  // namespace pbgqed
