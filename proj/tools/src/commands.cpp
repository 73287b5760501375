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

#include "pbgqed/cli/commands.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "pbgqed/bistability.hpp"
#include "pbgqed/chipcalc.hpp"
#include "pbgqed/constants.hpp"
#include "pbgqed/observables.hpp"
#include "pbgqed/parallel.hpp"
#include "pbgqed/steady.hpp"
#include "pbgqed/transit.hpp"

#ifndef PBGQED_VERSION
#define PBGQED_VERSION "unknown"
#endif

namespace pbgqed::cli {

namespace {

class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr double nan_value = std::numeric_limits<double>::quiet_NaN();

std::string fmt(double v) { return format_number(v); }
std::string fmt(int v) { return std::to_string(v); }
std::string fmt(std::size_t v) { return std::to_string(v); }

std::string opt(const std::optional<double>& v) { return fmt(v.value_or(nan_value)); }

double empty_cavity_photons(const SystemParams& p) {
  const double k2 = p.kappa * p.kappa;
  return p.drive * p.drive / (k2 + p.theta * p.theta);
}

bool has_state_equation(const SystemParams& p) {
  return p.coupling() > 0.0 && p.kappa > 0.0 && p.gamma_perp > 0.0;
}

}  // namespace

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) return "0";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

std::vector<std::string> standard_header(const std::string& command, const RunConfig& config) {
  return {
      "pbgqed " PBGQED_VERSION " " + command,
      "drive convention: n_drive = E^2/kappa^2 (photons in the empty resonant cavity)",
      "rates: g0, kappa, gamma_perp, delta, theta given as nu/2pi in GHz; time in s, length in m",
      "config: " + to_json(config).dump(),
  };
}

std::string render_csv(const Dataset& dataset) {
  std::string text;
  for (const auto& note : dataset.notes) text += "# " + note + "\n";
  for (std::size_t c = 0; c < dataset.columns.size(); ++c) {
    text += (c ? "," : "") + dataset.columns[c];
  }
  text += "\n";
  for (const auto& row : dataset.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) text += (c ? "," : "") + row[c];
    text += "\n";
  }
  return text;
}

Dataset sweep_drive(const RunConfig& config) {
  const SystemParams base = config.system_params();
  const std::vector<double> drives = config.drive_grid();
  const TruncationOptions truncation = config.truncation();

  struct Point {
    double n_atom;
    std::optional<double> fano;
    double counts_atom;
    int n_max;
  };
  const auto points = parallel_map(drives.size(), config.jobs, [&](std::size_t k) {
    SystemParams p = base;
    p.set_drive_photons(drives[k]);
    const AutoSteadyState s = solve_auto(p, truncation);
    return Point{mean_photons(s.state.rho), fano_factor(s.state.rho),
                 photon_count(s.state.rho, p.kappa, config.count_dt), s.dims.n_max()};
  });

  Dataset d;
  d.notes = standard_header("sweep-drive", config);
  d.notes.push_back("excess_counts_per_count_dt = kappa count_dt (n_atom - n_empty), count_dt = " +
                    fmt(config.count_dt) + " s");
  d.notes.push_back("sc_n_*: semiclassical intracavity photons m0 y^2 on each root, ascending");
  d.columns = {"n_drive", "n_atom", "n_empty", "fano_atom", "excess_counts_per_count_dt", "n_max",
               "sc_roots", "sc_n_1", "sc_n_2", "sc_n_3"};

  const bool semiclassical = has_state_equation(base);
  const StateEquation eq =
      semiclassical ? StateEquation::from_params(base) : StateEquation::empty_cavity(0.0);
  const double m0 = semiclassical ? saturation_photons(base) : 0.0;

  for (std::size_t k = 0; k < drives.size(); ++k) {
    SystemParams p = base;
    p.set_drive_photons(drives[k]);
    const double n_empty = empty_cavity_photons(p);
    const double counts_empty = p.kappa * config.count_dt * n_empty;

    std::vector<double> sc;
    if (semiclassical) {
      for (const auto& b : ob_roots(std::sqrt(drives[k] / m0), eq, m0)) sc.push_back(b.n_photons);
    } else if (base.coupling() == 0.0) {
      sc.push_back(n_empty);
    }
    std::vector<std::string> row = {fmt(drives[k]),
                                    fmt(points[k].n_atom),
                                    fmt(n_empty),
                                    opt(points[k].fano),
                                    fmt(points[k].counts_atom - counts_empty),
                                    fmt(points[k].n_max),
                                    fmt(sc.size())};
    for (std::size_t r = 0; r < 3; ++r) row.push_back(r < sc.size() ? fmt(sc[r]) : "nan");
    d.rows.push_back(std::move(row));
  }
  return d;
}

Dataset transit(const RunConfig& config) {
  const SystemParams params = config.system_params();
  TransitOptions options;
  options.velocity = config.velocity;
  options.bin_dt = config.bin_dt;
  options.half_window = config.half_window;
  options.peak_coupling = config.peak_coupling;
  options.profile = config.mode_profile();
  options.seed = config.seed;
  options.truncation = config.truncation();
  options.jobs = config.jobs;

  const TransitTrace trace = transit_trace(params, options);
  if (!trace.ok()) {
    std::string message = "transit: steady state failed in";
    for (std::size_t k = 0; k < trace.size(); ++k) {
      if (!trace.errors[k].empty()) {
        message += "\n  bin t=" + fmt(trace.times[k]) + " s: " + trace.errors[k];
      }
    }
    throw NumericalFailure(message);
  }

  Dataset d;
  d.notes = standard_header("transit", config);
  d.notes.push_back("mode sigma = " + fmt(options.profile.sigma) + " m (fwhm " +
                    fmt(options.profile.fwhm()) + " m), interaction time fwhm/v = " +
                    fmt(options.profile.fwhm() / options.velocity) + " s");
  d.notes.push_back("sampled = expected + sigma N(0,1), one draw per bin in time order, seed " +
                    std::to_string(trace.seed));
  d.columns = {"t_s", "g_over_g0", "expected_counts_per_bin", "sigma_counts_per_bin",
               "sampled_counts_per_bin", "n_max"};
  for (std::size_t k = 0; k < trace.size(); ++k) {
    d.rows.push_back({fmt(trace.times[k]), fmt(trace.coupling[k]), fmt(trace.expected[k]),
                      fmt(trace.sigma[k]), fmt(trace.sampled[k]), fmt(trace.n_max[k])});
  }
  return d;
}

Dataset bistability(const RunConfig& config) {
  const SystemParams params = config.system_params();
  if (!has_state_equation(params)) {
    throw ConfigError("bistability needs g0 psi, kappa and gamma_perp all positive");
  }
  const StateEquation eq = StateEquation::from_params(params);
  const double m0 = saturation_photons(params);
  std::vector<double> xs;
  for (double n : config.drive_grid(config.bistability_points)) xs.push_back(std::sqrt(n / m0));
  const BistabilityCurve curve = ob_curve(xs, eq, m0);

  Dataset d;
  d.notes = standard_header("bistability", config);
  d.notes.push_back("m0 = " + fmt(m0) + ", N0 = " + fmt(eq.critical_atoms) +
                    ", x = sqrt(n_drive/m0)");
  if (curve.bistable_intervals.empty()) d.notes.push_back("bistable intervals: none");
  for (const auto& iv : curve.bistable_intervals) {
    d.notes.push_back("bistable interval: n_drive in [" + fmt(iv.n_drive_low) + ", " +
                      fmt(iv.n_drive_high) + "]");
  }
  d.columns = {"n_drive", "x", "roots", "n_photons_1", "stable_1", "n_photons_2", "stable_2",
               "n_photons_3", "stable_3"};
  for (const auto& pt : curve.points) {
    std::vector<std::string> row = {fmt(pt.n_drive), fmt(pt.x), fmt(pt.branches.size())};
    for (std::size_t r = 0; r < 3; ++r) {
      if (r < pt.branches.size()) {
        row.push_back(fmt(pt.branches[r].n_photons));
        row.push_back(pt.branches[r].stable ? "1" : "0");
      } else {
        row.push_back("nan");
        row.push_back("");
      }
    }
    d.rows.push_back(std::move(row));
  }
  return d;
}

Dataset qfunc(const RunConfig& config) {
  const SystemParams params = config.system_params();
  const AutoSteadyState s = solve_auto(params, config.truncation());
  const FieldDensityMatrix field = partial_trace_atom(s.state.rho);
  QGridSpec spec = QGridSpec::default_for(s.dims.n_max());
  spec.points = config.q_points;
  if (config.q_radius > 0.0) spec.radius = config.q_radius;
  const QFunctionGrid grid = husimi_q(field, spec);

  Dataset d;
  d.notes = standard_header("qfunc", config);
  d.notes.push_back("n_max = " + fmt(s.dims.n_max()) + ", <n> = " + fmt(field.mean_photons()) +
                    ", fano = " + opt(fano_factor(s.state.rho)));
  d.notes.push_back("grid radius = " + fmt(spec.radius) + ", sum Q dA = " +
                    fmt(grid.normalization()));
  for (const auto& [r, c] : grid.local_maxima()) {
    const Complex a(grid.alpha_re[c], grid.alpha_im[r]);
    d.notes.push_back("local maximum: alpha = (" + fmt(a.real()) + ", " + fmt(a.imag()) +
                      "), |alpha| = " + fmt(std::abs(a)) + ", arg = " + fmt(std::arg(a)) +
                      " rad, Q = " + fmt(grid.at(r, c)));
  }
  d.columns = {"alpha_re", "alpha_im", "q"};
  for (std::size_t r = 0; r < grid.alpha_im.size(); ++r) {
    for (std::size_t c = 0; c < grid.alpha_re.size(); ++c) {
      d.rows.push_back({fmt(grid.alpha_re[c]), fmt(grid.alpha_im[r]), fmt(grid.at(r, c))});
    }
  }
  return d;
}

Dataset trap(const RunConfig& config) {
  const TrapGeometry t = u_trap(config.current, config.bias_gauss * constants::gauss);
  Dataset d;
  d.notes = standard_header("trap", config);
  d.columns = {"current_A", "bias_G", "height_um", "gradient_G_per_cm", "m0", "N0",
               "delta_T_K", "cavity_shift_MHz"};
  std::string m0 = "nan";
  std::string n0 = "nan";
  if (config.g0_ghz > 0.0) {
    const CouplingFigures f =
        coupling_figures(config.g0_ghz, config.kappa_ghz, config.gamma_perp_ghz);
    m0 = fmt(f.m0);
    n0 = fmt(f.n0);
  }
  d.rows.push_back({fmt(t.current), fmt(config.bias_gauss), fmt(t.height * 1e6),
                    fmt(t.gradient / constants::gauss_per_cm), m0, n0,
                    fmt(config.delta_temperature),
                    fmt(thermal_tuning(config.delta_temperature) * 1e-6)});
  return d;
}

Dataset force(const RunConfig& config) {
  const SystemParams params = config.system_params();
  const ModeProfile profile = config.mode_profile();
  std::vector<double> z;
  const double span = config.force_span_sigma * profile.sigma;
  for (int k = 0; k < config.force_points; ++k) {
    z.push_back(-span + 2.0 * span * k / (config.force_points - 1));
  }
  const auto samples = force_profile(params, profile, z, constants::cesium_mass,
                                     config.truncation(), config.jobs);

  std::size_t peak = 0;
  for (std::size_t k = 1; k < samples.size(); ++k) {
    if (std::abs(samples[k].force) > std::abs(samples[peak].force)) peak = k;
  }
  Dataset d;
  d.notes = standard_header("force", config);
  d.notes.push_back("mass = " + fmt(constants::cesium_mass) + " kg, mode sigma = " +
                    fmt(profile.sigma) + " m");
  d.notes.push_back("max |force| = " + fmt(std::abs(samples[peak].force)) + " N, max |accel| = " +
                    fmt(std::abs(samples[peak].acceleration)) + " m/s^2 at z = " +
                    fmt(samples[peak].z) + " m");
  d.notes.push_back("velocity kick sqrt(f dz/m) over dz = " + fmt(config.kick_dz) + " m: " +
                    fmt(velocity_kick(samples[peak].force, config.kick_dz,
                                      constants::cesium_mass)) +
                    " m/s; sqrt(2 hbar g0/m) = " +
                    fmt(simple_kick(params.g0, constants::cesium_mass)) + " m/s");
  d.columns = {"z_m", "psi", "force_N", "accel_m_per_s2"};
  for (const auto& s : samples) {
    d.rows.push_back({fmt(s.z), fmt(s.psi), fmt(s.force), fmt(s.acceleration)});
  }
  return d;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Steady-state cavity QED model of a driven photonic-bandgap cavity with one atom",
               "pbgqed"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  std::vector<std::string> assignments;
  std::optional<std::uint64_t> seed;
  std::vector<double> detunings;
  std::optional<int> nmax_cap;
  std::optional<int> jobs;
  std::optional<double> n_drive;

  app.add_option("--config", config_path,
                 "JSON config, or a CSV written by this tool (reads its config header)");
  app.add_option("--out", out_path, "output CSV path (default: stdout)");
  app.add_option("--set", assignments, "override one config key, key=value (repeatable)");
  app.add_option("--seed", seed, "noise seed");
  app.add_option("--detunings", detunings, "Delta,theta in GHz")
      ->delimiter(',')
      ->expected(2);
  app.add_option("--nmax-cap", nmax_cap, "largest Fock truncation allowed");
  app.add_option("--jobs", jobs, "worker threads (0: hardware concurrency)");
  app.add_option("--n-drive", n_drive, "drive strength as empty-cavity photon number");

  const std::map<std::string, std::pair<const char*, Dataset (*)(const RunConfig&)>> commands = {
      {"sweep-drive", {"steady-state photon number, Fano factor and counts vs drive",
                       &sweep_drive}},
      {"transit", {"expected and sampled counts for one atom crossing the mode", &transit}},
      {"bistability", {"semiclassical state-equation roots and bistable ranges", &bistability}},
      {"qfunc", {"Husimi Q function of the intracavity field", &qfunc}},
      {"trap", {"U-wire trap height and gradient, coupling figures", &trap}},
      {"force", {"mean dipole force along the hole axis", &force}},
  };
  for (const auto& [name, entry] : commands) {
    app.add_subcommand(name, entry.first)->fallthrough();
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  Dataset dataset;
  try {
    RunConfig config;
    if (!config_path.empty()) config = load_config(config_path);
    for (const auto& a : assignments) apply_assignment(config, a);
    if (seed) config.seed = *seed;
    if (detunings.size() == 2) {
      config.delta_ghz = detunings[0];
      config.theta_ghz = detunings[1];
    }
    if (nmax_cap) config.nmax_cap = *nmax_cap;
    if (jobs) config.jobs = *jobs;
    if (n_drive) config.n_drive = *n_drive;
    config.validate();
    dataset = commands.at(command).second(config);
  } catch (const ConfigError& e) {
    err << "pbgqed " << command << ": " << e.what() << "\n";
    return kUsageError;
  } catch (const SolverError& e) {
    err << "pbgqed " << command << ": numerical failure: " << e.what() << "\n";
    return kNumericalFailure;
  } catch (const NumericalFailure& e) {
    err << "pbgqed " << command << ": numerical failure: " << e.what() << "\n";
    return kNumericalFailure;
  } catch (const std::invalid_argument& e) {
    err << "pbgqed " << command << ": " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "pbgqed " << command << ": numerical failure: " << e.what() << "\n";
    return kNumericalFailure;
  }

  const std::string text = render_csv(dataset);
  if (out_path.empty()) {
    out << text;
    return kSuccess;
  }
  std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
  if (!file || !(file << text) || !file.flush()) {
    err << "pbgqed " << command << ": cannot write '" << out_path << "'\n";
    return kUsageError;
  }
  return kSuccess;
}

}  // namespace pbgqed::cli
