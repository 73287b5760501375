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

#include "pbgqed/observables.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pbgqed/constants.hpp"

namespace pbgqed {

namespace {

// Photon-number distribution of the joint state.
std::vector<double> photon_distribution(const DensityMatrix& rho) {
  const HilbertDims& dims = rho.dims();
  std::vector<double> p(dims.field_dim());
  for (int n = 0; n < dims.field_dim(); ++n) {
    const int e = dims.index(n, AtomLevel::excited);
    const int g = dims.index(n, AtomLevel::ground);
    p[n] = rho.matrix()(e, e).real() + rho.matrix()(g, g).real();
  }
  return p;
}

}  // namespace

double mean_photons(const DensityMatrix& rho) {
  const auto p = photon_distribution(rho);
  double mean = 0.0;
  for (std::size_t n = 0; n < p.size(); ++n) mean += static_cast<double>(n) * p[n];
  return mean;
}

double photon_number_variance(const DensityMatrix& rho) {
  // a+ a a+ a is diagonal in the Fock basis with entries n * n.
  const auto p = photon_distribution(rho);
  double mean = 0.0;
  double second = 0.0;
  for (std::size_t n = 0; n < p.size(); ++n) {
    const double dn = static_cast<double>(n);
    mean += dn * p[n];
    second += dn * dn * p[n];
  }
  return std::max(0.0, second - mean * mean);
}

double photon_count(const DensityMatrix& rho, double kappa, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("photon_count: dt must be positive");
  return kappa * dt * mean_photons(rho);
}

double count_variance(const DensityMatrix& rho, double kappa, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("count_variance: dt must be positive");
  return kappa * dt * photon_number_variance(rho);
}

CountStatistics count_statistics(const DensityMatrix& rho, double kappa, double dt) {
  return CountStatistics{photon_count(rho, kappa, dt), count_variance(rho, kappa, dt)};
}

std::optional<double> fano_factor(const DensityMatrix& rho) {
  const double mean = mean_photons(rho);
  if (!(mean > 0.0)) return std::nullopt;
  return photon_number_variance(rho) / mean;
}

Complex heterodyne_amplitude(const DensityMatrix& rho) {
  const HilbertDims& dims = rho.dims();
  Complex sum = 0.0;
  for (int n = 1; n <= dims.n_max(); ++n) {
    const double root = std::sqrt(static_cast<double>(n));
    for (AtomLevel level : {AtomLevel::excited, AtomLevel::ground}) {
      sum += root * rho.matrix()(dims.index(n, level), dims.index(n - 1, level));
    }
  }
  return sum;
}

QGridSpec QGridSpec::default_for(int n_max) {
  QGridSpec spec;
  spec.radius = 4.0 * std::sqrt(static_cast<double>(n_max));
  return spec;
}

double QFunctionGrid::normalization() const {
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum * cell_area;
}

std::vector<std::pair<std::size_t, std::size_t>> QFunctionGrid::local_maxima(
    double min_fraction) const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t rows = alpha_im.size();
  const std::size_t cols = alpha_re.size();
  if (rows < 3 || cols < 3) return out;
  const double peak = *std::max_element(values.begin(), values.end());
  for (std::size_t r = 1; r + 1 < rows; ++r) {
    for (std::size_t c = 1; c + 1 < cols; ++c) {
      const double v = at(r, c);
      if (v <= min_fraction * peak) continue;
      bool is_max = true;
      for (int dr = -1; dr <= 1 && is_max; ++dr) {
        for (int dc = -1; dc <= 1; ++dc) {
          if (dr == 0 && dc == 0) continue;
          if (at(r + dr, c + dc) >= v) {
            is_max = false;
            break;
          }
        }
      }
      if (is_max) out.emplace_back(r, c);
    }
  }
  return out;
}

QFunctionGrid husimi_q(const FieldDensityMatrix& rho_field, const QGridSpec& spec) {
  if (spec.points < 2) throw std::invalid_argument("husimi_q: need at least 2 points per axis");
  const double needed = 3.0 * std::sqrt(rho_field.mean_photons() + 1.0);
  if (spec.radius < needed) {
    throw GridTooSmall("husimi_q: grid radius " + std::to_string(spec.radius) +
                       " below 3 sqrt(<n> + 1) = " + std::to_string(needed));
  }
  const int nf = rho_field.n_max() + 1;
  const auto npts = static_cast<std::size_t>(spec.points);
  const double step = 2.0 * spec.radius / (spec.points - 1);

  QFunctionGrid grid;
  grid.alpha_re.resize(npts);
  grid.alpha_im.resize(npts);
  for (std::size_t k = 0; k < npts; ++k) {
    grid.alpha_re[k] = spec.center.real() - spec.radius + step * static_cast<double>(k);
    grid.alpha_im[k] = spec.center.imag() - spec.radius + step * static_cast<double>(k);
  }
  grid.cell_area = step * step;
  grid.values.resize(npts * npts);

  std::vector<double> half_log_n(nf);
  for (int n = 1; n < nf; ++n) half_log_n[n] = 0.5 * std::log(static_cast<double>(n));

  Eigen::VectorXcd overlap(nf);
  for (std::size_t r = 0; r < npts; ++r) {
    for (std::size_t c = 0; c < npts; ++c) {
      const Complex alpha(grid.alpha_re[c], grid.alpha_im[r]);
      const double mag = std::abs(alpha);
      // <n|alpha> = exp(-|alpha|^2/2) alpha^n / sqrt(n!), built upward in log form.
      if (mag == 0.0) {
        overlap.setZero();
        overlap(0) = 1.0;
      } else {
        const double log_mag = std::log(mag);
        const double phase = std::arg(alpha);
        double log_c = -0.5 * mag * mag;
        overlap(0) = std::exp(log_c);
        for (int n = 1; n < nf; ++n) {
          log_c += log_mag - half_log_n[n];
          overlap(n) = std::polar(std::exp(log_c), n * phase);
        }
      }
      const double q = (overlap.adjoint() * rho_field.matrix() * overlap)(0, 0).real();
      grid.values[r * npts + c] = std::max(q, 0.0) / constants::pi;
    }
  }
  return grid;
}

double dipole_force(const DensityMatrix& rho, double g_gradient) {
  if (g_gradient == 0.0) return 0.0;
  const HilbertDims& dims = rho.dims();
  // Tr[rho a+ s] and Tr[rho a s+]; a+ s takes |n, e> to sqrt(n+1) |n+1, g>.
  Complex raise = 0.0;
  Complex lower = 0.0;
  for (int n = 0; n < dims.n_max(); ++n) {
    const double root = std::sqrt(static_cast<double>(n + 1));
    const int e = dims.index(n, AtomLevel::excited);
    const int g = dims.index(n + 1, AtomLevel::ground);
    raise += root * rho.matrix()(e, g);
    lower += root * rho.matrix()(g, e);
  }
  const Complex force = Complex(0.0, -1.0) * constants::hbar * g_gradient * (raise - lower);
  const double mag = std::abs(force);
  if (mag > 0.0 && std::abs(force.imag()) > 1e-8 * mag) {
    throw std::logic_error("dipole_force: expectation is not purely imaginary");
  }
  return force.real();
}

}  // namespace pbgqed
