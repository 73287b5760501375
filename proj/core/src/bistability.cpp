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

#include "pbgqed/bistability.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "pbgqed/constants.hpp"

namespace pbgqed {

namespace {

struct Terms {
  double a;  // 1 + (Delta/gamma)^2
  double c;  // 2 / N0
  double s;  // (2 Delta/gamma) / N0
  double t;  // theta / kappa
};

Terms terms(const StateEquation& eq) {
  Terms k{1.0 + eq.atom_detuning * eq.atom_detuning, 0.0, 0.0, eq.cavity_detuning};
  if (std::isfinite(eq.critical_atoms)) {
    k.c = 2.0 / eq.critical_atoms;
    k.s = 2.0 * eq.atom_detuning / eq.critical_atoms;
  }
  return k;
}

// Real roots of w^3 + p w^2 + q w + r, ascending.
std::vector<double> real_cubic_roots(double p, double q, double r) {
  const double shift = p / 3.0;
  const double dp = q - p * p / 3.0;
  const double dq = 2.0 * p * p * p / 27.0 - p * q / 3.0 + r;
  std::vector<double> z;
  const double disc = -(4.0 * dp * dp * dp + 27.0 * dq * dq);
  if (dp < 0.0 && disc >= 0.0) {
    const double m = 2.0 * std::sqrt(-dp / 3.0);
    const double arg = std::clamp(3.0 * dq / (dp * m), -1.0, 1.0);
    const double phi = std::acos(arg) / 3.0;
    for (int k = 0; k < 3; ++k) z.push_back(m * std::cos(phi - 2.0 * constants::pi * k / 3.0));
  } else {
    const double root = std::sqrt(std::max(0.0, dq * dq / 4.0 + dp * dp * dp / 27.0));
    z.push_back(std::cbrt(-dq / 2.0 + root) + std::cbrt(-dq / 2.0 - root));
  }
  for (double& v : z) v -= shift;
  std::sort(z.begin(), z.end());
  return z;
}

}  // namespace

StateEquation StateEquation::from_params(const SystemParams& params) {
  params.validate();
  const double g = params.coupling();
  if (!(g > 0.0 && params.kappa > 0.0 && params.gamma_perp > 0.0)) {
    throw std::invalid_argument("StateEquation: g, kappa and gamma_perp must be positive");
  }
  StateEquation eq;
  eq.critical_atoms = 2.0 * params.gamma_perp * params.kappa / (g * g);
  eq.atom_detuning = params.delta / params.gamma_perp;
  eq.cavity_detuning = params.theta / params.kappa;
  return eq;
}

StateEquation StateEquation::empty_cavity(double cavity_detuning) {
  StateEquation eq;
  eq.cavity_detuning = cavity_detuning;
  return eq;
}

double StateEquation::drive_squared(double u) const {
  const Terms k = terms(*this);
  const double d = k.a + u;
  const double re = 1.0 + k.c / d;
  const double im = k.t - k.s / d;
  return u * (re * re + im * im);
}

double StateEquation::drive_squared_slope(double u) const {
  const Terms k = terms(*this);
  const double d = k.a + u;
  const double re = 1.0 + k.c / d;
  const double im = k.t - k.s / d;
  // d/du of c/d is -c/d^2, of -s/d is s/d^2.
  const double dre = -k.c / (d * d);
  const double dim = k.s / (d * d);
  return re * re + im * im + u * 2.0 * (re * dre + im * dim);
}

double saturation_photons(const SystemParams& params) {
  const double g = params.coupling();
  if (!(g > 0.0)) throw std::invalid_argument("saturation_photons: g must be positive");
  return params.gamma_perp * params.gamma_perp / (2.0 * g * g);
}

std::vector<BistabilityBranch> ob_roots(double x, const StateEquation& eq, double m0) {
  if (!(x >= 0.0)) throw std::invalid_argument("ob_roots: x must be >= 0");
  if (!(m0 > 0.0)) throw std::invalid_argument("ob_roots: m0 must be positive");
  const Terms k = terms(eq);
  const double x2 = x * x;

  std::vector<double> us;
  if (x2 == 0.0) {
    us.push_back(0.0);
  } else {
    // Multiply through by D^2 and substitute u = a w to keep coefficients O(1).
    const double tt = 1.0 + k.t * k.t;
    const double kk = k.c - k.t * k.s;
    const double qq = k.c * k.c + k.s * k.s;
    const double a = k.a;
    const double b2 = (2.0 * a * tt + 2.0 * kk - x2) / a;
    const double b1 = (a * a * tt + 2.0 * a * kk + qq - 2.0 * a * x2) / (a * a);
    const double b0 = -x2 / a;
    for (double w : real_cubic_roots(b2 / tt, b1 / tt, b0 / tt)) {
      double u = a * w;
      if (u < -1e-9 * a) continue;
      u = std::max(u, 0.0);
      // Newton polish on the magnitude form; keep a step only if it helps.
      for (int it = 0; it < 8; ++it) {
        const double f = eq.drive_squared(u) - x2;
        const double slope = eq.drive_squared_slope(u);
        if (slope == 0.0 || f == 0.0) break;
        const double next = std::max(0.0, u - f / slope);
        if (std::abs(eq.drive_squared(next) - x2) >= std::abs(f)) break;
        u = next;
      }
      us.push_back(u);
    }
    std::sort(us.begin(), us.end());
    // Double roots at a fold collapse onto one branch.
    us.erase(std::unique(us.begin(), us.end(),
                         [](double l, double r) {
                           return std::abs(l - r) <= 1e-9 * std::max({1.0, l, r});
                         }),
             us.end());
  }

  std::vector<BistabilityBranch> out;
  out.reserve(us.size());
  for (double u : us) {
    out.push_back(BistabilityBranch{x, std::sqrt(u), m0 * u, eq.drive_squared_slope(u) > 0.0});
  }
  return out;
}

std::vector<BistabilityBranch> ob_roots(double x, const SystemParams& params) {
  return ob_roots(x, StateEquation::from_params(params), saturation_photons(params));
}

BistabilityCurve ob_curve(std::span<const double> x_values, const StateEquation& eq, double m0) {
  if (!std::is_sorted(x_values.begin(), x_values.end())) {
    throw std::invalid_argument("ob_curve: x values must be ascending");
  }
  BistabilityCurve curve;
  curve.points.reserve(x_values.size());
  for (double x : x_values) {
    curve.points.push_back(BistabilityPoint{x, m0 * x * x, ob_roots(x, eq, m0)});
  }

  auto multivalued = [&](double x) { return ob_roots(x, eq, m0).size() > 1; };
  // Bisect the switch in root count between lo (state `lo_multi`) and hi.
  auto edge = [&](double lo, double hi, bool lo_multi) {
    for (int it = 0; it < 60; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (multivalued(mid) == lo_multi) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    return lo_multi ? lo : hi;
  };

  bool open = false;
  BistableInterval current;
  for (std::size_t k = 0; k < curve.points.size(); ++k) {
    const bool multi = curve.points[k].branches.size() > 1;
    if (multi && !open) {
      current.x_low = k == 0 ? curve.points[k].x
                             : edge(curve.points[k - 1].x, curve.points[k].x, false);
      open = true;
    } else if (!multi && open) {
      current.x_high = edge(curve.points[k - 1].x, curve.points[k].x, true);
      open = false;
      curve.bistable_intervals.push_back(current);
    }
  }
  if (open) {
    current.x_high = curve.points.back().x;
    curve.bistable_intervals.push_back(current);
  }
  for (auto& iv : curve.bistable_intervals) {
    iv.n_drive_low = m0 * iv.x_low * iv.x_low;
    iv.n_drive_high = m0 * iv.x_high * iv.x_high;
  }
  return curve;
}

}  // namespace pbgqed
