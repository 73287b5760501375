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

#include <numbers>

namespace pbgqed::constants {

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

// CODATA 2018, SI.
inline constexpr double hbar = 1.054571817e-34;        // J s
inline constexpr double boltzmann = 1.380649e-23;      // J / K
inline constexpr double mu0 = 1.25663706212e-6;        // T m / A
inline constexpr double cesium_mass = 2.2069e-25;      // kg

// Unit conversions.
inline constexpr double gauss = 1e-4;                  // T
inline constexpr double gauss_per_cm = 1e-2;           // T / m
inline constexpr double ghz = 1e9;                     // Hz
inline constexpr double ghz_angular = two_pi * 1e9;    // rad/s per GHz of nu

}  // namespace pbgqed::constants
