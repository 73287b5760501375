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

#include <stdexcept>
#include <string>

#include "pbgqed/hilbert.hpp"
#include "pbgqed/lindblad.hpp"

namespace pbgqed {

class SolverError : public std::runtime_error {
 public:
  enum class Kind {
    singular_system,          ///< no unique trace-one null vector
    truncation_insufficient,  ///< top two Fock levels hold too much population
    resource_cap,             ///< required n_max exceeds the configured ceiling
  };

  SolverError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

struct SteadyOptions {
  double tail_tol = 1e-8;
  double residual_tol = 1e-9;
  /// Throw truncation_insufficient when the tail population exceeds tail_tol.
  bool check_tail = true;
};

struct SteadyState {
  DensityMatrix rho;
  /// ||L vec(rho)||_inf / ||L||_inf
  double residual = 0.0;
  /// Population of Fock levels n_max - 1 and n_max.
  double tail_population = 0.0;
  /// Magnitude of the most negative eigenvalue clipped to zero (0 if none).
  double clipped = 0.0;
  bool used_fallback = false;
};

/// Solves L vec(rho) = 0 with Tr rho = 1.
///
/// One diagonal-element row of L is replaced by the trace constraint and the
/// square system is factorized with a sparse LU. If the residual misses
/// `residual_tol` after iterative refinement, inverse iteration on the
/// (slightly shifted) Liouvillian is used instead. Deterministic for fixed
/// inputs.
SteadyState steady_state(const SystemParams& params, HilbertDims dims,
                         const SteadyOptions& options = {});

struct TruncationOptions {
  double tail_tol = 1e-8;
  double residual_tol = 1e-9;
  int min_n_max = 4;
  int max_n_max = 400;
  double growth = 1.5;
};

/// Starting truncation: ceil(n_drive + 6 sqrt(n_drive)) + min_n_max, clamped.
int initial_n_max(double n_drive, const TruncationOptions& options);

struct AutoSteadyState {
  HilbertDims dims;
  SteadyState state;
};

/// Grows n_max geometrically from initial_n_max() until the top-two Fock
/// population is below tail_tol. Throws SolverError(resource_cap) when the
/// ceiling is reached without convergence.
AutoSteadyState solve_auto(const SystemParams& params, const TruncationOptions& options = {});

HilbertDims auto_truncate(const SystemParams& params, const TruncationOptions& options = {});

}  // namespace pbgqed
