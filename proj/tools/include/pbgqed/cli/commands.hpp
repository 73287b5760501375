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

#include <iosfwd>
#include <string>
#include <vector>

#include "pbgqed/cli/config.hpp"

namespace pbgqed::cli {

enum ExitCode : int { kSuccess = 0, kNumericalFailure = 1, kUsageError = 2 };

/// A finished table: `#` header lines, one column-name line, then rows.
/// Cells are already formatted.
struct Dataset {
  std::vector<std::string> notes;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

/// Shortest decimal form that round-trips the double; "nan" and "inf" as such.
std::string format_number(double value);

/// Header lines shared by every command: version, command, drive convention
/// and the full resolved config as one JSON line.
std::vector<std::string> standard_header(const std::string& command, const RunConfig& config);

std::string render_csv(const Dataset& dataset);

Dataset sweep_drive(const RunConfig& config);
Dataset transit(const RunConfig& config);
Dataset bistability(const RunConfig& config);
Dataset qfunc(const RunConfig& config);
Dataset trap(const RunConfig& config);
Dataset force(const RunConfig& config);

/// Full command line entry point. `args` excludes the program name. Output
/// goes to --out or `out`; nothing is written unless the command succeeds.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pbgqed::cli
