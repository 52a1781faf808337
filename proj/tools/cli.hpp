// Copyright 2026 The qeuler Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>

#include "qeuler/run_config.hpp"

namespace qeuler::cli {

enum ExitCode : int { kSuccess = 0, kPropertyFailure = 1, kInvalidInput = 2 };

// Each command writes its primary output to config.output_path when set and
// to `out` otherwise; progress and diagnostics go to `err`.

/// Steady-state sweep CSV. Property failure when a row has slack1 or slack2
/// below -1e-9.
int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Trajectory CSV to the output path (or `out`), then a JSON summary with
/// effective_c, trace_distance and the final-state reports. The summary goes
/// to `<output_path>.reports.json` when an output path is set.
int cmd_simulate(const RunConfig& config, const std::filesystem::path& rho0_file,
                 std::ostream& out, std::ostream& err);

/// Randomized property suites; JSON summary.
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);

/// JSON array of every relation for the state. A state that is not locally
/// thermal yields {"error": "not_locally_thermal", ...} and exit code 2.
int cmd_report(const RunConfig& config, const std::filesystem::path& state_file,
               const std::filesystem::path& h_file, std::ostream& out, std::ostream& err);

/// Runs `body`, mapping library exceptions onto exit codes with a message on
/// `err`.
int guarded(std::ostream& err, const std::function<int()>& body);

}  // namespace qeuler::cli
