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

#include <optional>
#include <string>
#include <vector>

#include "qeuler/dissipation.hpp"
#include "qeuler/relations.hpp"
#include "qeuler/run_config.hpp"

namespace qeuler {

struct SimulationResult {
  std::vector<TrajectoryPoint> trajectory;
  double effective_c = 0.0;
  DensityMatrix analytic;
  /// Distance between the final state and analytic_steady_state(effective_c).
  double trace_distance = 0.0;
  std::vector<RelationReport> reports;
  /// Why `reports` is empty, e.g. a final state that is not locally thermal.
  std::optional<std::string> reports_error;
};

/// Evolves rho0 under the collective model of `config` up to t_max and
/// evaluates every relation on the final state.
SimulationResult run_simulation(const RunConfig& config, const DensityMatrix& rho0);

}  // namespace qeuler
