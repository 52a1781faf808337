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

#include "qeuler/simulate.hpp"

#include "qeuler/error.hpp"

namespace qeuler {

SimulationResult run_simulation(const RunConfig& config, const DensityMatrix& rho0) {
  config.validate();
  if (rho0.dim() != 4) throw DimensionError("simulate: initial state must be two-qubit");
  const ModelParams params = config.model();
  EvolveOptions options;
  options.dt = config.dt;
  options.t_max = config.t_max;
  options.stride = config.stride;

  SimulationResult out{evolve(rho0, params, options), effective_c(rho0),
                       analytic_steady_state(effective_c(rho0), params), 0.0, {}, std::nullopt};
  const DensityMatrix final_state = out.trajectory.back().rho.with_dims(kTwoQubits);
  out.trace_distance = trace_distance(final_state, out.analytic);

  const Hamiltonian h = qubit_hamiltonian(params);
  try {
    out.reports = all_relations(final_state, h, h, config.grid);
  } catch (const NotLocallyThermalError& e) {
    out.reports_error = std::string("not locally thermal: ") + e.what();
  } catch (const ValidationError& e) {
    out.reports_error = e.what();
  }
  return out;
}

}  // namespace qeuler
