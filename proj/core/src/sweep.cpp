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

#include "qeuler/sweep.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "qeuler/error.hpp"
#include "qeuler/io.hpp"
#include "qeuler/parallel.hpp"
#include "qeuler/relations.hpp"

namespace qeuler {

SweepRow sweep_point(double c, const RunConfig& config) {
  const ModelParams params = config.model();
  const DensityMatrix rho = analytic_steady_state(c, params);
  const Hamiltonian h = qubit_hamiltonian(params);

  const double beta = common_local_beta(rho, h, h);
  const double expected = local_beta(c, params);
  if (std::abs(beta - expected) > 1e-9) {
    std::ostringstream msg;
    msg.precision(15);
    msg << "marginal temperature " << beta << " disagrees with the closed form " << expected
        << " at c = " << c;
    throw ValidationError(msg.str());
  }
  const ThermalAnalysis a = analyze_locally_thermal(rho, h, h, beta, config.grid);

  SweepRow row;
  row.c = c;
  row.beta = beta;
  row.information_gain = a.correlations.information_gain;
  row.chi_b = a.correlations.chi_b;
  row.mutual_information = a.correlations.mutual_information;
  row.discord_a = a.correlations.discord_a;
  row.eof_bc = a.correlations.eof_bc;
  row.quantum_gain = a.correlations.quantum_gain;
  row.avg_energy_b = a.thermo.avg_energy;
  row.free_energy_b = a.thermo.free_energy;
  row.ergotropy = a.thermo.ergotropy;
  row.bound_ergotropy = a.thermo.bound_ergotropy;
  row.global_ergotropy = a.thermo.global_ergotropy;
  row.rhs_ineq1 = a.rhs_ineq1;
  row.rhs_ineq2 = a.rhs_ineq2;
  row.slack1 = a.slack1;
  row.slack2 = a.slack2;
  row.euler_residual = a.euler_residual;
  row.tradeoff_residual = a.tradeoff_residual;
  return row;
}

std::vector<SweepRow> run_sweep(const RunConfig& config) {
  config.validate();
  const std::vector<double> cs = config.c_grid.points();
  return parallel_map(cs.size(), [&](std::size_t i) { return sweep_point(cs[i], config); });
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "c,I_g,chi_B,MI,discord_A,eof_BC,quantum_gain,avg_energy_B,free_energy_B,ergotropy,"
         "bound_ergotropy,global_ergotropy,rhs_ineq1,rhs_ineq2,slack1,slack2,euler_residual\n";
  for (const auto& r : rows) {
    const double cols[] = {r.c,
                           r.information_gain,
                           r.chi_b,
                           r.mutual_information,
                           r.discord_a,
                           r.eof_bc,
                           r.quantum_gain,
                           r.avg_energy_b,
                           r.free_energy_b,
                           r.ergotropy,
                           r.bound_ergotropy,
                           r.global_ergotropy,
                           r.rhs_ineq1,
                           r.rhs_ineq2,
                           r.slack1,
                           r.slack2,
                           r.euler_residual};
    bool first = true;
    for (double x : cols) {
      if (!first) out << ',';
      out << io::format_number(x);
      first = false;
    }
    out << '\n';
  }
}

}  // namespace qeuler
