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

#include <iosfwd>
#include <vector>

#include "qeuler/run_config.hpp"

namespace qeuler {

/// Every column of the steady-state sweep at one value of c.
struct SweepRow {
  double c = 0.0;
  double beta = 0.0;
  double information_gain = 0.0;
  double chi_b = 0.0;
  double mutual_information = 0.0;
  double discord_a = 0.0;
  double eof_bc = 0.0;
  double quantum_gain = 0.0;
  double avg_energy_b = 0.0;
  double free_energy_b = 0.0;
  double ergotropy = 0.0;
  double bound_ergotropy = 0.0;
  double global_ergotropy = 0.0;
  double rhs_ineq1 = 0.0;
  double rhs_ineq2 = 0.0;
  double slack1 = 0.0;
  double slack2 = 0.0;
  double euler_residual = 0.0;
  double tradeoff_residual = 0.0;
};

/// Analyses analytic_steady_state(c). The local temperature is fitted from
/// the marginals and cross-checked against local_beta (ValidationError on a
/// mismatch above 1e-9).
SweepRow sweep_point(double c, const RunConfig& config);

/// All grid points, evaluated concurrently, ordered by c.
std::vector<SweepRow> run_sweep(const RunConfig& config);

/// CSV header plus one row per point.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace qeuler
