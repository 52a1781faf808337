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

#include <limits>
#include <optional>

#include "qeuler/density_matrix.hpp"
#include "qeuler/hamiltonian.hpp"

namespace qeuler {

inline constexpr double kInfiniteBeta = std::numeric_limits<double>::infinity();

/// exp(-beta H) / Z. beta = +inf gives the uniform mixture on the ground space.
DensityMatrix thermal_state(const Hamiltonian& h, double beta);

/// ln Z = ln sum_i exp(-beta eps_i), evaluated with the ground energy factored out.
double log_partition(const Hamiltonian& h, double beta);

/// -ln(Z) / beta. Throws ValidationError for beta <= 0.
double free_energy(const Hamiltonian& h, double beta);

/// tr(H rho)
double average_energy(const DensityMatrix& rho, const Hamiltonian& h);

/// Spectrum of rho, descending, placed on the energy eigenbasis, ascending.
/// Ties keep their eigensolver order.
DensityMatrix passive_state(const DensityMatrix& rho, const Hamiltonian& h);

/// tr(H (rho - P_rho))
double ergotropy(const DensityMatrix& rho, const Hamiltonian& h);

/// sum_ij r_j eps_i (|<r_j|eps_i>|^2 - delta_ij): the same quantity written as
/// a double sum over state and energy eigenvectors.
double ergotropy_double_sum(const DensityMatrix& rho, const Hamiltonian& h);

/// Inverse temperature of the thermal state of `h` with entropy `entropy`.
/// Returns +inf when the entropy is at or below that of the ground-space
/// mixture and 0 at the maximal value ln d. Throws ValidationError above ln d.
double entropy_matched_beta(const Hamiltonian& h, double entropy);

/// tr((P_rho - P_rho^th) H) with S(P_rho^th) = S(rho).
double bound_ergotropy(const DensityMatrix& rho, const Hamiltonian& h);

/// ergotropy + bound_ergotropy
double global_ergotropy(const DensityMatrix& rho, const Hamiltonian& h);

/// Inverse temperature of a state that is diagonal in the energy basis with
/// Boltzmann populations, from a least-squares fit of ln p_i against -eps_i.
/// std::nullopt when coherences or the fit residual exceed 1e-8.
std::optional<double> local_inverse_temperature(const DensityMatrix& rho_local,
                                                const Hamiltonian& h);

/// Energetics of a bipartite state whose B marginal is thermal at `beta`.
struct ThermoReport {
  double beta = 0.0;
  double avg_energy = 0.0;   // <H_B>
  double free_energy = 0.0;  // F_B; -inf at beta = 0
  /// beta (<H_B> - F_B) = S(rho_B), well defined at beta = 0.
  double beta_energy_gap = 0.0;
  double ergotropy = 0.0;         // of rho_AB under h_total
  double bound_ergotropy = 0.0;   // of rho_AB under h_total
  double global_ergotropy = 0.0;  // sum of the two
};

ThermoReport thermo_report(const DensityMatrix& rho_ab, const Hamiltonian& h_total,
                           const Hamiltonian& h_b, double beta);

}  // namespace qeuler
