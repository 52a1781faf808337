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

#include "qeuler/correlations.hpp"
#include "qeuler/density_matrix.hpp"
#include "qeuler/hamiltonian.hpp"
#include "qeuler/measurement.hpp"
#include "qeuler/thermo.hpp"

namespace qeuler {

/// One evaluated inequality lhs <= rhs.
///
/// Identities are reported as |a - b| <= 0 so that `satisfied` always means
/// slack >= -tolerance.
struct RelationReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // rhs - lhs
  bool satisfied = false;
  double tolerance = 0.0;
  std::string inputs_digest;
  /// Set by relations that also track approximate saturation.
  std::optional<bool> near_equality;
};

RelationReport make_relation(std::string name, double lhs, double rhs, double tolerance,
                             std::string inputs_digest);
RelationReport make_identity(std::string name, double a, double b, double tolerance,
                             std::string inputs_digest);

inline constexpr double kSpectralTolerance = 1e-9;
/// |slack| below this counts as saturation for the Euler and trade-off relations.
inline constexpr double kNearEqualityBand = 0.02;
/// Largest allowed disagreement between the two local temperatures.
inline constexpr double kBetaMatchTolerance = 1e-6;

/// I_g <= ln d - I(A:B) for any POVM.
RelationReport check_trivial_bound(const DensityMatrix& rho, const Povm& povm);

/// I_g <= I_g^A + I_g^B. Requires a local projective POVM (every operator a
/// product projector); anything else throws ValidationError.
RelationReport check_subadditivity(const DensityMatrix& rho, const Povm& local_projective);

/// True when every operator is a tensor product across `dims`.
bool is_local_povm(const Povm& povm, BipartiteDims dims, double tol = 1e-9);

/// Common inverse temperature of both marginals; throws NotLocallyThermalError
/// when either marginal is not thermal or the two disagree beyond 1e-6.
double common_local_beta(const DensityMatrix& rho, const Hamiltonian& h_a, const Hamiltonian& h_b);

/// Every quantity entering the thermodynamic bounds for a locally thermal
/// state, computed once. Ergotropies refer to H_A (x) 1 + 1 (x) H_B.
struct ThermalAnalysis {
  double beta = 0.0;
  CorrelationBreakdown correlations;
  ThermoReport thermo;
  double entropy_b = 0.0;
  double rhs_ineq1 = 0.0;  // chi_B + beta(<H_B> - E - F_B)
  double rhs_ineq2 = 0.0;  // chi_B + beta(<H_B> - E_G - F_B)
  double slack1 = 0.0;
  double slack2 = 0.0;
  /// beta(<H_B> - E_G - F_B) - (E(B:C) - D_A), in nats.
  double tradeoff_residual = 0.0;
  /// <H_B> - (E_G + F_B + I_g^Q / beta), in energy units; +-inf at beta = 0.
  double euler_residual = 0.0;
};

/// Throws NotLocallyThermalError when the marginals are not thermal at `beta`.
ThermalAnalysis analyze_locally_thermal(const DensityMatrix& rho, const Hamiltonian& h_a,
                                        const Hamiltonian& h_b, double beta,
                                        const GridSpec& grid = {});
/// Same, with beta taken from common_local_beta.
ThermalAnalysis analyze_locally_thermal(const DensityMatrix& rho, const Hamiltonian& h_a,
                                        const Hamiltonian& h_b, const GridSpec& grid = {});

/// I_g <= chi_B + beta(<H_B> - E - F_B). The single-Hamiltonian overloads take
/// H_A = H_B.
RelationReport check_ineq1(const DensityMatrix& rho, const Hamiltonian& h_b, double beta);
RelationReport check_ineq1(const DensityMatrix& rho, const Hamiltonian& h_a,
                           const Hamiltonian& h_b, double beta);

/// I_g <= chi_B + beta(<H_B> - E_G - F_B).
RelationReport check_ineq2(const DensityMatrix& rho, const Hamiltonian& h_b, double beta);
RelationReport check_ineq2(const DensityMatrix& rho, const Hamiltonian& h_a,
                           const Hamiltonian& h_b, double beta);

/// E_G + F_B + I_g^Q / beta <= <H_B>, with near_equality for |slack| <= 0.02.
RelationReport euler_residual(const DensityMatrix& rho, const Hamiltonian& h_b, double beta,
                              const GridSpec& grid = {});
RelationReport euler_residual(const DensityMatrix& rho, const Hamiltonian& h_a,
                              const Hamiltonian& h_b, double beta, const GridSpec& grid = {});

/// E(B:C) - D_A <= beta(<H_B> - E_G - F_B); slack is beta times the Euler slack.
RelationReport tradeoff_residual(const DensityMatrix& rho, const Hamiltonian& h_b, double beta,
                                 const GridSpec& grid = {});
RelationReport tradeoff_residual(const DensityMatrix& rho, const Hamiltonian& h_a,
                                 const Hamiltonian& h_b, double beta, const GridSpec& grid = {});

/// Reports built from an existing analysis.
RelationReport ineq1_report(const ThermalAnalysis& a, const std::string& digest);
RelationReport ineq2_report(const ThermalAnalysis& a, const std::string& digest);
RelationReport euler_report(const ThermalAnalysis& a, const std::string& digest);
RelationReport tradeoff_report(const ThermalAnalysis& a, const std::string& digest);

/// Every relation for a locally thermal bipartite state: the trivial bound,
/// subadditivity, Holevo closure and the classical/quantum split under the
/// energy measurement of B, then both thermodynamic bounds, the Euler
/// relation and the trade-off.
std::vector<RelationReport> all_relations(const DensityMatrix& rho, const Hamiltonian& h_a,
                                          const Hamiltonian& h_b, const GridSpec& grid = {});

/// Short description of a state for report digests.
std::string describe_state(const DensityMatrix& rho);

}  // namespace qeuler
