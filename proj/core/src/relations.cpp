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

#include "qeuler/relations.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "qeuler/error.hpp"

namespace qeuler {

namespace {

std::string with_values(const std::string& digest, double a, double b) {
  std::ostringstream out;
  out.precision(15);
  out << digest << "; a=" << a << " b=" << b;
  return out.str();
}

void require_thermal_at(const DensityMatrix& rho, const Hamiltonian& h, Subsystem side,
                        double beta) {
  const auto fitted = local_inverse_temperature(partial_trace(rho, side), h);
  if (!fitted) {
    throw NotLocallyThermalError(std::string("marginal ") + to_string(side) + " is not thermal");
  }
  if (std::abs(*fitted - beta) > kBetaMatchTolerance) {
    std::ostringstream msg;
    msg.precision(12);
    msg << "marginal " << to_string(side) << " has inverse temperature " << *fitted
        << ", expected " << beta;
    throw NotLocallyThermalError(msg.str());
  }
}

}  // namespace

RelationReport make_relation(std::string name, double lhs, double rhs, double tolerance,
                             std::string inputs_digest) {
  RelationReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = rhs - lhs;
  r.tolerance = tolerance;
  r.satisfied = r.slack >= -tolerance;
  r.inputs_digest = std::move(inputs_digest);
  return r;
}

RelationReport make_identity(std::string name, double a, double b, double tolerance,
                             std::string inputs_digest) {
  return make_relation(std::move(name), std::abs(a - b), 0.0, tolerance,
                       with_values(inputs_digest, a, b));
}

std::string describe_state(const DensityMatrix& rho) {
  std::ostringstream out;
  out.precision(10);
  out << "d=" << rho.dim();
  if (rho.dims()) out << " dims=" << rho.dims()->a << "x" << rho.dims()->b;
  out << " S=" << von_neumann_entropy(rho)
      << " purity=" << (rho.matrix() * rho.matrix()).trace().real();
  return out.str();
}

RelationReport check_trivial_bound(const DensityMatrix& rho, const Povm& povm) {
  rho.require_dims();
  const MeasurementRecord record = measure(rho, povm);
  const double rhs = std::log(static_cast<double>(rho.dim())) - mutual_information(rho);
  return make_relation("trivial_bound", information_gain(record), rhs, kSpectralTolerance,
                       describe_state(rho) + " outcomes=" + std::to_string(povm.size()));
}

bool is_local_povm(const Povm& povm, BipartiteDims dims, double tol) {
  if (povm.dim() != dims.total()) return false;
  const Eigen::Index da = dims.a;
  const Eigen::Index db = dims.b;
  for (const auto& m : povm.operators()) {
    // realignment: a product a (x) b becomes the rank-one matrix vec(a) vec(b)^T
    ComplexMatrix r(da * da, db * db);
    for (Eigen::Index i = 0; i < da; ++i)
      for (Eigen::Index j = 0; j < da; ++j)
        for (Eigen::Index k = 0; k < db; ++k)
          for (Eigen::Index l = 0; l < db; ++l) r(i * da + j, k * db + l) = m(i * db + k, j * db + l);
    const RealVector sv = Eigen::JacobiSVD<ComplexMatrix>(r).singularValues();
    if (sv.size() > 1 && sv(1) > tol * std::max(sv(0), 1.0)) return false;
  }
  return true;
}

RelationReport check_subadditivity(const DensityMatrix& rho, const Povm& local_projective) {
  const BipartiteDims dims = rho.require_dims();
  if (!is_local_povm(local_projective, dims)) {
    throw ValidationError("check_subadditivity: POVM is not a product of local operators");
  }
  if (!local_projective.is_projective()) {
    throw ValidationError("check_subadditivity: POVM is not projective");
  }
  const MeasurementRecord record = measure(rho, local_projective);
  const double rhs = local_information_gain(record, Subsystem::A) +
                     local_information_gain(record, Subsystem::B);
  return make_relation("local_subadditivity", information_gain(record), rhs, kSpectralTolerance,
                       describe_state(rho) + " outcomes=" + std::to_string(local_projective.size()));
}

double common_local_beta(const DensityMatrix& rho, const Hamiltonian& h_a,
                         const Hamiltonian& h_b) {
  const auto beta_a = local_inverse_temperature(partial_trace(rho, Subsystem::A), h_a);
  const auto beta_b = local_inverse_temperature(partial_trace(rho, Subsystem::B), h_b);
  if (!beta_a) throw NotLocallyThermalError("marginal A is not thermal");
  if (!beta_b) throw NotLocallyThermalError("marginal B is not thermal");
  if (std::abs(*beta_a - *beta_b) > kBetaMatchTolerance) {
    std::ostringstream msg;
    msg.precision(12);
    msg << "marginal temperatures differ: beta_A = " << *beta_a << ", beta_B = " << *beta_b;
    throw NotLocallyThermalError(msg.str());
  }
  return *beta_b;
}

ThermalAnalysis analyze_locally_thermal(const DensityMatrix& rho, const Hamiltonian& h_a,
                                        const Hamiltonian& h_b, double beta,
                                        const GridSpec& grid) {
  const BipartiteDims dims = rho.require_dims();
  if (h_a.dim() != dims.a || h_b.dim() != dims.b) {
    throw DimensionError("local Hamiltonians do not match the bipartite dims");
  }
  if (!(beta >= 0.0) || std::isinf(beta)) {
    throw ValidationError("inverse temperature must be finite and >= 0");
  }
  require_thermal_at(rho, h_a, Subsystem::A, beta);
  require_thermal_at(rho, h_b, Subsystem::B, beta);

  ThermalAnalysis out;
  out.beta = beta;
  out.correlations = breakdown(rho, h_b, grid);
  out.thermo = thermo_report(rho, Hamiltonian::local_sum(h_a, h_b), h_b, beta);
  out.entropy_b = von_neumann_entropy(partial_trace(rho, Subsystem::B));

  const double chi_b = out.correlations.chi_b;
  const double gap = out.thermo.beta_energy_gap;
  out.rhs_ineq1 = chi_b + gap - beta * out.thermo.ergotropy;
  out.rhs_ineq2 = chi_b + gap - beta * out.thermo.global_ergotropy;
  out.slack1 = out.rhs_ineq1 - out.correlations.information_gain;
  out.slack2 = out.rhs_ineq2 - out.correlations.information_gain;
  out.tradeoff_residual = gap - beta * out.thermo.global_ergotropy - out.correlations.quantum_gain;
  if (beta > 1e-12) {
    out.euler_residual = out.tradeoff_residual / beta;
  } else {
    // infinite temperature: only the sign of the nats-valued residual survives
    const double inf = std::numeric_limits<double>::infinity();
    out.euler_residual = out.tradeoff_residual > 0.0 ? inf
                         : out.tradeoff_residual < 0.0 ? -inf
                                                       : 0.0;
  }
  return out;
}

ThermalAnalysis analyze_locally_thermal(const DensityMatrix& rho, const Hamiltonian& h_a,
                                        const Hamiltonian& h_b, const GridSpec& grid) {
  return analyze_locally_thermal(rho, h_a, h_b, common_local_beta(rho, h_a, h_b), grid);
}

RelationReport ineq1_report(const ThermalAnalysis& a, const std::string& digest) {
  return make_relation("ergotropy_bound", a.correlations.information_gain, a.rhs_ineq1,
                       kOptimizationTolerance, digest);
}

RelationReport ineq2_report(const ThermalAnalysis& a, const std::string& digest) {
  return make_relation("global_ergotropy_bound", a.correlations.information_gain, a.rhs_ineq2,
                       kOptimizationTolerance, digest);
}

RelationReport euler_report(const ThermalAnalysis& a, const std::string& digest) {
  RelationReport r;
  r.name = "euler";
  r.rhs = a.thermo.avg_energy;
  r.lhs = a.thermo.avg_energy - a.euler_residual;
  r.slack = a.euler_residual;
  r.tolerance = kOptimizationTolerance;
  r.satisfied = r.slack >= -r.tolerance;
  r.inputs_digest = digest;
  r.near_equality = std::abs(r.slack) <= kNearEqualityBand;
  return r;
}

RelationReport tradeoff_report(const ThermalAnalysis& a, const std::string& digest) {
  RelationReport r;
  r.name = "tradeoff";
  r.lhs = a.correlations.quantum_gain;
  r.rhs = a.thermo.beta_energy_gap - a.beta * a.thermo.global_ergotropy;
  r.slack = a.tradeoff_residual;
  r.tolerance = kOptimizationTolerance;
  r.satisfied = r.slack >= -r.tolerance;
  r.inputs_digest = digest;
  r.near_equality = std::abs(r.slack) <= kNearEqualityBand;
  return r;
}

namespace {

std::string thermal_digest(const DensityMatrix& rho, double beta) {
  std::ostringstream out;
  out.precision(12);
  out << describe_state(rho) << " beta=" << beta << " povm=energy_B";
  return out.str();
}

}  // namespace

RelationReport check_ineq1(const DensityMatrix& rho, const Hamiltonian& h_a,
                           const Hamiltonian& h_b, double beta) {
  return ineq1_report(analyze_locally_thermal(rho, h_a, h_b, beta), thermal_digest(rho, beta));
}

RelationReport check_ineq1(const DensityMatrix& rho, const Hamiltonian& h_b, double beta) {
  return check_ineq1(rho, h_b, h_b, beta);
}

RelationReport check_ineq2(const DensityMatrix& rho, const Hamiltonian& h_a,
                           const Hamiltonian& h_b, double beta) {
  return ineq2_report(analyze_locally_thermal(rho, h_a, h_b, beta), thermal_digest(rho, beta));
}

RelationReport check_ineq2(const DensityMatrix& rho, const Hamiltonian& h_b, double beta) {
  return check_ineq2(rho, h_b, h_b, beta);
}

RelationReport euler_residual(const DensityMatrix& rho, const Hamiltonian& h_a,
                              const Hamiltonian& h_b, double beta, const GridSpec& grid) {
  return euler_report(analyze_locally_thermal(rho, h_a, h_b, beta, grid),
                      thermal_digest(rho, beta));
}

RelationReport euler_residual(const DensityMatrix& rho, const Hamiltonian& h_b, double beta,
                              const GridSpec& grid) {
  return euler_residual(rho, h_b, h_b, beta, grid);
}

RelationReport tradeoff_residual(const DensityMatrix& rho, const Hamiltonian& h_a,
                                 const Hamiltonian& h_b, double beta, const GridSpec& grid) {
  return tradeoff_report(analyze_locally_thermal(rho, h_a, h_b, beta, grid),
                         thermal_digest(rho, beta));
}

RelationReport tradeoff_residual(const DensityMatrix& rho, const Hamiltonian& h_b, double beta,
                                 const GridSpec& grid) {
  return tradeoff_residual(rho, h_b, h_b, beta, grid);
}

std::vector<RelationReport> all_relations(const DensityMatrix& rho, const Hamiltonian& h_a,
                                          const Hamiltonian& h_b, const GridSpec& grid) {
  const BipartiteDims dims = rho.require_dims();
  const double beta = common_local_beta(rho, h_a, h_b);
  const ThermalAnalysis analysis = analyze_locally_thermal(rho, h_a, h_b, beta, grid);
  const std::string digest = thermal_digest(rho, beta);

  const Povm energy_b = projective_energy_povm(h_b, Subsystem::B, dims);
  const MeasurementRecord record = measure(rho, energy_b);
  const CorrelationBreakdown& corr = analysis.correlations;

  std::vector<RelationReport> out;
  out.push_back(check_trivial_bound(rho, energy_b));
  out.push_back(check_subadditivity(rho, energy_b));
  out.push_back(make_identity("holevo_closure", holevo_of_measurement(record),
                              information_gain(record) + entropy_cost(record), kSpectralTolerance,
                              digest));
  out.push_back(make_identity("energy_measurement_split", corr.information_gain,
                              corr.chi_b + analysis.entropy_b - corr.mutual_information,
                              kSpectralTolerance, digest));
  out.push_back(make_identity("classical_quantum_split", corr.information_gain,
                              corr.chi_b + corr.quantum_gain, kOptimizationTolerance, digest));
  out.push_back(ineq1_report(analysis, digest));
  out.push_back(ineq2_report(analysis, digest));
  out.push_back(tradeoff_report(analysis, digest));
  out.push_back(euler_report(analysis, digest));
  return out;
}

}  // namespace qeuler
