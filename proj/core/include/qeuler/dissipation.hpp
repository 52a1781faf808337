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

#include <vector>

#include "qeuler/density_matrix.hpp"
#include "qeuler/hamiltonian.hpp"

namespace qeuler {

/// Two qubits coupled to a common thermal bath.
///
/// Basis ordering is {|ee>, |eg>, |ge>, |gg>} throughout; qubit 1 is the A
/// factor and qubit 2 the B factor.
struct ModelParams {
  double omega = 1.0;
  double f = 0.0;
  double beta_e = 10.0;
  /// Decay-rate matrix gamma_ij; symmetric and positive semi-definite.
  Eigen::Matrix2d gamma = Eigen::Matrix2d::Ones();

  /// Fully collective rates gamma_ij = rate.
  static ModelParams collective(double omega, double beta_e, double rate = 1.0,
                                double f = 0.0);

  /// Mean photon number 1 / (exp(beta_e omega) - 1).
  double nbar() const;
  double max_rate() const { return gamma.maxCoeff(); }

  /// Throws ValidationError on omega <= 0, beta_e <= 0 or a non-PSD gamma.
  void validate() const;
};

inline constexpr BipartiteDims kTwoQubits{2, 2};

/// H_0 + H_d = omega (n_1 + n_2) + f (s1+ s2- + s2+ s1-)
Hamiltonian build_hamiltonian(const ModelParams& params);

/// omega |e><e|, the self Hamiltonian of each qubit.
Hamiltonian qubit_hamiltonian(const ModelParams& params);

/// H_0 alone: the sum of the local self Hamiltonians.
Hamiltonian self_hamiltonian(const ModelParams& params);

/// Generator of the master equation applied to an arbitrary operator.
ComplexMatrix lindblad_rhs(const ComplexMatrix& rho, const ModelParams& params);
ComplexMatrix lindblad_rhs(const DensityMatrix& rho, const ModelParams& params);

/// Named two-qubit states in the model basis.
namespace two_qubit {
ComplexVector ee();
ComplexVector eg();
ComplexVector ge();
ComplexVector gg();
/// (|ge> + |eg>) / sqrt 2
ComplexVector psi_plus();
/// (|ge> - |eg>) / sqrt 2
ComplexVector psi_minus();
/// (|ee> + |gg>) / sqrt 2
ComplexVector phi_plus();
}  // namespace two_qubit

/// Entries of a two-qubit X-shaped state.
struct XState {
  double rho11 = 0.0;
  double rho22 = 0.0;
  double rho33 = 0.0;
  double rho44 = 0.0;
  Complex rho14{0.0, 0.0};
  Complex rho23{0.0, 0.0};

  /// Reads the X entries; throws ValidationError if any other entry exceeds `tol`.
  static XState from(const DensityMatrix& rho, double tol = 1e-10);
  DensityMatrix to_density() const;
  /// Largest modulus among the entries outside the X pattern.
  static double off_x_magnitude(const ComplexMatrix& m);
};

struct TrajectoryPoint {
  double t = 0.0;
  DensityMatrix rho;
  double trace = 1.0;
  double min_eigenvalue = 0.0;
};

struct EvolveOptions {
  double dt = 0.005;
  double t_max = 50.0;
  /// Store every n-th step (the final state is always stored).
  int stride = 1;
  /// Stop once max |rhs| falls below this.
  double stationary_tolerance = 1e-12;
};

/// Fixed-step RK4 integration of the master equation. Each stored state is
/// re-Hermitized and validated. Throws ValidationError when
/// dt max(gamma) (nbar + 1) > 0.01 and IntegrationError when an eigenvalue
/// drops below -1e-6.
std::vector<TrajectoryPoint> evolve(const DensityMatrix& rho0, const ModelParams& params,
                                    const EvolveOptions& options);

/// Weight of the initial state outside the decoherence-free singlet,
/// 1 - <psi-|rho0|psi->.
double effective_c(const DensityMatrix& rho0);

/// (1 - c) |psi-><psi-| + c Z+^-1 (e^{-2 w b} |ee><ee| + e^{-w b} |psi+><psi+| + |gg><gg|)
DensityMatrix analytic_steady_state(double c, const ModelParams& params);

/// Inverse temperature of either marginal of analytic_steady_state(c).
double local_beta(double c, const ModelParams& params);

/// max(1 - 2c, 0): low-temperature ergotropy of the steady state at omega = 1.
double analytic_ergotropy_low_t(double c);

}  // namespace qeuler
