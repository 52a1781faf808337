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

#include "qeuler/density_matrix.hpp"
#include "qeuler/hamiltonian.hpp"
#include "qeuler/measurement.hpp"

namespace qeuler {

/// Search controls for the optimal projective measurement on a qubit.
///
/// The Bloch sphere is scanned on theta_i = pi i / theta_points,
/// phi_j = 2 pi j / phi_points, so doubling both counts nests the coarse grid.
/// The best `starts` grid points are then refined by compass search whose
/// step halves until it drops below `resolution` radians.
struct GridSpec {
  int theta_points = 64;
  int phi_points = 64;
  double resolution = 1e-8;
  int starts = 4;

  GridSpec doubled() const { return {2 * theta_points, 2 * phi_points, resolution, starts}; }
};

/// S(rho_A) + S(rho_B) - S(rho_AB)
double mutual_information(const DensityMatrix& rho);

/// Holevo information about A gained from a measurement of the form
/// 1_A (x) N_n on B: S(rho_A) - sum p_n S(rho_A^n). Throws ValidationError if
/// the POVM does not act trivially on A.
double chi_from_local_measurement(const DensityMatrix& rho, const Povm& povm_on_b);

struct BlochDirection {
  double theta = 0.0;
  double phi = 0.0;
};

/// Projective measurement {|n><n|, |n_perp><n_perp|} on qubit A along `dir`.
Povm qubit_projective_povm(BlochDirection dir, Eigen::Index d_b);

/// S(rho_B) - sum p_n S(rho_B^n) for the qubit measurement along `dir` on A.
double chi_a_at(const DensityMatrix& rho, BlochDirection dir);

struct ChiOptimum {
  double value = 0.0;
  BlochDirection direction;
};

/// Best projective measurement on qubit A. Requires d_A = 2.
ChiOptimum optimize_chi_a(const DensityMatrix& rho, const GridSpec& grid = {});

double chi_a_max(const DensityMatrix& rho, const GridSpec& grid = {});

/// I(A:B) - chi_A^max, clamped to 0 within -1e-6.
double discord_a(const DensityMatrix& rho, const GridSpec& grid = {});

/// E(B:C) for the purifier C from S(rho_B) = chi_A^max + E(B:C); clamped at 0.
double eof_via_koashi_winter(const DensityMatrix& rho, const GridSpec& grid = {});

/// Wootters concurrence of a two-qubit state.
double concurrence(const DensityMatrix& rho);

/// Entanglement of formation of a two-qubit state (nats).
double wootters_eof(const DensityMatrix& rho);

/// The (B, C) marginal of the purification ABC of a bipartite rho_AB; C is the
/// ancilla of `purify`. Labelled with dims (d_B, rank).
DensityMatrix purifier_marginal_bc(const DensityMatrix& rho);

struct CorrelationBreakdown {
  double information_gain = 0.0;  // under the energy measurement of B
  double mutual_information = 0.0;
  double chi_b = 0.0;
  double chi_a_max = 0.0;
  double discord_a = 0.0;
  double eof_bc = 0.0;
  double quantum_gain = 0.0;  // eof_bc - discord_a
  /// |information_gain - (chi_b + quantum_gain)|
  double decomposition_residual = 0.0;
};

inline constexpr double kOptimizationTolerance = 2e-3;

/// Classical/quantum split of the information gain of a local projective
/// energy measurement on B. Throws ValidationError when the split misses
/// the directly computed gain by more than kOptimizationTolerance.
CorrelationBreakdown breakdown(const DensityMatrix& rho, const Hamiltonian& h_b,
                               const GridSpec& grid = {});

}  // namespace qeuler
