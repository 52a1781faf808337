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
#include <vector>

#include "qeuler/density_matrix.hpp"
#include "qeuler/hamiltonian.hpp"

namespace qeuler {

/// Efficient measurement: one Kraus operator M_n per outcome, with
/// sum_n M_n^dagger M_n = 1.
class Povm {
 public:
  /// Throws ValidationError on an incomplete set or mismatched shapes.
  explicit Povm(std::vector<ComplexMatrix> operators);

  /// Rank-one projectors onto the columns of an orthonormal basis.
  static Povm from_basis(const ComplexMatrix& basis);
  static Povm computational(Eigen::Index d);
  static Povm trivial(Eigen::Index d);

  const std::vector<ComplexMatrix>& operators() const { return operators_; }
  const ComplexMatrix& operator[](std::size_t n) const { return operators_[n]; }
  std::size_t size() const { return operators_.size(); }
  Eigen::Index dim() const { return operators_.front().rows(); }

  /// Every operator is an orthogonal projector.
  bool is_projective(double tol = 1e-9) const;

  /// Set when the operators were built from an arbitrary eigenbasis of a
  /// degenerate spectrum.
  bool arbitrary_eigenbasis() const { return arbitrary_eigenbasis_; }
  Povm& mark_arbitrary_eigenbasis() {
    arbitrary_eigenbasis_ = true;
    return *this;
  }

 private:
  std::vector<ComplexMatrix> operators_;
  bool arbitrary_eigenbasis_ = false;
};

/// Outcomes below this probability carry no post-measurement state.
inline constexpr double kNullOutcome = 1e-12;

struct MeasurementRecord {
  DensityMatrix pre_state;
  std::vector<double> probabilities;
  /// std::nullopt for outcomes with p_n < kNullOutcome.
  std::vector<std::optional<DensityMatrix>> post_states;
  /// M(rho) = sum_n M_n rho M_n^dagger
  DensityMatrix channel_output;
  bool arbitrary_eigenbasis = false;

  /// sum_n p_n f(rho_n) over non-null outcomes.
  template <class F>
  double average(F&& f) const {
    double acc = 0.0;
    for (std::size_t n = 0; n < probabilities.size(); ++n) {
      if (post_states[n]) acc += probabilities[n] * f(*post_states[n]);
    }
    return acc;
  }
};

MeasurementRecord measure(const DensityMatrix& rho, const Povm& povm);

/// Groenewold information gain S(rho) - sum p_n S(rho_n).
double information_gain(const MeasurementRecord& record);

/// S(M(rho)) - S(rho).
double entropy_cost(const MeasurementRecord& record);

/// S(M(rho)) - sum p_n S(rho_n); equals information_gain + entropy_cost.
double holevo_of_measurement(const MeasurementRecord& record);

/// All products a_i (x) b_j, outcome index i * |b| + j.
Povm local_povm(const Povm& a, const Povm& b);

/// Rank-one energy projectors on `side`, identity on the other factor.
/// Degenerate spectra yield projectors on the eigenbasis returned by the
/// eigensolver and the POVM is marked.
Povm projective_energy_povm(const Hamiltonian& h, Subsystem side, BipartiteDims dims);

/// S(rho_side) - sum p_n S(rho_n,side)
double local_information_gain(const MeasurementRecord& record, Subsystem side);

/// I(A:B) - sum p_n I^n(A:B)
double correlations_lost(const MeasurementRecord& record);

}  // namespace qeuler
