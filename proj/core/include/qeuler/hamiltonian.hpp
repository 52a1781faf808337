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

#include "qeuler/linalg.hpp"

namespace qeuler {

/// Hermitian operator with its spectral decomposition cached
/// (energies ascending, eps_i <= eps_{i+1}). Units: hbar = 1.
class Hamiltonian {
 public:
  explicit Hamiltonian(ComplexMatrix m);

  static Hamiltonian diagonal(std::span<const double> energies);
  /// omega |e><e| in the {e, g} qubit basis.
  static Hamiltonian qubit(double omega);

  const ComplexMatrix& matrix() const { return matrix_; }
  const Spectrum& spectrum() const { return spectrum_; }
  const RealVector& energies() const { return spectrum_.eigenvalues; }
  Eigen::Index dim() const { return matrix_.rows(); }

  double ground_energy() const { return spectrum_.eigenvalues(0); }
  double spread() const;
  /// Number of levels within `tol` of the ground energy.
  Eigen::Index ground_degeneracy(double tol = 1e-9) const;
  /// True when two adjacent energies are closer than `tol`.
  bool has_degeneracy(double tol = 1e-9) const;

  /// H_a (x) 1 + 1 (x) H_b
  static Hamiltonian local_sum(const Hamiltonian& a, const Hamiltonian& b);

 private:
  ComplexMatrix matrix_;
  Spectrum spectrum_;
};

}  // namespace qeuler
