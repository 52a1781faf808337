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

#include "qeuler/hamiltonian.hpp"

#include <sstream>

#include "qeuler/error.hpp"

namespace qeuler {

Hamiltonian::Hamiltonian(ComplexMatrix m) : matrix_(std::move(m)) {
  if (matrix_.rows() == 0 || matrix_.rows() != matrix_.cols()) {
    throw DimensionError("Hamiltonian must be square and non-empty");
  }
  const double herm = hermiticity_defect(matrix_);
  if (!(herm <= 1e-10)) {
    std::ostringstream msg;
    msg << "Hamiltonian is not Hermitian (defect " << herm << ")";
    throw ValidationError(msg.str());
  }
  spectrum_ = hermitian_spectrum(matrix_);
}

Hamiltonian Hamiltonian::diagonal(std::span<const double> energies) {
  ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(energies.size()),
                                        static_cast<Eigen::Index>(energies.size()));
  for (std::size_t i = 0; i < energies.size(); ++i) {
    m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = energies[i];
  }
  return Hamiltonian(std::move(m));
}

Hamiltonian Hamiltonian::qubit(double omega) {
  const double levels[] = {omega, 0.0};
  return diagonal(levels);
}

double Hamiltonian::spread() const {
  return spectrum_.eigenvalues(dim() - 1) - spectrum_.eigenvalues(0);
}

Eigen::Index Hamiltonian::ground_degeneracy(double tol) const {
  Eigen::Index g = 1;
  while (g < dim() && spectrum_.eigenvalues(g) - spectrum_.eigenvalues(0) <= tol) ++g;
  return g;
}

bool Hamiltonian::has_degeneracy(double tol) const {
  for (Eigen::Index i = 1; i < dim(); ++i) {
    if (spectrum_.eigenvalues(i) - spectrum_.eigenvalues(i - 1) <= tol) return true;
  }
  return false;
}

Hamiltonian Hamiltonian::local_sum(const Hamiltonian& a, const Hamiltonian& b) {
  return Hamiltonian(kron(a.matrix(), identity(b.dim())) + kron(identity(a.dim()), b.matrix()));
}

}  // namespace qeuler
