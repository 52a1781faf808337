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

#include <cmath>

#include <gtest/gtest.h>

#include "qeuler/density_matrix.hpp"
#include "qeuler/dissipation.hpp"
#include "qeuler/hamiltonian.hpp"
#include "qeuler/linalg.hpp"

namespace qeuler::testing {

inline const double kLn2 = std::log(2.0);

// Single qubit in the {e, g} ordering.
inline ComplexVector ket_e() { return ComplexVector::Unit(2, 0); }
inline ComplexVector ket_g() { return ComplexVector::Unit(2, 1); }
inline ComplexVector ket_plus() { return (ket_e() + ket_g()) / std::sqrt(2.0); }

inline DensityMatrix pure2(const ComplexVector& psi) { return DensityMatrix::pure(psi, kTwoQubits); }

inline DensityMatrix phi_plus() { return pure2(two_qubit::phi_plus()); }

inline ComplexMatrix diag_matrix(std::initializer_list<double> p) {
  RealVector v(static_cast<Eigen::Index>(p.size()));
  Eigen::Index i = 0;
  for (double x : p) v(i++) = x;
  return v.cast<Complex>().asDiagonal().toDenseMatrix();
}

inline DensityMatrix diag_state(std::initializer_list<double> p) { return DensityMatrix(diag_matrix(p)); }

// (1 - c)|psi-><psi-| + c|gg><gg|
inline DensityMatrix singlet_ground_mixture(double c) {
  return DensityMatrix((1.0 - c) * projector(two_qubit::psi_minus()) + c * projector(two_qubit::gg()),
                       kTwoQubits);
}

inline void expect_matrix_near(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  ASSERT_EQ(a.rows(), b.rows());
  ASSERT_EQ(a.cols(), b.cols());
  EXPECT_LE(max_abs(a - b), tol) << "actual:\n" << a << "\nexpected:\n" << b;
}

}  // namespace qeuler::testing
