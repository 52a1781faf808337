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

#include <complex>
#include <span>

#include <Eigen/Dense>

namespace qeuler {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Eigen-decomposition of a Hermitian operator, eigenvalues ascending.
struct Spectrum {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;  // column k belongs to eigenvalues[k]
};

/// Hermitian eigensolver. Reconstruction error and column orthonormality are
/// at machine precision for the dimensions used here (d <= 16).
Spectrum hermitian_spectrum(const ComplexMatrix& m);

/// Eigenvalues only, ascending.
RealVector hermitian_eigenvalues(const ComplexMatrix& m);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix identity(Eigen::Index d);

/// |v><v|
ComplexMatrix projector(const ComplexVector& v);

ComplexMatrix dagger(const ComplexMatrix& m);

/// (m + m^dagger) / 2
ComplexMatrix hermitize(const ComplexMatrix& m);

/// max_ij |m_ij|
double max_abs(const ComplexMatrix& m);

/// max_ij |m_ij - conj(m_ji)|
double hermiticity_defect(const ComplexMatrix& m);

/// Principal square root of a positive semi-definite Hermitian matrix.
/// Negative round-off eigenvalues are clamped to zero.
ComplexMatrix psd_sqrt(const ComplexMatrix& m);

/// True when the columns of `basis` form an orthonormal set to `tol`.
bool is_orthonormal(const ComplexMatrix& basis, double tol = 1e-9);

/// -sum p ln p over entries above 1e-12 (nats).
double shannon_entropy(std::span<const double> p);

/// Single-qubit Pauli matrices and ladder operators in the {e, g} basis
/// (index 0 = excited, index 1 = ground).
namespace pauli {
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
/// sigma^- = |g><e|
ComplexMatrix lower();
/// sigma^+ = |e><g|
ComplexMatrix raise();
}  // namespace pauli

}  // namespace qeuler
