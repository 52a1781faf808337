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

#include "qeuler/linalg.hpp"

#include <cmath>
#include <limits>

#include "qeuler/error.hpp"

namespace qeuler {

Spectrum hermitian_spectrum(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("hermitian_spectrum: matrix is not square");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitize(m));
  if (solver.info() != Eigen::Success) throw ValidationError("hermitian_spectrum: no convergence");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

RealVector hermitian_eigenvalues(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("hermitian_eigenvalues: matrix is not square");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitize(m), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw ValidationError("hermitian_eigenvalues: no convergence");
  return solver.eigenvalues();
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix identity(Eigen::Index d) { return ComplexMatrix::Identity(d, d); }

ComplexMatrix projector(const ComplexVector& v) { return v * v.adjoint(); }

ComplexMatrix dagger(const ComplexMatrix& m) { return m.adjoint(); }

ComplexMatrix hermitize(const ComplexMatrix& m) { return 0.5 * (m + m.adjoint()); }

double max_abs(const ComplexMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double hermiticity_defect(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return max_abs(m - m.adjoint());
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
  const Spectrum s = hermitian_spectrum(m);
  const RealVector roots = s.eigenvalues.cwiseMax(0.0).cwiseSqrt();
  return s.eigenvectors * roots.cast<Complex>().asDiagonal() * s.eigenvectors.adjoint();
}

bool is_orthonormal(const ComplexMatrix& basis, double tol) {
  const ComplexMatrix gram = basis.adjoint() * basis;
  return max_abs(gram - identity(basis.cols())) <= tol;
}

double shannon_entropy(std::span<const double> p) {
  double s = 0.0;
  for (double x : p) {
    if (x > 1e-12) s -= x * std::log(x);
  }
  return s;
}

namespace pauli {

ComplexMatrix x() {
  ComplexMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

ComplexMatrix y() {
  ComplexMatrix m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}

ComplexMatrix z() {
  ComplexMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

ComplexMatrix lower() {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(1, 0) = 1.0;
  return m;
}

ComplexMatrix raise() {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 1) = 1.0;
  return m;
}

}  // namespace pauli

}  // namespace qeuler
