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

#include "qeuler/density_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qeuler/error.hpp"

namespace qeuler {

const char* to_string(Subsystem s) { return s == Subsystem::A ? "A" : "B"; }

DensityMatrix::DensityMatrix(ComplexMatrix m, std::optional<BipartiteDims> dims)
    : matrix_(std::move(m)), dims_(dims) {
  if (matrix_.rows() == 0 || matrix_.rows() != matrix_.cols()) {
    throw DimensionError("density matrix must be square and non-empty");
  }
  if (dims_ && (dims_->a <= 0 || dims_->b <= 0 || dims_->total() != matrix_.rows())) {
    std::ostringstream msg;
    msg << "bipartite dims " << dims_->a << "x" << dims_->b << " do not match dimension "
        << matrix_.rows();
    throw DimensionError(msg.str());
  }
  const double herm = hermiticity_defect(matrix_);
  if (!(herm <= tolerance::kHermitian)) {
    std::ostringstream msg;
    msg << "density matrix is not Hermitian (defect " << herm << ")";
    throw ValidationError(msg.str());
  }
  const double tr = matrix_.trace().real();
  if (!(std::abs(tr - 1.0) <= tolerance::kTrace)) {
    std::ostringstream msg;
    msg << "density matrix trace " << tr << " differs from 1";
    throw ValidationError(msg.str());
  }
  spectrum_ = hermitian_spectrum(matrix_);
  min_eigenvalue_ = spectrum_.eigenvalues(0);
  if (min_eigenvalue_ < -tolerance::kNegativeEigenvalue) {
    std::ostringstream msg;
    msg << "density matrix has negative eigenvalue " << min_eigenvalue_;
    throw ValidationError(msg.str());
  }
  spectrum_.eigenvalues = spectrum_.eigenvalues.cwiseMax(0.0);
}

DensityMatrix DensityMatrix::pure(const ComplexVector& psi, std::optional<BipartiteDims> dims) {
  const double norm = psi.norm();
  if (norm == 0.0) throw ValidationError("pure state from the zero vector");
  const ComplexVector unit = psi / norm;
  return DensityMatrix(projector(unit), dims);
}

DensityMatrix DensityMatrix::maximally_mixed(Eigen::Index d, std::optional<BipartiteDims> dims) {
  return DensityMatrix(identity(d) / static_cast<double>(d), dims);
}

DensityMatrix DensityMatrix::product(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix(kron(a.matrix(), b.matrix()), BipartiteDims{a.dim(), b.dim()});
}

BipartiteDims DensityMatrix::require_dims() const {
  if (!dims_) throw MissingDimsError("operation needs bipartite dims (d_A, d_B)");
  return *dims_;
}

DensityMatrix DensityMatrix::with_dims(BipartiteDims dims) const {
  DensityMatrix copy = *this;
  if (dims.total() != dim()) throw DimensionError("with_dims: dimension mismatch");
  copy.dims_ = dims;
  return copy;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  const RealVector& w = rho.spectrum().eigenvalues;
  return shannon_entropy(std::span<const double>(w.data(), static_cast<std::size_t>(w.size())));
}

ComplexMatrix partial_trace(const ComplexMatrix& m, BipartiteDims dims, Subsystem keep) {
  if (m.rows() != dims.total() || m.cols() != dims.total()) {
    throw DimensionError("partial_trace: operator does not match dims");
  }
  const Eigen::Index da = dims.a;
  const Eigen::Index db = dims.b;
  if (keep == Subsystem::A) {
    ComplexMatrix out = ComplexMatrix::Zero(da, da);
    for (Eigen::Index i = 0; i < da; ++i)
      for (Eigen::Index j = 0; j < da; ++j)
        for (Eigen::Index k = 0; k < db; ++k) out(i, j) += m(i * db + k, j * db + k);
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(db, db);
  for (Eigen::Index i = 0; i < db; ++i)
    for (Eigen::Index j = 0; j < db; ++j)
      for (Eigen::Index k = 0; k < da; ++k) out(i, j) += m(k * db + i, k * db + j);
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep) {
  const BipartiteDims dims = rho.require_dims();
  return DensityMatrix(hermitize(partial_trace(rho.matrix(), dims, keep)));
}

Purification purify(const DensityMatrix& rho) {
  const Spectrum& s = rho.spectrum();
  std::vector<Eigen::Index> support;
  for (Eigen::Index k = s.eigenvalues.size() - 1; k >= 0; --k) {
    if (s.eigenvalues(k) > 1e-10) support.push_back(k);
  }
  const auto rank = static_cast<Eigen::Index>(support.size());
  Purification out;
  out.ancilla_dim = rank;
  out.state = ComplexVector::Zero(rho.dim() * rank);
  for (Eigen::Index r = 0; r < rank; ++r) {
    const Eigen::Index k = support[static_cast<std::size_t>(r)];
    const double amp = std::sqrt(s.eigenvalues(k));
    for (Eigen::Index i = 0; i < rho.dim(); ++i) {
      out.state(i * rank + r) += amp * s.eigenvectors(i, k);
    }
  }
  out.state /= out.state.norm();
  return out;
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionError("trace_distance: dimension mismatch");
  const RealVector w = hermitian_eigenvalues(a.matrix() - b.matrix());
  return 0.5 * w.cwiseAbs().sum();
}

double relative_entropy_of_coherence(const DensityMatrix& rho, const ComplexMatrix& basis) {
  if (basis.rows() != rho.dim() || basis.cols() != rho.dim()) {
    throw ValidationError("coherence basis must be complete for the state dimension");
  }
  if (!is_orthonormal(basis)) throw ValidationError("coherence basis is not orthonormal");
  std::vector<double> populations(static_cast<std::size_t>(rho.dim()));
  for (Eigen::Index k = 0; k < rho.dim(); ++k) {
    const ComplexVector v = basis.col(k);
    populations[static_cast<std::size_t>(k)] =
        std::max(0.0, (v.adjoint() * rho.matrix() * v)(0, 0).real());
  }
  return shannon_entropy(populations) - von_neumann_entropy(rho);
}

}  // namespace qeuler
