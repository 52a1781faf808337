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

#include "qeuler/measurement.hpp"

#include <algorithm>
#include <sstream>

#include "qeuler/correlations.hpp"
#include "qeuler/error.hpp"

namespace qeuler {

Povm::Povm(std::vector<ComplexMatrix> operators) : operators_(std::move(operators)) {
  if (operators_.empty()) throw ValidationError("POVM needs at least one operator");
  const Eigen::Index d = operators_.front().rows();
  ComplexMatrix sum = ComplexMatrix::Zero(d, d);
  for (const auto& m : operators_) {
    if (m.rows() != d || m.cols() != d) throw DimensionError("POVM operators differ in shape");
    const ComplexMatrix effect = m.adjoint() * m;
    if (hermitian_eigenvalues(effect)(0) < -1e-10) {
      throw ValidationError("POVM effect is not positive semi-definite");
    }
    sum += effect;
  }
  const double defect = max_abs(sum - identity(d));
  if (!(defect <= 1e-9)) {
    std::ostringstream msg;
    msg << "POVM violates completeness (max deviation " << defect << ")";
    throw ValidationError(msg.str());
  }
}

Povm Povm::from_basis(const ComplexMatrix& basis) {
  if (basis.rows() != basis.cols() || !is_orthonormal(basis)) {
    throw ValidationError("from_basis: columns are not an orthonormal basis");
  }
  std::vector<ComplexMatrix> ops;
  ops.reserve(static_cast<std::size_t>(basis.cols()));
  for (Eigen::Index k = 0; k < basis.cols(); ++k) ops.push_back(projector(basis.col(k)));
  return Povm(std::move(ops));
}

Povm Povm::computational(Eigen::Index d) { return from_basis(identity(d)); }

Povm Povm::trivial(Eigen::Index d) { return Povm({identity(d)}); }

bool Povm::is_projective(double tol) const {
  for (const auto& m : operators_) {
    if (hermiticity_defect(m) > tol) return false;
    if (max_abs(m * m - m) > tol) return false;
  }
  return true;
}

namespace {

// Normalized branch state. Low-probability branches amplify round-off in
// M rho M^dagger, so their spectrum is clipped back onto the PSD cone.
ComplexMatrix normalized_branch(const ComplexMatrix& branch, double p) {
  ComplexMatrix state = branch / p;
  if (p < 1e-6) {
    const Spectrum s = hermitian_spectrum(state);
    const RealVector w = s.eigenvalues.cwiseMax(0.0);
    state = s.eigenvectors * (w / w.sum()).cast<Complex>().asDiagonal() * s.eigenvectors.adjoint();
    state = hermitize(state);
  }
  return state;
}

}  // namespace

MeasurementRecord measure(const DensityMatrix& rho, const Povm& povm) {
  if (povm.dim() != rho.dim()) throw DimensionError("measure: POVM and state dimensions differ");
  const auto dims = rho.dims();
  std::vector<double> probabilities;
  std::vector<std::optional<DensityMatrix>> post;
  ComplexMatrix output = ComplexMatrix::Zero(rho.dim(), rho.dim());
  for (const auto& m : povm.operators()) {
    const ComplexMatrix branch = hermitize(m * rho.matrix() * m.adjoint());
    const double p = branch.trace().real();
    output += branch;
    probabilities.push_back(std::max(p, 0.0));
    if (p >= kNullOutcome) {
      post.emplace_back(DensityMatrix(normalized_branch(branch, p), dims));
    } else {
      post.emplace_back(std::nullopt);
    }
  }
  output /= output.trace().real();
  MeasurementRecord record{rho, std::move(probabilities), std::move(post),
                           DensityMatrix(std::move(output), dims), povm.arbitrary_eigenbasis()};
  return record;
}

double information_gain(const MeasurementRecord& record) {
  return von_neumann_entropy(record.pre_state) -
         record.average([](const DensityMatrix& r) { return von_neumann_entropy(r); });
}

double entropy_cost(const MeasurementRecord& record) {
  return von_neumann_entropy(record.channel_output) - von_neumann_entropy(record.pre_state);
}

double holevo_of_measurement(const MeasurementRecord& record) {
  return von_neumann_entropy(record.channel_output) -
         record.average([](const DensityMatrix& r) { return von_neumann_entropy(r); });
}

Povm local_povm(const Povm& a, const Povm& b) {
  std::vector<ComplexMatrix> ops;
  ops.reserve(a.size() * b.size());
  for (const auto& ma : a.operators()) {
    for (const auto& mb : b.operators()) ops.push_back(kron(ma, mb));
  }
  return Povm(std::move(ops));
}

Povm projective_energy_povm(const Hamiltonian& h, Subsystem side, BipartiteDims dims) {
  const Eigen::Index side_dim = side == Subsystem::A ? dims.a : dims.b;
  if (h.dim() != side_dim) {
    throw DimensionError("projective_energy_povm: Hamiltonian does not match the measured side");
  }
  const ComplexMatrix& basis = h.spectrum().eigenvectors;
  std::vector<ComplexMatrix> ops;
  for (Eigen::Index n = 0; n < basis.cols(); ++n) {
    const ComplexMatrix p = projector(basis.col(n));
    ops.push_back(side == Subsystem::A ? kron(p, identity(dims.b)) : kron(identity(dims.a), p));
  }
  Povm povm(std::move(ops));
  if (h.has_degeneracy()) povm.mark_arbitrary_eigenbasis();
  return povm;
}

double local_information_gain(const MeasurementRecord& record, Subsystem side) {
  record.pre_state.require_dims();
  const auto local_entropy = [side](const DensityMatrix& r) {
    return von_neumann_entropy(partial_trace(r, side));
  };
  return local_entropy(record.pre_state) - record.average(local_entropy);
}

double correlations_lost(const MeasurementRecord& record) {
  record.pre_state.require_dims();
  return mutual_information(record.pre_state) -
         record.average([](const DensityMatrix& r) { return mutual_information(r); });
}

}  // namespace qeuler
