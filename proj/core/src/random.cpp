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

#include "qeuler/random.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qeuler/error.hpp"

namespace qeuler {

ComplexMatrix random_ginibre(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  }
  return g;
}

ComplexMatrix random_unitary(Eigen::Index d, Rng& rng) {
  const ComplexMatrix g = random_ginibre(d, d, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < d; ++k) {
    const double mag = std::abs(r(k, k));
    if (mag > 0.0) q.col(k) *= r(k, k) / mag;
  }
  return q;
}

DensityMatrix random_density_matrix(Eigen::Index d, Rng& rng, std::optional<BipartiteDims> dims,
                                    Eigen::Index rank) {
  if (rank <= 0 || rank > d) rank = d;
  const ComplexMatrix g = random_ginibre(d, rank, rng);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix(hermitize(rho), dims);
}

DensityMatrix random_bipartite_state(BipartiteDims dims, Rng& rng, Eigen::Index rank) {
  return random_density_matrix(dims.total(), rng, dims, rank);
}

Povm random_povm(Eigen::Index d, Eigen::Index outcomes, Rng& rng) {
  if (outcomes < 1) throw ValidationError("random_povm: need at least one outcome");
  // An isometry V : C^d -> C^(d * outcomes) split into d x d blocks M_n.
  const ComplexMatrix g = random_ginibre(d * outcomes, d, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  const ComplexMatrix v = qr.householderQ() * ComplexMatrix::Identity(d * outcomes, d);
  std::vector<ComplexMatrix> ops;
  ops.reserve(static_cast<std::size_t>(outcomes));
  for (Eigen::Index n = 0; n < outcomes; ++n) ops.push_back(v.block(n * d, 0, d, d));
  return Povm(std::move(ops));
}

Povm random_rank_one_projective(Eigen::Index d, Rng& rng) {
  return Povm::from_basis(random_unitary(d, rng));
}

Povm random_projective(Eigen::Index d, Rng& rng) {
  const ComplexMatrix u = random_unitary(d, rng);
  std::uniform_int_distribution<Eigen::Index> pick(1, d);
  const Eigen::Index groups = pick(rng);
  // every group gets at least one basis vector
  std::vector<Eigen::Index> owner(static_cast<std::size_t>(d));
  std::iota(owner.begin(), owner.end(), 0);
  std::shuffle(owner.begin(), owner.end(), rng);
  for (auto& o : owner) o = o % groups;
  std::vector<ComplexMatrix> ops(static_cast<std::size_t>(groups), ComplexMatrix::Zero(d, d));
  for (Eigen::Index k = 0; k < d; ++k) {
    ops[static_cast<std::size_t>(owner[static_cast<std::size_t>(k)])] += projector(u.col(k));
  }
  return Povm(std::move(ops));
}

Povm random_local_projective(BipartiteDims dims, Rng& rng) {
  const Povm a = random_projective(dims.a, rng);
  const Povm b = random_projective(dims.b, rng);
  return local_povm(a, b);
}

ProductBasisPovm random_local_rank_one(BipartiteDims dims, Rng& rng) {
  const ComplexMatrix ua = random_unitary(dims.a, rng);
  const ComplexMatrix ub = random_unitary(dims.b, rng);
  const ComplexMatrix basis = kron(ua, ub);
  return {local_povm(Povm::from_basis(ua), Povm::from_basis(ub)), basis};
}

Povm random_local_povm(BipartiteDims dims, Rng& rng) {
  std::uniform_int_distribution<Eigen::Index> outcomes(1, 3);
  const Povm a = random_povm(dims.a, outcomes(rng), rng);
  const Povm b = random_povm(dims.b, outcomes(rng), rng);
  return local_povm(a, b);
}

BipartiteDims random_dims(Rng& rng) {
  static constexpr BipartiteDims kChoices[] = {{2, 2}, {2, 2}, {2, 3}, {3, 2}, {2, 4}, {4, 2}};
  std::uniform_int_distribution<std::size_t> pick(0, std::size(kChoices) - 1);
  return kChoices[pick(rng)];
}

}  // namespace qeuler
