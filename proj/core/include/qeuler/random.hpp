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

#include <cstdint>
#include <random>
#include <vector>

#include "qeuler/density_matrix.hpp"
#include "qeuler/measurement.hpp"

namespace qeuler {

using Rng = std::mt19937_64;

/// i.i.d. standard complex Gaussian entries.
ComplexMatrix random_ginibre(Eigen::Index rows, Eigen::Index cols, Rng& rng);

/// Haar-random unitary (QR of a Ginibre matrix with the phase of R removed).
ComplexMatrix random_unitary(Eigen::Index d, Rng& rng);

/// G G^dagger / tr with G a d x rank Ginibre matrix (induced measure).
DensityMatrix random_density_matrix(Eigen::Index d, Rng& rng,
                                    std::optional<BipartiteDims> dims = std::nullopt,
                                    Eigen::Index rank = 0);

DensityMatrix random_bipartite_state(BipartiteDims dims, Rng& rng, Eigen::Index rank = 0);

/// General efficient POVM with `outcomes` operators cut from a random isometry.
Povm random_povm(Eigen::Index d, Eigen::Index outcomes, Rng& rng);

/// Rank-one projectors onto a Haar-random basis.
Povm random_rank_one_projective(Eigen::Index d, Rng& rng);

/// Projectors onto random groupings of a Haar-random basis (ranks may exceed one).
Povm random_projective(Eigen::Index d, Rng& rng);

/// Product of independent random projective measurements on A and B.
Povm random_local_projective(BipartiteDims dims, Rng& rng);

/// Product of rank-one projective measurements on A and B; also returns the
/// product basis.
struct ProductBasisPovm {
  Povm povm;
  ComplexMatrix basis;
};
ProductBasisPovm random_local_rank_one(BipartiteDims dims, Rng& rng);

/// Product of independent general POVMs on A and B.
Povm random_local_povm(BipartiteDims dims, Rng& rng);

/// Dimension pairs exercised by the randomized suites (d_A d_B <= 8).
BipartiteDims random_dims(Rng& rng);

}  // namespace qeuler
