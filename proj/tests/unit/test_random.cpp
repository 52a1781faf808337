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

#include "helpers.hpp"
#include "qeuler/random.hpp"
#include "qeuler/relations.hpp"

namespace qeuler {
namespace {

using namespace qeuler::testing;

TEST(Random, SameSeedSameState) {
  Rng a(77), b(77);
  expect_matrix_near(random_density_matrix(4, a).matrix(), random_density_matrix(4, b).matrix(), 0.0);
}

TEST(Random, UnitaryIsUnitary) {
  Rng rng(1);
  const ComplexMatrix u = random_unitary(5, rng);
  EXPECT_LE(max_abs(u.adjoint() * u - identity(5)), 1e-13);
}

TEST(Random, RankIsRespected) {
  Rng rng(2);
  const DensityMatrix rho = random_density_matrix(4, rng, kTwoQubits, 2);
  const RealVector w = rho.spectrum().eigenvalues;
  EXPECT_NEAR(w(0), 0.0, 1e-12);
  EXPECT_NEAR(w(1), 0.0, 1e-12);
  EXPECT_GT(w(2), 1e-6);
}

TEST(Random, PovmsAreComplete) {
  Rng rng(3);
  for (Eigen::Index k : {1, 2, 5}) {
    const Povm p = random_povm(4, k, rng);
    EXPECT_EQ(p.size(), static_cast<std::size_t>(k));
  }
  EXPECT_TRUE(random_projective(6, rng).is_projective());
  EXPECT_EQ(random_rank_one_projective(3, rng).size(), 3u);
}

TEST(Random, LocalMeasurementsAreLocal) {
  Rng rng(4);
  const BipartiteDims dims{2, 3};
  EXPECT_TRUE(is_local_povm(random_local_projective(dims, rng), dims));
  EXPECT_TRUE(is_local_povm(random_local_povm(dims, rng), dims));
  const ProductBasisPovm m = random_local_rank_one(dims, rng);
  EXPECT_TRUE(is_orthonormal(m.basis, 1e-12));
  EXPECT_EQ(m.povm.size(), 6u);
}

}  // namespace
}  // namespace qeuler
