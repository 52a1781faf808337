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

#include <vector>

#include "helpers.hpp"
#include "qeuler/error.hpp"
#include "qeuler/hamiltonian.hpp"

namespace qeuler {
namespace {

using namespace qeuler::testing;

TEST(Hamiltonian, QubitIsExcitedProjector) {
  const Hamiltonian h = Hamiltonian::qubit(2.0);
  expect_matrix_near(h.matrix(), diag_matrix({2, 0}), 0.0);
  EXPECT_DOUBLE_EQ(h.ground_energy(), 0.0);
  EXPECT_DOUBLE_EQ(h.spread(), 2.0);
}

TEST(Hamiltonian, LocalSumOfQubits) {
  const Hamiltonian h = Hamiltonian::local_sum(Hamiltonian::qubit(1.0), Hamiltonian::qubit(1.0));
  expect_matrix_near(h.matrix(), diag_matrix({2, 1, 1, 0}), 0.0);
  EXPECT_TRUE(h.has_degeneracy());
  EXPECT_EQ(h.ground_degeneracy(), 1);
}

TEST(Hamiltonian, DegenerateGround) {
  const std::vector<double> e{0.0, 0.0, 1.0};
  EXPECT_EQ(Hamiltonian::diagonal(e).ground_degeneracy(), 2);
}

TEST(Hamiltonian, RejectsNonHermitian) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 1) = 1.0;
  EXPECT_THROW(Hamiltonian{m}, ValidationError);
}

}  // namespace
}  // namespace qeuler
