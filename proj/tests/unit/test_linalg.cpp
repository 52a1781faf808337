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
#include "qeuler/linalg.hpp"
#include "qeuler/random.hpp"

namespace qeuler {
namespace {

using namespace qeuler::testing;

TEST(Kron, IdentityTimesIdentity) {
  expect_matrix_near(kron(identity(2), identity(2)), identity(4), 0.0);
}

TEST(Kron, ProjectorProduct) {
  expect_matrix_near(kron(diag_matrix({1, 0}), diag_matrix({1, 0})), diag_matrix({1, 0, 0, 0}), 0.0);
}

TEST(Kron, SigmaXPairFlipsGroundToExcited) {
  const ComplexVector out = kron(pauli::x(), pauli::x()) * two_qubit::gg();
  expect_matrix_near(out, two_qubit::ee(), 0.0);
}

TEST(Kron, ShapesMultiply) {
  const ComplexMatrix m = kron(ComplexMatrix::Ones(2, 3), ComplexMatrix::Ones(3, 2));
  EXPECT_EQ(m.rows(), 6);
  EXPECT_EQ(m.cols(), 6);
}

TEST(Pauli, LadderConventions) {
  // sigma^- maps |e> to |g>
  expect_matrix_near(pauli::lower() * ket_e(), ket_g(), 0.0);
  expect_matrix_near(pauli::raise() * ket_g(), ket_e(), 0.0);
  expect_matrix_near(pauli::z(), diag_matrix({1, -1}), 0.0);
}

TEST(HermitianSpectrum, ReconstructsRandomMatrices) {
  Rng rng(3);
  for (Eigen::Index d : {2, 3, 4, 8, 16}) {
    const ComplexMatrix m = hermitize(random_ginibre(d, d, rng));
    const Spectrum s = hermitian_spectrum(m);
    const ComplexMatrix back =
        s.eigenvectors * s.eigenvalues.cast<Complex>().asDiagonal() * s.eigenvectors.adjoint();
    EXPECT_LE(max_abs(back - m), 1e-12);
    EXPECT_TRUE(is_orthonormal(s.eigenvectors, 1e-12));
    for (Eigen::Index i = 1; i < d; ++i) EXPECT_LE(s.eigenvalues(i - 1), s.eigenvalues(i));
  }
}

TEST(HermitianSpectrum, DegenerateSpectrumKeepsOrthonormalBasis) {
  const Spectrum s = hermitian_spectrum(diag_matrix({1, 1, 0, 1}));
  EXPECT_TRUE(is_orthonormal(s.eigenvectors, 1e-12));
  EXPECT_NEAR(s.eigenvalues(0), 0.0, 1e-15);
  EXPECT_NEAR(s.eigenvalues(3), 1.0, 1e-15);
}

TEST(PsdSqrt, SquaresBack) {
  Rng rng(5);
  const ComplexMatrix m = random_density_matrix(4, rng).matrix();
  const ComplexMatrix r = psd_sqrt(m);
  EXPECT_LE(max_abs(r * r - m), 1e-12);
  EXPECT_LE(hermiticity_defect(r), 1e-12);
}

TEST(ShannonEntropy, IgnoresZeros) {
  const std::vector<double> p{0.5, 0.0, 0.5};
  EXPECT_NEAR(shannon_entropy(p), kLn2, 1e-15);
}

}  // namespace
}  // namespace qeuler
