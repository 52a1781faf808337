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

#include <optional>

#include "qeuler/linalg.hpp"

namespace qeuler {

/// Dimensions of the two factors of H_A (x) H_B.
struct BipartiteDims {
  Eigen::Index a = 0;
  Eigen::Index b = 0;

  Eigen::Index total() const { return a * b; }
  friend bool operator==(const BipartiteDims&, const BipartiteDims&) = default;
};

enum class Subsystem { A, B };

const char* to_string(Subsystem s);

/// Tolerances shared by every density-matrix check.
namespace tolerance {
inline constexpr double kHermitian = 1e-10;
inline constexpr double kTrace = 1e-10;
/// Eigenvalues in [-kNegativeEigenvalue, 0) are round-off and clamp to zero.
inline constexpr double kNegativeEigenvalue = 1e-9;
/// Eigenvalues at or below this contribute nothing to entropies.
inline constexpr double kEntropyCutoff = 1e-12;
}  // namespace tolerance

/// A validated quantum state: Hermitian, unit trace, positive semi-definite.
///
/// Construction checks the invariants and caches the spectrum, so every
/// DensityMatrix in circulation is a physical state. Bipartite labels are
/// optional; operations that need them throw MissingDimsError.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix m, std::optional<BipartiteDims> dims = std::nullopt);

  static DensityMatrix pure(const ComplexVector& psi,
                            std::optional<BipartiteDims> dims = std::nullopt);
  static DensityMatrix maximally_mixed(Eigen::Index d,
                                       std::optional<BipartiteDims> dims = std::nullopt);
  /// rho_a (x) rho_b, labelled with the factor dimensions.
  static DensityMatrix product(const DensityMatrix& a, const DensityMatrix& b);

  const ComplexMatrix& matrix() const { return matrix_; }
  Eigen::Index dim() const { return matrix_.rows(); }
  const std::optional<BipartiteDims>& dims() const { return dims_; }
  bool is_bipartite() const { return dims_.has_value(); }
  /// Throws MissingDimsError when unlabelled.
  BipartiteDims require_dims() const;

  /// Eigenvalues ascending, round-off negatives clamped to 0.
  const Spectrum& spectrum() const { return spectrum_; }
  double min_eigenvalue() const { return min_eigenvalue_; }

  DensityMatrix with_dims(BipartiteDims dims) const;

  Complex operator()(Eigen::Index i, Eigen::Index j) const { return matrix_(i, j); }

 private:
  ComplexMatrix matrix_;
  std::optional<BipartiteDims> dims_;
  Spectrum spectrum_;
  double min_eigenvalue_ = 0.0;
};

/// -tr(rho ln rho) in nats.
double von_neumann_entropy(const DensityMatrix& rho);

/// Marginal on the kept factor.
DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep);

/// Partial trace of an arbitrary operator on H_A (x) H_B.
ComplexMatrix partial_trace(const ComplexMatrix& m, BipartiteDims dims, Subsystem keep);

struct Purification {
  ComplexVector state;           // system (x) ancilla, ancilla index fastest
  Eigen::Index ancilla_dim = 0;  // rank of the purified state
};

/// |psi> = sum_k sqrt(lambda_k) |k> (x) |k'> over eigenvalues above 1e-10.
Purification purify(const DensityMatrix& rho);

/// (1/2) sum |eigenvalues(a - b)|
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

/// S(rho_diag) - S(rho) with rho_diag the dephased state in the columns of
/// `basis`. Throws ValidationError when the basis is not orthonormal/complete.
double relative_entropy_of_coherence(const DensityMatrix& rho, const ComplexMatrix& basis);

}  // namespace qeuler
