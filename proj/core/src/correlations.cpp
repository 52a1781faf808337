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

#include "qeuler/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "qeuler/error.hpp"

namespace qeuler {

namespace {

// Entropy of a positive operator after normalizing it to unit trace.
double normalized_entropy(const ComplexMatrix& m, double trace) {
  if (m.rows() == 2) {
    const double a = m(0, 0).real() / trace;
    const double d = m(1, 1).real() / trace;
    const double b = std::abs(m(0, 1)) / trace;
    const double disc = std::sqrt((a - d) * (a - d) + 4.0 * b * b);
    const double p[] = {0.5 * (a + d + disc), 0.5 * (a + d - disc)};
    return shannon_entropy(p);
  }
  const RealVector w = hermitian_eigenvalues(m / trace);
  return shannon_entropy(std::span<const double>(w.data(), static_cast<std::size_t>(w.size())));
}

ComplexVector bloch_vector(BlochDirection dir, bool orthogonal) {
  const double c = std::cos(0.5 * dir.theta);
  const double s = std::sin(0.5 * dir.theta);
  const Complex phase = std::polar(1.0, dir.phi);
  ComplexVector v(2);
  if (!orthogonal) {
    v << c, phase * s;
  } else {
    v << -std::conj(phase) * s, c;
  }
  return v;
}

// sum_k p_k S(rho_B^k) for the projective measurement along `dir` on qubit A.
double conditional_entropy_b(const ComplexMatrix& m, Eigen::Index db, BlochDirection dir) {
  double average = 0.0;
  for (bool orth : {false, true}) {
    const ComplexVector n = bloch_vector(dir, orth);
    // <n|_A rho |n>_A, unnormalized
    ComplexMatrix post = ComplexMatrix::Zero(db, db);
    for (Eigen::Index i = 0; i < 2; ++i) {
      for (Eigen::Index j = 0; j < 2; ++j) {
        post += std::conj(n(i)) * n(j) * m.block(i * db, j * db, db, db);
      }
    }
    const double p = post.trace().real();
    if (p >= kNullOutcome) average += p * normalized_entropy(hermitize(post), p);
  }
  return average;
}

void require_qubit_a(const DensityMatrix& rho) {
  if (rho.require_dims().a != 2) {
    throw DimensionError("optimal measurement on A is implemented for a qubit A (d_A = 2)");
  }
}

}  // namespace

double mutual_information(const DensityMatrix& rho) {
  rho.require_dims();
  return von_neumann_entropy(partial_trace(rho, Subsystem::A)) +
         von_neumann_entropy(partial_trace(rho, Subsystem::B)) - von_neumann_entropy(rho);
}

double chi_from_local_measurement(const DensityMatrix& rho, const Povm& povm_on_b) {
  const BipartiteDims dims = rho.require_dims();
  if (povm_on_b.dim() != rho.dim()) {
    throw DimensionError("chi_from_local_measurement: POVM and state dimensions differ");
  }
  for (const auto& m : povm_on_b.operators()) {
    const ComplexMatrix on_b = partial_trace(m, dims, Subsystem::B) / static_cast<double>(dims.a);
    if (max_abs(m - kron(identity(dims.a), on_b)) > 1e-9) {
      throw ValidationError("chi_from_local_measurement: POVM does not act as identity on A");
    }
  }
  const MeasurementRecord record = measure(rho, povm_on_b);
  const auto entropy_a = [](const DensityMatrix& r) {
    return von_neumann_entropy(partial_trace(r, Subsystem::A));
  };
  return entropy_a(rho) - record.average(entropy_a);
}

Povm qubit_projective_povm(BlochDirection dir, Eigen::Index d_b) {
  return Povm({kron(projector(bloch_vector(dir, false)), identity(d_b)),
               kron(projector(bloch_vector(dir, true)), identity(d_b))});
}

double chi_a_at(const DensityMatrix& rho, BlochDirection dir) {
  require_qubit_a(rho);
  return von_neumann_entropy(partial_trace(rho, Subsystem::B)) -
         conditional_entropy_b(rho.matrix(), rho.require_dims().b, dir);
}

ChiOptimum optimize_chi_a(const DensityMatrix& rho, const GridSpec& grid) {
  require_qubit_a(rho);
  if (grid.theta_points < 1 || grid.phi_points < 1 || !(grid.resolution > 0.0)) {
    throw ValidationError("optimize_chi_a: invalid grid");
  }
  const double s_b = von_neumann_entropy(partial_trace(rho, Subsystem::B));
  const Eigen::Index db = rho.require_dims().b;
  const auto objective = [&](BlochDirection dir) {
    return s_b - conditional_entropy_b(rho.matrix(), db, dir);
  };
  const double pi = std::numbers::pi;
  const double d_theta = pi / grid.theta_points;
  const double d_phi = 2.0 * pi / grid.phi_points;

  std::vector<ChiOptimum> scanned;
  scanned.reserve(static_cast<std::size_t>(grid.theta_points) *
                  static_cast<std::size_t>(grid.phi_points));
  for (int i = 0; i < grid.theta_points; ++i) {
    // theta = 0 is a single point on the sphere
    const int phis = i == 0 ? 1 : grid.phi_points;
    for (int j = 0; j < phis; ++j) {
      const BlochDirection dir{i * d_theta, j * d_phi};
      scanned.push_back({objective(dir), dir});
    }
  }
  const std::size_t starts =
      std::min<std::size_t>(scanned.size(), static_cast<std::size_t>(std::max(grid.starts, 1)));
  std::partial_sort(scanned.begin(), scanned.begin() + static_cast<std::ptrdiff_t>(starts),
                    scanned.end(), [](const ChiOptimum& x, const ChiOptimum& y) {
                      return x.value > y.value;
                    });

  ChiOptimum best = scanned.front();
  for (std::size_t s = 0; s < starts; ++s) {
    ChiOptimum cur = scanned[s];
    double step_theta = d_theta;
    double step_phi = d_phi;
    for (int iter = 0; iter < 100000 && std::max(step_theta, step_phi) >= grid.resolution; ++iter) {
      ChiOptimum candidate = cur;
      const BlochDirection moves[] = {{cur.direction.theta + step_theta, cur.direction.phi},
                                      {cur.direction.theta - step_theta, cur.direction.phi},
                                      {cur.direction.theta, cur.direction.phi + step_phi},
                                      {cur.direction.theta, cur.direction.phi - step_phi}};
      for (const auto& dir : moves) {
        const double v = objective(dir);
        if (v > candidate.value) candidate = {v, dir};
      }
      if (candidate.value > cur.value) {
        cur = candidate;
      } else {
        step_theta *= 0.5;
        step_phi *= 0.5;
      }
    }
    if (cur.value > best.value) best = cur;
  }
  return best;
}

double chi_a_max(const DensityMatrix& rho, const GridSpec& grid) {
  return optimize_chi_a(rho, grid).value;
}

double discord_a(const DensityMatrix& rho, const GridSpec& grid) {
  const double d = mutual_information(rho) - chi_a_max(rho, grid);
  return (d < 0.0 && d >= -1e-6) ? 0.0 : d;
}

double eof_via_koashi_winter(const DensityMatrix& rho, const GridSpec& grid) {
  const double e = von_neumann_entropy(partial_trace(rho, Subsystem::B)) - chi_a_max(rho, grid);
  return (e < 0.0 && e >= -1e-6) ? 0.0 : e;
}

double concurrence(const DensityMatrix& rho) {
  if (rho.dim() != 4) throw DimensionError("concurrence needs a two-qubit (4x4) state");
  const ComplexMatrix yy = kron(pauli::y(), pauli::y());
  const ComplexMatrix flipped = yy * rho.matrix().conjugate() * yy;
  const ComplexMatrix root = psd_sqrt(rho.matrix());
  const RealVector w = hermitian_eigenvalues(root * flipped * root);
  // ascending; largest last
  std::vector<double> l(4);
  for (int k = 0; k < 4; ++k) l[static_cast<std::size_t>(k)] = std::sqrt(std::max(w(3 - k), 0.0));
  return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

double wootters_eof(const DensityMatrix& rho) {
  const double c = concurrence(rho);
  const double x = 0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - c * c)));
  const double p[] = {x, 1.0 - x};
  return shannon_entropy(p);
}

DensityMatrix purifier_marginal_bc(const DensityMatrix& rho) {
  const BipartiteDims dims = rho.require_dims();
  const Purification pure = purify(rho);
  const BipartiteDims a_vs_bc{dims.a, dims.b * pure.ancilla_dim};
  const ComplexMatrix bc = partial_trace(projector(pure.state), a_vs_bc, Subsystem::B);
  return DensityMatrix(hermitize(bc), BipartiteDims{dims.b, pure.ancilla_dim});
}

CorrelationBreakdown breakdown(const DensityMatrix& rho, const Hamiltonian& h_b,
                               const GridSpec& grid) {
  const BipartiteDims dims = rho.require_dims();
  const Povm energy_b = projective_energy_povm(h_b, Subsystem::B, dims);
  const MeasurementRecord record = measure(rho, energy_b);

  CorrelationBreakdown out;
  out.information_gain = information_gain(record);
  out.mutual_information = mutual_information(rho);
  out.chi_b = chi_from_local_measurement(rho, energy_b);
  out.chi_a_max = chi_a_max(rho, grid);
  const double s_b = von_neumann_entropy(partial_trace(rho, Subsystem::B));
  out.discord_a = out.mutual_information - out.chi_a_max;
  if (out.discord_a < 0.0 && out.discord_a >= -1e-6) out.discord_a = 0.0;
  out.eof_bc = s_b - out.chi_a_max;
  if (out.eof_bc < 0.0 && out.eof_bc >= -1e-6) out.eof_bc = 0.0;
  out.quantum_gain = out.eof_bc - out.discord_a;
  out.decomposition_residual = std::abs(out.information_gain - (out.chi_b + out.quantum_gain));
  if (out.decomposition_residual > kOptimizationTolerance) {
    std::ostringstream msg;
    msg << "breakdown: information gain " << out.information_gain
        << " differs from chi_B + quantum gain by " << out.decomposition_residual;
    throw ValidationError(msg.str());
  }
  return out;
}

}  // namespace qeuler
