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

#include "qeuler/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "qeuler/error.hpp"

namespace qeuler {

namespace {

// Boltzmann weights exp(-beta (eps_i - eps_0)) / Z in the ascending energy order.
RealVector boltzmann_populations(const Hamiltonian& h, double beta) {
  const RealVector& eps = h.energies();
  RealVector p(eps.size());
  if (std::isinf(beta)) {
    const Eigen::Index g = h.ground_degeneracy();
    p.setZero();
    p.head(g).setConstant(1.0 / static_cast<double>(g));
    return p;
  }
  for (Eigen::Index i = 0; i < eps.size(); ++i) p(i) = std::exp(-beta * (eps(i) - eps(0)));
  return p / p.sum();
}

double populations_entropy(const RealVector& p) {
  return shannon_entropy(std::span<const double>(p.data(), static_cast<std::size_t>(p.size())));
}

void require_same_dim(const DensityMatrix& rho, const Hamiltonian& h, const char* where) {
  if (rho.dim() != h.dim()) {
    throw DimensionError(std::string(where) + ": state and Hamiltonian dimensions differ");
  }
}

// Spectrum of rho, descending.
RealVector descending_eigenvalues(const DensityMatrix& rho) {
  return rho.spectrum().eigenvalues.reverse();
}

}  // namespace

DensityMatrix thermal_state(const Hamiltonian& h, double beta) {
  if (std::isnan(beta) || beta < 0.0) throw ValidationError("thermal_state: beta must be >= 0");
  const RealVector p = boltzmann_populations(h, beta);
  const ComplexMatrix& v = h.spectrum().eigenvectors;
  return DensityMatrix(hermitize(v * p.cast<Complex>().asDiagonal() * v.adjoint()));
}

double log_partition(const Hamiltonian& h, double beta) {
  const RealVector& eps = h.energies();
  double z = 0.0;
  for (Eigen::Index i = 0; i < eps.size(); ++i) z += std::exp(-beta * (eps(i) - eps(0)));
  return -beta * eps(0) + std::log(z);
}

double free_energy(const Hamiltonian& h, double beta) {
  if (!(beta > 0.0)) throw ValidationError("free_energy: beta must be > 0");
  if (std::isinf(beta)) return h.ground_energy();
  return -log_partition(h, beta) / beta;
}

double average_energy(const DensityMatrix& rho, const Hamiltonian& h) {
  require_same_dim(rho, h, "average_energy");
  return (h.matrix() * rho.matrix()).trace().real();
}

DensityMatrix passive_state(const DensityMatrix& rho, const Hamiltonian& h) {
  require_same_dim(rho, h, "passive_state");
  const RealVector r = descending_eigenvalues(rho);
  const ComplexMatrix& v = h.spectrum().eigenvectors;
  ComplexMatrix p = v * r.cast<Complex>().asDiagonal() * v.adjoint();
  p = hermitize(p);
  p /= p.trace().real();
  return DensityMatrix(std::move(p), rho.dims());
}

double ergotropy(const DensityMatrix& rho, const Hamiltonian& h) {
  require_same_dim(rho, h, "ergotropy");
  const RealVector r = descending_eigenvalues(rho);
  return average_energy(rho, h) - r.dot(h.energies());
}

double ergotropy_double_sum(const DensityMatrix& rho, const Hamiltonian& h) {
  require_same_dim(rho, h, "ergotropy_double_sum");
  const Eigen::Index d = rho.dim();
  const RealVector& eps = h.energies();
  const ComplexMatrix& e_vecs = h.spectrum().eigenvectors;
  const RealVector& r_asc = rho.spectrum().eigenvalues;
  const ComplexMatrix& r_vecs = rho.spectrum().eigenvectors;
  double sum = 0.0;
  for (Eigen::Index j = 0; j < d; ++j) {
    const Eigen::Index src = d - 1 - j;  // j-th largest population
    for (Eigen::Index i = 0; i < d; ++i) {
      const double overlap = std::norm(r_vecs.col(src).dot(e_vecs.col(i)));
      sum += r_asc(src) * eps(i) * (overlap - (i == j ? 1.0 : 0.0));
    }
  }
  return sum;
}

double entropy_matched_beta(const Hamiltonian& h, double entropy) {
  const double max_entropy = std::log(static_cast<double>(h.dim()));
  if (entropy > max_entropy + 1e-9) {
    std::ostringstream msg;
    msg << "entropy " << entropy << " exceeds ln d = " << max_entropy;
    throw ValidationError(msg.str());
  }
  if (entropy >= max_entropy - 1e-12 || h.spread() <= 0.0) return 0.0;
  const double floor_entropy = std::log(static_cast<double>(h.ground_degeneracy()));
  if (entropy <= floor_entropy + 1e-12) return kInfiniteBeta;

  const auto s = [&h](double beta) { return populations_entropy(boltzmann_populations(h, beta)); };
  double lo = 0.0;
  double hi = 50.0 * static_cast<double>(h.dim()) / h.spread();
  while (s(hi) > entropy) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e6) return kInfiniteBeta;
  }
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double sm = s(mid);
    if (std::abs(sm - entropy) <= 1e-13 || hi - lo <= 1e-15 * hi) return mid;
    if (sm > entropy) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double bound_ergotropy(const DensityMatrix& rho, const Hamiltonian& h) {
  require_same_dim(rho, h, "bound_ergotropy");
  const RealVector r = descending_eigenvalues(rho);
  const double passive_energy = r.dot(h.energies());
  const double beta_star = entropy_matched_beta(h, von_neumann_entropy(rho));
  const double thermal_energy = boltzmann_populations(h, beta_star).dot(h.energies());
  return passive_energy - thermal_energy;
}

double global_ergotropy(const DensityMatrix& rho, const Hamiltonian& h) {
  return ergotropy(rho, h) + bound_ergotropy(rho, h);
}

std::optional<double> local_inverse_temperature(const DensityMatrix& rho_local,
                                                const Hamiltonian& h) {
  require_same_dim(rho_local, h, "local_inverse_temperature");
  const ComplexMatrix& v = h.spectrum().eigenvectors;
  const ComplexMatrix in_energy_basis = v.adjoint() * rho_local.matrix() * v;
  const Eigen::Index d = h.dim();
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      if (i != j && std::abs(in_energy_basis(i, j)) >= 1e-8) return std::nullopt;
    }
  }
  RealVector log_p(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    const double p = in_energy_basis(i, i).real();
    if (!(p > 0.0)) return std::nullopt;
    log_p(i) = std::log(p);
  }
  const RealVector& eps = h.energies();
  const double mean_eps = eps.mean();
  const double mean_log = log_p.mean();
  const double var = (eps.array() - mean_eps).square().sum();
  double beta = 0.0;
  if (var > 1e-24) beta = -((eps.array() - mean_eps) * (log_p.array() - mean_log)).sum() / var;
  const double intercept = mean_log + beta * mean_eps;
  const double residual = (log_p.array() - (intercept - beta * eps.array())).abs().maxCoeff();
  if (!(residual < 1e-8)) return std::nullopt;
  return beta;
}

ThermoReport thermo_report(const DensityMatrix& rho_ab, const Hamiltonian& h_total,
                           const Hamiltonian& h_b, double beta) {
  const DensityMatrix rho_b = partial_trace(rho_ab, Subsystem::B);
  ThermoReport out;
  out.beta = beta;
  out.avg_energy = average_energy(rho_b, h_b);
  out.free_energy =
      beta > 0.0 ? free_energy(h_b, beta) : -std::numeric_limits<double>::infinity();
  out.beta_energy_gap = beta * out.avg_energy + log_partition(h_b, beta);
  out.ergotropy = ergotropy(rho_ab, h_total);
  out.bound_ergotropy = bound_ergotropy(rho_ab, h_total);
  out.global_ergotropy = out.ergotropy + out.bound_ergotropy;
  return out;
}

}  // namespace qeuler
