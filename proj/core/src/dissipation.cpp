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

#include "qeuler/dissipation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qeuler/error.hpp"

namespace qeuler {

namespace {

struct JumpOperators {
  ComplexMatrix lower[2];
  ComplexMatrix raise[2];
};

const JumpOperators& jumps() {
  static const JumpOperators ops = [] {
    JumpOperators j;
    j.lower[0] = kron(pauli::lower(), identity(2));
    j.lower[1] = kron(identity(2), pauli::lower());
    j.raise[0] = j.lower[0].adjoint();
    j.raise[1] = j.lower[1].adjoint();
    return j;
  }();
  return ops;
}

ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b + b * a;
}

// Column-major vectorization of the generator: vec(L(rho)) = L vec(rho).
ComplexMatrix liouvillian(const ModelParams& params) {
  ComplexMatrix l(16, 16);
  for (Eigen::Index col = 0; col < 16; ++col) {
    ComplexMatrix basis = ComplexMatrix::Zero(4, 4);
    basis(col % 4, col / 4) = 1.0;
    const ComplexMatrix image = lindblad_rhs(basis, params);
    l.col(col) = Eigen::Map<const ComplexVector>(image.data(), 16);
  }
  return l;
}

}  // namespace

ModelParams ModelParams::collective(double omega, double beta_e, double rate, double f) {
  ModelParams p;
  p.omega = omega;
  p.beta_e = beta_e;
  p.f = f;
  p.gamma = Eigen::Matrix2d::Constant(rate);
  return p;
}

double ModelParams::nbar() const { return 1.0 / std::expm1(beta_e * omega); }

void ModelParams::validate() const {
  if (!(omega > 0.0)) throw ValidationError("model: omega must be > 0");
  if (!(beta_e > 0.0)) throw ValidationError("model: beta_e must be > 0");
  if (!std::isfinite(f)) throw ValidationError("model: f must be finite");
  if (std::abs(gamma(0, 1) - gamma(1, 0)) > 1e-12) {
    throw ValidationError("model: gamma must be symmetric");
  }
  if ((gamma.array() < 0.0).any()) throw ValidationError("model: gamma entries must be >= 0");
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> solver(gamma, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues()(0) < -1e-12) {
    throw ValidationError("model: gamma must be positive semi-definite");
  }
}

Hamiltonian build_hamiltonian(const ModelParams& params) {
  const JumpOperators& j = jumps();
  const ComplexMatrix h0 = params.omega * (j.raise[0] * j.lower[0] + j.raise[1] * j.lower[1]);
  const ComplexMatrix hd = params.f * (j.raise[0] * j.lower[1] + j.raise[1] * j.lower[0]);
  return Hamiltonian(h0 + hd);
}

Hamiltonian qubit_hamiltonian(const ModelParams& params) { return Hamiltonian::qubit(params.omega); }

Hamiltonian self_hamiltonian(const ModelParams& params) {
  const Hamiltonian q = qubit_hamiltonian(params);
  return Hamiltonian::local_sum(q, q);
}

ComplexMatrix lindblad_rhs(const ComplexMatrix& rho, const ModelParams& params) {
  if (rho.rows() != 4 || rho.cols() != 4) throw DimensionError("lindblad_rhs: expected 4x4");
  const JumpOperators& j = jumps();
  const ComplexMatrix h = build_hamiltonian(params).matrix();
  const Complex minus_i(0.0, -1.0);
  ComplexMatrix out = minus_i * (h * rho - rho * h);
  const double nbar = params.nbar();
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      const double g = params.gamma(a, b);
      if (g == 0.0) continue;
      out += g * (nbar + 1.0) *
             (j.lower[b] * rho * j.raise[a] - 0.5 * anticommutator(j.raise[a] * j.lower[b], rho));
      out += g * nbar *
             (j.raise[b] * rho * j.lower[a] - 0.5 * anticommutator(j.lower[a] * j.raise[b], rho));
    }
  }
  return out;
}

ComplexMatrix lindblad_rhs(const DensityMatrix& rho, const ModelParams& params) {
  return lindblad_rhs(rho.matrix(), params);
}

namespace two_qubit {

namespace {
ComplexVector basis_vector(Eigen::Index k) {
  ComplexVector v = ComplexVector::Zero(4);
  v(k) = 1.0;
  return v;
}
}  // namespace

ComplexVector ee() { return basis_vector(0); }
ComplexVector eg() { return basis_vector(1); }
ComplexVector ge() { return basis_vector(2); }
ComplexVector gg() { return basis_vector(3); }
ComplexVector psi_plus() { return (ge() + eg()) / std::sqrt(2.0); }
ComplexVector psi_minus() { return (ge() - eg()) / std::sqrt(2.0); }
ComplexVector phi_plus() { return (ee() + gg()) / std::sqrt(2.0); }

}  // namespace two_qubit

XState XState::from(const DensityMatrix& rho, double tol) {
  if (rho.dim() != 4) throw DimensionError("XState: expected a two-qubit state");
  const double off = off_x_magnitude(rho.matrix());
  if (off > tol) {
    std::ostringstream msg;
    msg << "state is not X-shaped (off-pattern entry " << off << ")";
    throw ValidationError(msg.str());
  }
  const ComplexMatrix& m = rho.matrix();
  return {m(0, 0).real(), m(1, 1).real(), m(2, 2).real(), m(3, 3).real(), m(0, 3), m(1, 2)};
}

DensityMatrix XState::to_density() const {
  if (std::abs(rho14) > std::sqrt(std::max(rho11 * rho44, 0.0)) + 1e-9 ||
      std::abs(rho23) > std::sqrt(std::max(rho22 * rho33, 0.0)) + 1e-9) {
    throw ValidationError("XState: coherence exceeds the positivity bound");
  }
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 0) = rho11;
  m(1, 1) = rho22;
  m(2, 2) = rho33;
  m(3, 3) = rho44;
  m(0, 3) = rho14;
  m(3, 0) = std::conj(rho14);
  m(1, 2) = rho23;
  m(2, 1) = std::conj(rho23);
  return DensityMatrix(std::move(m), kTwoQubits);
}

double XState::off_x_magnitude(const ComplexMatrix& m) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < 4; ++i) {
    for (Eigen::Index j = 0; j < 4; ++j) {
      if (i == j || i + j == 3) continue;
      worst = std::max(worst, std::abs(m(i, j)));
    }
  }
  return worst;
}

std::vector<TrajectoryPoint> evolve(const DensityMatrix& rho0, const ModelParams& params,
                                    const EvolveOptions& options) {
  params.validate();
  if (rho0.dim() != 4) throw DimensionError("evolve: expected a two-qubit state");
  if (!(options.dt > 0.0) || !(options.t_max >= 0.0) || options.stride < 1) {
    throw ValidationError("evolve: dt must be > 0, t_max >= 0 and stride >= 1");
  }
  const double stiffness = options.dt * params.max_rate() * (params.nbar() + 1.0);
  if (stiffness > 0.01) {
    std::ostringstream msg;
    msg << "evolve: dt * max(gamma) * (nbar + 1) = " << stiffness << " exceeds 0.01";
    throw ValidationError(msg.str());
  }

  const ComplexMatrix l = liouvillian(params);
  const auto rhs = [&l](const ComplexVector& v) -> ComplexVector { return l * v; };
  const auto as_matrix = [](const ComplexVector& v) {
    return ComplexMatrix(Eigen::Map<const ComplexMatrix>(v.data(), 4, 4));
  };
  const auto point = [](double t, const ComplexMatrix& m, double min_eig) {
    const ComplexMatrix h = hermitize(m);
    const double trace = h.trace().real();
    if (min_eig >= -tolerance::kNegativeEigenvalue) {
      return TrajectoryPoint{t, DensityMatrix(h, kTwoQubits), trace, min_eig};
    }
    // Round-off negativity between -1e-6 and -1e-9 is clipped for storage only.
    const Spectrum s = hermitian_spectrum(h);
    const RealVector w = s.eigenvalues.cwiseMax(0.0);
    ComplexMatrix clipped =
        s.eigenvectors * (w / w.sum()).cast<Complex>().asDiagonal() * s.eigenvectors.adjoint();
    return TrajectoryPoint{t, DensityMatrix(hermitize(clipped), kTwoQubits), trace, min_eig};
  };

  std::vector<TrajectoryPoint> out;
  ComplexMatrix current = rho0.matrix();
  out.push_back(point(0.0, current, rho0.min_eigenvalue()));

  ComplexVector v = Eigen::Map<const ComplexVector>(current.data(), 16);
  const auto steps = static_cast<long long>(std::ceil(options.t_max / options.dt - 1e-9));
  double t = 0.0;
  for (long long n = 1; n <= steps; ++n) {
    const ComplexVector k1 = rhs(v);
    if (k1.cwiseAbs().maxCoeff() < options.stationary_tolerance) break;
    const double h = std::min(options.dt, options.t_max - t);
    const ComplexVector k2 = rhs(v + 0.5 * h * k1);
    const ComplexVector k3 = rhs(v + 0.5 * h * k2);
    const ComplexVector k4 = rhs(v + h * k3);
    v += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    t = n == steps ? options.t_max : t + h;

    current = hermitize(as_matrix(v));
    v = Eigen::Map<const ComplexVector>(current.data(), 16);
    const double min_eig = hermitian_eigenvalues(current)(0);
    if (min_eig < -1e-6) {
      std::ostringstream msg;
      msg << "evolve: eigenvalue " << min_eig << " at t = " << t << " with dt = " << options.dt
          << "; reduce the step size";
      throw IntegrationError(msg.str());
    }
    if (n % options.stride == 0 || n == steps) out.push_back(point(t, current, min_eig));
  }
  if (out.back().t != t) {
    out.push_back(point(t, current, hermitian_eigenvalues(current)(0)));
  }
  return out;
}

double effective_c(const DensityMatrix& rho0) {
  if (rho0.dim() != 4) throw DimensionError("effective_c: expected a two-qubit state");
  const ComplexVector s = two_qubit::psi_minus();
  const double singlet = (s.adjoint() * rho0.matrix() * s)(0, 0).real();
  return std::clamp(1.0 - singlet, 0.0, 1.0);
}

DensityMatrix analytic_steady_state(double c, const ModelParams& params) {
  if (!(c >= 0.0 && c <= 1.0)) throw ValidationError("analytic_steady_state: c must lie in [0, 1]");
  const double x = params.omega * params.beta_e;
  const double w1 = std::exp(-x);
  const double w2 = std::exp(-2.0 * x);
  const double z = 1.0 + w1 + w2;
  ComplexMatrix m = (1.0 - c) * projector(two_qubit::psi_minus());
  m += (c / z) * (w2 * projector(two_qubit::ee()) + w1 * projector(two_qubit::psi_plus()) +
                  projector(two_qubit::gg()));
  return DensityMatrix(hermitize(m), kTwoQubits);
}

double local_beta(double c, const ModelParams& params) {
  if (!(c >= 0.0 && c <= 1.0)) throw ValidationError("local_beta: c must lie in [0, 1]");
  const double x = params.beta_e * params.omega;
  // numerator and denominator divided by e^x
  const double base = std::exp(-x) + 1.0 + std::exp(-2.0 * x);
  const double shift = c * (1.0 - std::exp(-2.0 * x));
  return (std::log(base + shift) - std::log(base - shift)) / params.omega;
}

double analytic_ergotropy_low_t(double c) {
  if (!(c >= 0.0 && c <= 1.0)) throw ValidationError("analytic_ergotropy_low_t: c must lie in [0, 1]");
  return std::max(1.0 - 2.0 * c, 0.0);
}

}  // namespace qeuler
