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

#include "qeuler/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

#include "json.hpp"
#include "qeuler/correlations.hpp"
#include "qeuler/dissipation.hpp"
#include "qeuler/error.hpp"
#include "qeuler/measurement.hpp"
#include "qeuler/parallel.hpp"
#include "qeuler/random.hpp"
#include "qeuler/relations.hpp"
#include "qeuler/thermo.hpp"

namespace qeuler {

namespace {

// Accumulates one suite. Inequality suites record slacks (fail below
// -threshold); identity suites record deviations (fail above threshold).
class Tally {
 public:
  Tally(std::string name, double threshold, bool deviation) {
    result_.name = std::move(name);
    result_.threshold = threshold;
    result_.worst_is_deviation = deviation;
    result_.worst = deviation ? 0.0 : std::numeric_limits<double>::infinity();
  }

  void slack(double s) {
    ++result_.cases;
    result_.worst = std::min(result_.worst, s);
    if (!(s >= -result_.threshold)) ++result_.failures;
  }

  void deviation(double d) {
    ++result_.cases;
    result_.worst = std::max(result_.worst, d);
    if (!(d <= result_.threshold)) ++result_.failures;
  }

  void failure() {
    ++result_.cases;
    ++result_.failures;
  }

  SuiteResult result() const { return result_; }

 private:
  SuiteResult result_;
};

struct SuiteContext {
  Rng& rng;
  int count;
  GridSpec grid;
};

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Hamiltonian random_hamiltonian(Eigen::Index d, Rng& rng) {
  return Hamiltonian(hermitize(random_ginibre(d, d, rng)));
}

SuiteResult entropy_concavity(SuiteContext& ctx) {
  Tally t("entropy_concavity", 1e-9, false);
  for (int i = 0; i < 2 * ctx.count; ++i) {
    std::uniform_int_distribution<Eigen::Index> dim(2, 8);
    const Eigen::Index d = dim(ctx.rng);
    const DensityMatrix a = random_density_matrix(d, ctx.rng);
    const DensityMatrix b = random_density_matrix(d, ctx.rng);
    const DensityMatrix mix(0.5 * (a.matrix() + b.matrix()));
    t.slack(von_neumann_entropy(mix) - 0.5 * von_neumann_entropy(a) - 0.5 * von_neumann_entropy(b));
  }
  return t.result();
}

SuiteResult entropy_subadditivity(SuiteContext& ctx) {
  Tally t("entropy_subadditivity", 1e-9, false);
  for (int i = 0; i < ctx.count; ++i) {
    const DensityMatrix rho = random_bipartite_state(random_dims(ctx.rng), ctx.rng);
    t.slack(mutual_information(rho));
  }
  return t.result();
}

SuiteResult partial_trace_of_products(SuiteContext& ctx) {
  Tally t("partial_trace_of_products", 1e-12, true);
  for (int i = 0; i < ctx.count; ++i) {
    const BipartiteDims dims = random_dims(ctx.rng);
    const DensityMatrix a = random_density_matrix(dims.a, ctx.rng);
    const DensityMatrix b = random_density_matrix(dims.b, ctx.rng);
    const DensityMatrix ab = DensityMatrix::product(a, b);
    t.deviation(std::max(max_abs(partial_trace(ab, Subsystem::A).matrix() - a.matrix()),
                         max_abs(partial_trace(ab, Subsystem::B).matrix() - b.matrix())));
  }
  return t.result();
}

SuiteResult purification_roundtrip(SuiteContext& ctx) {
  Tally t("purification_roundtrip", 1e-9, true);
  for (int i = 0; i < ctx.count; ++i) {
    std::uniform_int_distribution<Eigen::Index> dim(2, 4);
    const Eigen::Index d = dim(ctx.rng);
    std::uniform_int_distribution<Eigen::Index> rank(1, d);
    const DensityMatrix rho = random_density_matrix(d, ctx.rng, std::nullopt, rank(ctx.rng));
    const Purification p = purify(rho);
    const ComplexMatrix back =
        partial_trace(projector(p.state), BipartiteDims{d, p.ancilla_dim}, Subsystem::A);
    t.deviation(max_abs(back - rho.matrix()));
  }
  return t.result();
}

SuiteResult trivial_bound(SuiteContext& ctx) {
  Tally t("trivial_bound", 1e-9, false);
  for (int i = 0; i < ctx.count; ++i) {
    const DensityMatrix rho = random_bipartite_state(random_dims(ctx.rng), ctx.rng);
    std::uniform_int_distribution<Eigen::Index> outcomes(1, 6);
    t.slack(check_trivial_bound(rho, random_povm(rho.dim(), outcomes(ctx.rng), ctx.rng)).slack);
  }
  return t.result();
}

SuiteResult local_decomposition(SuiteContext& ctx) {
  Tally t("local_decomposition", 1e-9, true);
  for (int i = 0; i < ctx.count; ++i) {
    const DensityMatrix rho = random_bipartite_state(random_dims(ctx.rng), ctx.rng);
    const MeasurementRecord r = measure(rho, random_local_povm(*rho.dims(), ctx.rng));
    const double average_mi = r.average([](const DensityMatrix& s) { return mutual_information(s); });
    const double rhs = local_information_gain(r, Subsystem::A) +
                       local_information_gain(r, Subsystem::B) - mutual_information(rho) +
                       average_mi;
    t.deviation(std::abs(information_gain(r) - rhs));
  }
  return t.result();
}

SuiteResult local_subadditivity(SuiteContext& ctx) {
  Tally t("local_subadditivity", 1e-9, false);
  for (int i = 0; i < ctx.count; ++i) {
    const DensityMatrix rho = random_bipartite_state(random_dims(ctx.rng), ctx.rng);
    t.slack(check_subadditivity(rho, random_local_projective(*rho.dims(), ctx.rng)).slack);
  }
  return t.result();
}

SuiteResult holevo_closure(SuiteContext& ctx) {
  Tally t("holevo_closure", 1e-9, true);
  for (int i = 0; i < ctx.count; ++i) {
    const DensityMatrix rho = random_bipartite_state(random_dims(ctx.rng), ctx.rng);
    std::uniform_int_distribution<Eigen::Index> outcomes(1, 6);
    const MeasurementRecord r = measure(rho, random_povm(rho.dim(), outcomes(ctx.rng), ctx.rng));
    t.deviation(std::abs(holevo_of_measurement(r) - information_gain(r) - entropy_cost(r)));
  }
  return t.result();
}

SuiteResult projective_entropy_cost(SuiteContext& ctx) {
  Tally t("projective_entropy_cost", 1e-9, false);
  for (int i = 0; i < ctx.count; ++i) {
    const DensityMatrix rho = random_bipartite_state(random_dims(ctx.rng), ctx.rng);
    t.slack(entropy_cost(measure(rho, random_projective(rho.dim(), ctx.rng))));
  }
  return t.result();
}

SuiteResult rank_one_gain(SuiteContext& ctx) {
  Tally t("rank_one_gain_nonnegative", 1e-9, false);
  for (int i = 0; i < ctx.count; ++i) {
    const DensityMatrix rho = random_bipartite_state(random_dims(ctx.rng), ctx.rng);
    t.slack(information_gain(measure(rho, random_rank_one_projective(rho.dim(), ctx.rng))));
  }
  return t.result();
}

SuiteResult coherence_gap(SuiteContext& ctx) {
  Tally t("coherence_gap", 1e-9, true);
  for (int i = 0; i < ctx.count; ++i) {
    const DensityMatrix rho = random_bipartite_state(random_dims(ctx.rng), ctx.rng);
    const ProductBasisPovm m = random_local_rank_one(*rho.dims(), ctx.rng);
    const MeasurementRecord r = measure(rho, m.povm);
    const double gap = holevo_of_measurement(r) - information_gain(r);
    t.deviation(std::abs(gap - relative_entropy_of_coherence(rho, m.basis)));
  }
  return t.result();
}

SuiteResult energy_measurement_split(SuiteContext& ctx) {
  Tally t("energy_measurement_split", 1e-9, true);
  for (int i = 0; i < ctx.count; ++i) {
    const DensityMatrix rho = random_bipartite_state(random_dims(ctx.rng), ctx.rng);
    const BipartiteDims dims = *rho.dims();
    const Hamiltonian h_b = random_hamiltonian(dims.b, ctx.rng);
    const Povm energy_b = projective_energy_povm(h_b, Subsystem::B, dims);
    const double gain = information_gain(measure(rho, energy_b));
    const double split = chi_from_local_measurement(rho, energy_b) +
                         von_neumann_entropy(partial_trace(rho, Subsystem::B)) -
                         mutual_information(rho);
    t.deviation(std::abs(gain - split));
  }
  return t.result();
}

SuiteResult discord_nonnegative(SuiteContext& ctx) {
  Tally t("discord_nonnegative", 1e-6, false);
  for (int i = 0; i < ctx.count; ++i) {
    const DensityMatrix rho = random_bipartite_state(kTwoQubits, ctx.rng);
    t.slack(discord_a(rho, ctx.grid));
  }
  return t.result();
}

SuiteResult classical_quantum_split(SuiteContext& ctx) {
  Tally t("classical_quantum_split", kOptimizationTolerance, true);
  for (int i = 0; i < ctx.count; ++i) {
    const DensityMatrix rho = random_bipartite_state(kTwoQubits, ctx.rng, 2);
    const Hamiltonian h_b = random_hamiltonian(2, ctx.rng);
    try {
      t.deviation(breakdown(rho, h_b, ctx.grid).decomposition_residual);
    } catch (const ValidationError&) {
      t.failure();
    }
  }
  return t.result();
}

SuiteResult kw_vs_wootters(SuiteContext& ctx) {
  Tally t("kw_vs_wootters", 1e-3, true);
  for (int i = 0; i < ctx.count; ++i) {
    const DensityMatrix rho = random_bipartite_state(kTwoQubits, ctx.rng, 2);
    const double kw = eof_via_koashi_winter(rho, ctx.grid);
    t.deviation(std::abs(kw - wootters_eof(purifier_marginal_bc(rho))));
  }
  return t.result();
}

SuiteResult chi_grid_monotone(SuiteContext& ctx) {
  Tally t("chi_grid_monotone", 1e-12, false);
  const int n = std::max(1, ctx.count / 10);
  for (int i = 0; i < n; ++i) {
    const DensityMatrix rho = random_bipartite_state(kTwoQubits, ctx.rng);
    GridSpec coarse = ctx.grid;
    coarse.theta_points = std::max(4, coarse.theta_points / 4);
    coarse.phi_points = std::max(4, coarse.phi_points / 4);
    t.slack(chi_a_max(rho, coarse.doubled()) - chi_a_max(rho, coarse));
  }
  return t.result();
}

SuiteResult beta_formula(SuiteContext& ctx) {
  Tally t("beta_formula", 1e-9, true);
  for (int i = 0; i < ctx.count; ++i) {
    const double c = uniform(ctx.rng, 0.0, 1.0);
    const ModelParams params =
        ModelParams::collective(uniform(ctx.rng, 0.5, 2.0), uniform(ctx.rng, 0.1, 20.0));
    const DensityMatrix rho = analytic_steady_state(c, params);
    const Hamiltonian h = qubit_hamiltonian(params);
    const auto fit_a = local_inverse_temperature(partial_trace(rho, Subsystem::A), h);
    const auto fit_b = local_inverse_temperature(partial_trace(rho, Subsystem::B), h);
    if (!fit_a || !fit_b) {
      t.failure();
      continue;
    }
    const double expected = local_beta(c, params);
    t.deviation(std::max(std::abs(*fit_a - expected), std::abs(*fit_b - expected)));
  }
  return t.result();
}

SuiteResult passive_minimality(SuiteContext& ctx) {
  Tally t("passive_minimality", 1e-12, false);
  for (int i = 0; i < ctx.count; ++i) {
    std::uniform_int_distribution<Eigen::Index> dim(2, 8);
    const Eigen::Index d = dim(ctx.rng);
    const DensityMatrix rho = random_density_matrix(d, ctx.rng);
    const Hamiltonian h = random_hamiltonian(d, ctx.rng);
    const double passive = average_energy(passive_state(rho, h), h);
    const RealVector& r = rho.spectrum().eigenvalues;
    std::vector<Eigen::Index> perm(static_cast<std::size_t>(d));
    std::iota(perm.begin(), perm.end(), 0);
    double worst = std::numeric_limits<double>::infinity();
    for (int k = 0; k < 1000; ++k) {
      std::shuffle(perm.begin(), perm.end(), ctx.rng);
      double energy = 0.0;
      for (Eigen::Index j = 0; j < d; ++j) {
        energy += r(perm[static_cast<std::size_t>(j)]) * h.energies()(j);
      }
      worst = std::min(worst, energy - passive);
    }
    t.slack(worst);
  }
  return t.result();
}

SuiteResult ergotropy_forms(SuiteContext& ctx) {
  Tally t("ergotropy_forms", 1e-9, true);
  for (int i = 0; i < ctx.count; ++i) {
    std::uniform_int_distribution<Eigen::Index> dim(2, 8);
    const Eigen::Index d = dim(ctx.rng);
    const DensityMatrix rho = random_density_matrix(d, ctx.rng);
    const Hamiltonian h = random_hamiltonian(d, ctx.rng);
    const double e = ergotropy(rho, h);
    if (e < -1e-9) {
      t.failure();
      continue;
    }
    t.deviation(std::abs(e - ergotropy_double_sum(rho, h)));
  }
  return t.result();
}

SuiteResult unitary_invariance(SuiteContext& ctx) {
  Tally t("ergotropy_unitary_invariance", 1e-9, true);
  for (int i = 0; i < ctx.count; ++i) {
    std::uniform_int_distribution<Eigen::Index> dim(2, 8);
    const Eigen::Index d = dim(ctx.rng);
    const DensityMatrix rho = random_density_matrix(d, ctx.rng);
    const Hamiltonian h = random_hamiltonian(d, ctx.rng);
    const ComplexMatrix u = random_unitary(d, ctx.rng);
    const DensityMatrix rotated(hermitize(u * rho.matrix() * u.adjoint()));
    const double expected =
        average_energy(rotated, h) - average_energy(passive_state(rho, h), h);
    t.deviation(std::abs(ergotropy(rotated, h) - expected));
  }
  return t.result();
}

SuiteResult bound_ergotropy_nonnegative(SuiteContext& ctx) {
  Tally t("bound_ergotropy_nonnegative", 1e-9, false);
  for (int i = 0; i < ctx.count; ++i) {
    std::uniform_int_distribution<Eigen::Index> dim(2, 8);
    const Eigen::Index d = dim(ctx.rng);
    std::uniform_int_distribution<Eigen::Index> rank(1, d);
    const DensityMatrix rho = random_density_matrix(d, ctx.rng, std::nullopt, rank(ctx.rng));
    t.slack(bound_ergotropy(rho, random_hamiltonian(d, ctx.rng)));
  }
  return t.result();
}

SuiteResult steady_state_stationarity(SuiteContext& ctx) {
  Tally t("steady_state_stationarity", 1e-10, true);
  for (int i = 0; i < ctx.count; ++i) {
    ModelParams params =
        ModelParams::collective(uniform(ctx.rng, 0.5, 2.0), uniform(ctx.rng, 0.1, 20.0),
                                uniform(ctx.rng, 0.1, 2.0), uniform(ctx.rng, -0.5, 0.5));
    const DensityMatrix rho = analytic_steady_state(uniform(ctx.rng, 0.0, 1.0), params);
    t.deviation(max_abs(lindblad_rhs(rho, params)));
  }
  return t.result();
}

SuiteResult steady_state_ergotropy(SuiteContext& ctx) {
  Tally t("steady_state_ergotropy", 5e-3, true);
  const ModelParams params = ModelParams::collective(1.0, 10.0);
  const Hamiltonian h = self_hamiltonian(params);
  for (int i = 0; i < ctx.count; ++i) {
    const double c = uniform(ctx.rng, 0.0, 1.0);
    t.deviation(std::abs(ergotropy(analytic_steady_state(c, params), h) -
                         analytic_ergotropy_low_t(c)));
  }
  return t.result();
}

// Trace, positivity, X shape and effective c along short trajectories.
SuiteResult trajectory_invariants(SuiteContext& ctx) {
  Tally t("trajectory_invariants", 1e-6, true);
  const int n = std::max(1, ctx.count / 10);
  const ModelParams params = ModelParams::collective(1.0, uniform(ctx.rng, 0.5, 10.0));
  EvolveOptions options;
  options.t_max = 5.0;
  options.stride = 50;
  for (int i = 0; i < n; ++i) {
    // X-shaped start: dephase a random state onto the X pattern
    const DensityMatrix raw = random_bipartite_state(kTwoQubits, ctx.rng);
    ComplexMatrix x = raw.matrix();
    for (Eigen::Index a = 0; a < 4; ++a)
      for (Eigen::Index b = 0; b < 4; ++b)
        if (a != b && a + b != 3) x(a, b) = 0.0;
    const DensityMatrix rho0(x, kTwoQubits);
    const double c0 = effective_c(rho0);
    double worst = 0.0;
    try {
      for (const auto& p : evolve(rho0, params, options)) {
        worst = std::max(worst, std::abs(p.trace - 1.0) / 1e-3);  // trace within 1e-9
        worst = std::max(worst, -p.min_eigenvalue);
        worst = std::max(worst, XState::off_x_magnitude(p.rho.matrix()) * 1e4);  // below 1e-10
        worst = std::max(worst, std::abs(effective_c(p.rho) - c0));
      }
      t.deviation(worst);
    } catch (const Error&) {
      t.failure();
    }
  }
  return t.result();
}

using SuiteFn = std::function<SuiteResult(SuiteContext&)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"entropy_concavity", entropy_concavity},
      {"entropy_subadditivity", entropy_subadditivity},
      {"partial_trace_of_products", partial_trace_of_products},
      {"purification_roundtrip", purification_roundtrip},
      {"trivial_bound", trivial_bound},
      {"local_decomposition", local_decomposition},
      {"local_subadditivity", local_subadditivity},
      {"holevo_closure", holevo_closure},
      {"projective_entropy_cost", projective_entropy_cost},
      {"rank_one_gain_nonnegative", rank_one_gain},
      {"coherence_gap", coherence_gap},
      {"energy_measurement_split", energy_measurement_split},
      {"discord_nonnegative", discord_nonnegative},
      {"classical_quantum_split", classical_quantum_split},
      {"kw_vs_wootters", kw_vs_wootters},
      {"chi_grid_monotone", chi_grid_monotone},
      {"beta_formula", beta_formula},
      {"passive_minimality", passive_minimality},
      {"ergotropy_forms", ergotropy_forms},
      {"ergotropy_unitary_invariance", unitary_invariance},
      {"bound_ergotropy_nonnegative", bound_ergotropy_nonnegative},
      {"steady_state_stationarity", steady_state_stationarity},
      {"steady_state_ergotropy", steady_state_ergotropy},
      {"trajectory_invariants", trajectory_invariants},
  };
  return suites;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : registry()) names.push_back(name);
  return names;
}

SuiteResult run_suite(const std::string& name, const VerifyOptions& options) {
  const auto& suites = registry();
  const auto it = std::find_if(suites.begin(), suites.end(),
                               [&](const auto& entry) { return entry.first == name; });
  if (it == suites.end()) throw InputError("unknown suite \"" + name + "\"");
  const auto index = static_cast<std::uint32_t>(it - suites.begin());
  std::seed_seq seq{static_cast<std::uint32_t>(options.seed),
                    static_cast<std::uint32_t>(options.seed >> 32), index};
  Rng rng(seq);
  SuiteContext ctx{rng, options.count, options.grid};
  return it->second(ctx);
}

std::vector<SuiteResult> run_verification(const VerifyOptions& options) {
  const std::vector<std::string> names = suite_names();
  return parallel_map(names.size(), [&](std::size_t i) { return run_suite(names[i], options); });
}

std::string format_verification(const std::vector<SuiteResult>& results) {
  using nlohmann::json;
  json suites = json::array();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed();
    suites.push_back({{"name", r.name},
                      {"cases", r.cases},
                      {"failures", r.failures},
                      {"worst", std::isfinite(r.worst) ? json(r.worst) : json("inf")},
                      {"metric", r.worst_is_deviation ? "max_deviation" : "min_slack"},
                      {"threshold", r.threshold},
                      {"passed", r.passed()}});
  }
  return json{{"passed", all}, {"suites", std::move(suites)}}.dump(2) + "\n";
}

}  // namespace qeuler
