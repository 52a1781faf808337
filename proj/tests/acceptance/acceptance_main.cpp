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

// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "qeuler/dissipation.hpp"
#include "qeuler/io.hpp"
#include "qeuler/sweep.hpp"
#include "qeuler/thermo.hpp"
#include "qeuler/verify.hpp"

namespace {

using namespace qeuler;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& why) {
    if (!ok && pass) detail = why;
    pass = pass && ok;
  }
};

std::string fmt(double x) { return io::format_number(x); }

int report(int index, const std::string& title, const Outcome& o, const std::string& summary) {
  std::printf("%s AC%d %s: %s\n", o.pass ? "PASS" : "FAIL", index, title.c_str(),
              o.pass ? summary.c_str() : o.detail.c_str());
  return o.pass ? 0 : 1;
}

Outcome tight_bound(const std::vector<SweepRow>& rows, double seconds, std::string& summary) {
  Outcome o;
  double worst_high = 0.0;
  for (const auto& r : rows) {
    o.require(r.slack2 >= -1e-9, "slack2 = " + fmt(r.slack2) + " at c = " + fmt(r.c));
    if (r.c >= 0.75 - 1e-12) {
      worst_high = std::max(worst_high, r.slack2);
      o.require(r.slack2 <= 0.02, "slack2 = " + fmt(r.slack2) + " > 0.02 at c = " + fmt(r.c));
    }
  }
  o.require(seconds <= 60.0, "sweep took " + fmt(seconds) + " s");
  summary = "max slack2 for c >= 0.75 is " + fmt(worst_high) + ", sweep " + fmt(seconds) + " s";
  return o;
}

Outcome loose_bound(const std::vector<SweepRow>& rows, std::string& summary) {
  Outcome o;
  std::size_t mid = rows.size();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    o.require(r.slack1 >= -1e-9, "slack1 = " + fmt(r.slack1) + " at c = " + fmt(r.c));
    o.require(r.slack1 >= r.slack2 - 1e-12, "slack1 < slack2 at c = " + fmt(r.c));
    if (std::abs(r.c - 0.5) < 1e-9) mid = i;
  }
  if (mid == 0 || mid + 1 >= rows.size()) {
    o.require(false, "c = 0.5 is not an interior grid point");
    return o;
  }
  const double left = (rows[mid].rhs_ineq1 - rows[mid - 1].rhs_ineq1) / (rows[mid].c - rows[mid - 1].c);
  const double right = (rows[mid + 1].rhs_ineq1 - rows[mid].rhs_ineq1) / (rows[mid + 1].c - rows[mid].c);
  const double kink = std::abs(right - left);
  o.require(kink > 0.5, "slope change at c = 0.5 is only " + fmt(kink));
  summary = "slope change of rhs_ineq1 at c = 0.5 is " + fmt(kink);
  return o;
}

Outcome ergotropy_curve(const std::vector<SweepRow>& rows, std::string& summary) {
  Outcome o;
  double worst = 0.0;
  for (const auto& r : rows) {
    const double dev = std::abs(r.ergotropy - analytic_ergotropy_low_t(r.c));
    worst = std::max(worst, dev);
    o.require(dev <= 5e-3, "ergotropy off by " + fmt(dev) + " at c = " + fmt(r.c));
  }
  summary = "max deviation " + fmt(worst);
  return o;
}

Outcome convergence(std::string& summary) {
  Outcome o;
  const ModelParams params = ModelParams::collective(1.0, 10.0);
  EvolveOptions options;
  options.t_max = 50.0;
  options.stride = 1;
  options.stationary_tolerance = 0.0;  // integrate the full window
  const std::vector<std::pair<std::string, DensityMatrix>> starts = {
      {"gg", DensityMatrix::pure(two_qubit::gg(), kTwoQubits)},
      {"ee", DensityMatrix::pure(two_qubit::ee(), kTwoQubits)},
      {"I/4", DensityMatrix::maximally_mixed(4, kTwoQubits)}};
  for (const auto& [name, rho0] : starts) {
    const auto traj = evolve(rho0, params, options);
    for (const auto& p : traj) {
      o.require(std::abs(p.trace - 1.0) <= 1e-9, name + ": trace drift at t = " + fmt(p.t));
      o.require(p.min_eigenvalue >= -1e-9, name + ": negative eigenvalue at t = " + fmt(p.t));
    }
    const double d = trace_distance(traj.back().rho, analytic_steady_state(effective_c(rho0), params));
    o.require(std::abs(traj.back().t - 50.0) < 1e-9, name + ": stopped at t = " + fmt(traj.back().t));
    o.require(d <= 1e-6, name + ": trace distance " + fmt(d));
    summary += name + " " + fmt(d) + "  ";
  }
  summary = "trace distances at t = 50: " + summary;
  return o;
}

Outcome euler_relation(const std::vector<SweepRow>& rows, std::string& summary) {
  Outcome o;
  double worst_high = 0.0;
  double worst_scale = 0.0;
  for (const auto& r : rows) {
    o.require(r.euler_residual >= -2e-3, "euler slack " + fmt(r.euler_residual) + " at c = " + fmt(r.c));
    if (r.c >= 0.75 - 1e-12) {
      worst_high = std::max({worst_high, std::abs(r.euler_residual), std::abs(r.tradeoff_residual)});
      o.require(std::abs(r.euler_residual) <= 0.02 && std::abs(r.tradeoff_residual) <= 0.02,
                "residual above 0.02 at c = " + fmt(r.c));
    }
    if (r.beta > 0.0) {
      const double dev = std::abs(r.tradeoff_residual - r.beta * r.euler_residual);
      worst_scale = std::max(worst_scale, dev);
      o.require(dev <= 1e-9, "tradeoff != beta * euler at c = " + fmt(r.c));
    } else {
      // infinite temperature: the Euler residual diverges, the trade-off stays a finite inequality
      o.require(r.tradeoff_residual >= -2e-3, "tradeoff slack negative at c = " + fmt(r.c));
    }
  }
  summary = "max |residual| for c >= 0.75 is " + fmt(worst_high) +
            ", max |tradeoff - beta euler| " + fmt(worst_scale);
  return o;
}

Outcome property_suites(std::string& summary) {
  Outcome o;
  const std::vector<std::string> required = {
      "trivial_bound",      "local_decomposition",     "local_subadditivity",
      "holevo_closure",     "projective_entropy_cost", "coherence_gap",
      "kw_vs_wootters",     "beta_formula",            "passive_minimality",
      "bound_ergotropy_nonnegative"};
  VerifyOptions options;
  const auto results = run_verification(options);
  int failures = 0;
  for (const auto& r : results) {
    failures += r.failures;
    o.require(r.passed(), "suite " + r.name + " has " + std::to_string(r.failures) + " failures");
  }
  for (const auto& name : required) {
    bool found = false;
    for (const auto& r : results) {
      if (r.name != name) continue;
      found = true;
      o.require(r.cases >= 500, "suite " + name + " ran only " + std::to_string(r.cases) + " cases");
    }
    o.require(found, "suite " + name + " missing");
  }
  summary = std::to_string(results.size()) + " suites, " + std::to_string(failures) + " failures";
  return o;
}

}  // namespace

int main() {
  const RunConfig config;  // beta_e = 10, omega = 1, c = 0, 0.01, ..., 1
  const auto start = std::chrono::steady_clock::now();
  const std::vector<SweepRow> rows = run_sweep(config);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  int failed = 0;
  std::string s;
  Outcome o = tight_bound(rows, seconds, s);
  failed += report(1, "global-ergotropy bound saturates for c >= 0.75", o, s);
  s.clear();
  o = loose_bound(rows, s);
  failed += report(2, "ergotropy bound holds with a kink at c = 0.5", o, s);
  s.clear();
  o = ergotropy_curve(rows, s);
  failed += report(3, "steady-state ergotropy follows max(1 - 2c, 0)", o, s);
  s.clear();
  o = convergence(s);
  failed += report(4, "master equation converges to the analytic steady state", o, s);
  s.clear();
  o = euler_relation(rows, s);
  failed += report(5, "Euler relation and trade-off", o, s);
  s.clear();
  o = property_suites(s);
  failed += report(6, "randomized property suites", o, s);
  return failed == 0 ? 0 : 1;
}
