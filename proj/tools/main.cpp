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

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "cli.hpp"
#include "qeuler/run_config.hpp"

namespace {

struct Overrides {
  std::string config_file;
  std::optional<double> beta_e;
  std::optional<double> omega;
  std::optional<double> c_step;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::optional<int> count;

  void attach(CLI::App* app) {
    app->add_option("--config", config_file, "JSON run configuration")->check(CLI::ExistingFile);
    app->add_option("--beta-e", beta_e, "bath inverse temperature");
    app->add_option("--omega", omega, "qubit frequency");
    app->add_option("--c-step", c_step, "c grid step");
    app->add_option("--seed", seed, "seed for random-state suites");
    app->add_option("--out", out, "output path (stdout when omitted)");
  }

  qeuler::RunConfig resolve() const {
    qeuler::RunConfig config =
        config_file.empty() ? qeuler::RunConfig{} : qeuler::load_run_config(config_file);
    if (beta_e) config.beta_e = *beta_e;
    if (omega) config.omega = *omega;
    if (c_step) config.c_grid.step = *c_step;
    if (seed) config.seed = *seed;
    if (out) config.output_path = *out;
    if (count) config.suite_size = *count;
    return config;
  }
};

}  // namespace

int main(int argc, char** argv) {
  using namespace qeuler::cli;

  CLI::App app{"qeuler: measurement, correlation and ergotropy bounds for locally thermal states"};
  app.require_subcommand(1);

  Overrides sweep_opts;
  CLI::App* sweep = app.add_subcommand("sweep", "steady-state sweep over c, written as CSV");
  sweep_opts.attach(sweep);

  Overrides sim_opts;
  std::string rho0_file;
  CLI::App* simulate = app.add_subcommand("simulate", "integrate the master equation from a state");
  sim_opts.attach(simulate);
  simulate->add_option("rho0", rho0_file, "initial two-qubit state (JSON)")
      ->required()
      ->check(CLI::ExistingFile);

  Overrides verify_opts;
  CLI::App* verify = app.add_subcommand("verify", "randomized property suites");
  verify_opts.attach(verify);
  verify->add_option("--count", verify_opts.count, "states per suite")
      ->check(CLI::PositiveNumber);

  Overrides report_opts;
  std::string state_file;
  std::string h_file;
  CLI::App* report = app.add_subcommand("report", "every relation for a supplied state");
  report_opts.attach(report);
  report->add_option("state", state_file, "state file (JSON)")->required()->check(CLI::ExistingFile);
  report->add_option("hamiltonian", h_file, "Hamiltonian file (JSON)")
      ->required()
      ->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kSuccess : kInvalidInput;
  }

  auto& out = std::cout;
  auto& err = std::cerr;
  if (*sweep) {
    return guarded(err, [&] { return cmd_sweep(sweep_opts.resolve(), out, err); });
  }
  if (*simulate) {
    return guarded(err, [&] { return cmd_simulate(sim_opts.resolve(), rho0_file, out, err); });
  }
  if (*verify) {
    return guarded(err, [&] { return cmd_verify(verify_opts.resolve(), out, err); });
  }
  return guarded(err, [&] { return cmd_report(report_opts.resolve(), state_file, h_file, out, err); });
}
