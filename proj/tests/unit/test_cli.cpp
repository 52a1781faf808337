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

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "helpers.hpp"
#include "json.hpp"
#include "qeuler/io.hpp"
#include "qeuler/sweep.hpp"
#include "qeuler/thermo.hpp"

namespace qeuler {
namespace {

using namespace qeuler::testing;
using nlohmann::json;

const std::filesystem::path kData = QEULER_DATA_DIR;

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("qeuler_test_" + name);
}

RunConfig coarse_config() {
  RunConfig c;
  c.c_grid.step = 0.1;
  return c;
}

TEST(CmdSweep, DeterministicOutput) {
  std::ostringstream a, b, err;
  EXPECT_EQ(cli::cmd_sweep(coarse_config(), a, err), cli::kSuccess);
  EXPECT_EQ(cli::cmd_sweep(coarse_config(), b, err), cli::kSuccess);
  EXPECT_EQ(a.str(), b.str());
  const std::string csv = a.str();
  EXPECT_EQ(csv.rfind("c,I_g,chi_B,MI,discord_A,eof_BC,quantum_gain,avg_energy_B,free_energy_B,"
                          "ergotropy,bound_ergotropy,global_ergotropy,rhs_ineq1,rhs_ineq2,slack1,"
                          "slack2,euler_residual\n",
                          0),
            0u);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 12);
}

TEST(CmdSweep, EndpointRowsAndSlackSign) {
  const std::vector<SweepRow> rows = run_sweep(coarse_config());
  ASSERT_EQ(rows.size(), 11u);
  EXPECT_NEAR(rows.front().ergotropy, 1.0, 5e-3);
  EXPECT_LE(rows.back().discord_a, 2e-3);
  EXPECT_LE(rows.back().euler_residual, 0.02);
  for (const auto& r : rows) EXPECT_GE(r.slack2, -1e-9) << r.c;
}

TEST(CmdSweep, InvalidGridIsInputFailure) {
  RunConfig c;
  c.c_grid.start = -0.5;
  std::ostringstream out, err;
  EXPECT_EQ(cli::guarded(err, [&] { return cli::cmd_sweep(c, out, err); }), cli::kInvalidInput);
  EXPECT_NE(err.str().find("c grid"), std::string::npos);
}

TEST(CmdSweep, WritesOutputFile) {
  RunConfig c = coarse_config();
  c.output_path = temp_path("sweep.csv").string();
  std::ostringstream out, err;
  ASSERT_EQ(cli::cmd_sweep(c, out, err), cli::kSuccess);
  EXPECT_TRUE(out.str().empty());
  EXPECT_EQ(io::read_text_file(c.output_path).rfind("c,I_g", 0), 0u);
  std::filesystem::remove(c.output_path);
}

TEST(CmdReport, SteadyStateMatchesSweepRow) {
  const RunConfig config;
  const auto state = temp_path("ss05.json");
  io::write_state_file(state, analytic_steady_state(0.5, config.model()));
  std::ostringstream out, err;
  ASSERT_EQ(cli::cmd_report(config, state, kData / "hamiltonians/qubit.json", out, err),
            cli::kSuccess)
      << err.str();
  const auto reports = io::parse_reports(out.str());
  const SweepRow row = sweep_point(0.5, config);
  auto find = [&](const std::string& name) {
    for (const auto& r : reports)
      if (r.name == name) return r;
    ADD_FAILURE() << "missing " << name;
    return RelationReport{};
  };
  EXPECT_NEAR(find("ergotropy_bound").rhs, row.rhs_ineq1, 1e-9);
  EXPECT_NEAR(find("global_ergotropy_bound").rhs, row.rhs_ineq2, 1e-9);
  EXPECT_NEAR(find("ergotropy_bound").slack, row.slack1, 1e-9);
  EXPECT_NEAR(find("global_ergotropy_bound").slack, row.slack2, 1e-9);
  EXPECT_NEAR(find("ergotropy_bound").lhs, row.information_gain, 1e-9);
  EXPECT_NEAR(find("euler").slack, row.euler_residual, 1e-9);
  EXPECT_NEAR(find("tradeoff").slack, row.tradeoff_residual, 1e-9);
  std::filesystem::remove(state);
}

TEST(CmdReport, ProductThermalStateHasZeroSlacks) {
  const auto state = temp_path("thermal.json");
  const DensityMatrix th = thermal_state(Hamiltonian::qubit(1.0), 0.8);
  io::write_state_file(state, DensityMatrix::product(th, th));
  std::ostringstream out, err;
  ASSERT_EQ(cli::cmd_report(RunConfig{}, state, kData / "hamiltonians/qubit.json", out, err),
            cli::kSuccess);
  for (const auto& r : io::parse_reports(out.str())) {
    // the dimension bound keeps ln 4 - S(rho_B) of room
    const double expected = r.name == "trivial_bound" ? std::log(4.0) - von_neumann_entropy(th) : 0.0;
    EXPECT_NEAR(r.slack, expected, 1e-9) << r.name;
  }
  std::filesystem::remove(state);
}

TEST(CmdReport, CoherentMarginalGivesStructuredError) {
  std::ostringstream out, err;
  EXPECT_EQ(cli::cmd_report(RunConfig{}, kData / "states/plus_thermal.json",
                            kData / "hamiltonians/qubit.json", out, err),
            cli::kInvalidInput);
  const json j = json::parse(out.str());
  EXPECT_EQ(j.at("error"), "not_locally_thermal");
  EXPECT_TRUE(j.contains("message"));
}

TEST(CmdSimulate, SingletIsStationaryAndDeterministic) {
  RunConfig config;
  config.t_max = 2.0;
  config.stride = 100;
  std::ostringstream a, b, err;
  EXPECT_EQ(cli::cmd_simulate(config, kData / "states/psi_minus.json", a, err), cli::kSuccess);
  EXPECT_EQ(cli::cmd_simulate(config, kData / "states/psi_minus.json", b, err), cli::kSuccess);
  EXPECT_EQ(a.str(), b.str());
}

TEST(CmdSimulate, WritesTrajectoryAndSummary) {
  RunConfig config;
  config.stride = 1000;
  config.output_path = temp_path("traj.csv").string();
  std::ostringstream out, err;
  ASSERT_EQ(cli::cmd_simulate(config, kData / "states/maximally_mixed.json", out, err),
            cli::kSuccess);
  const json summary = json::parse(io::read_text_file(config.output_path + ".reports.json"));
  EXPECT_NEAR(summary.at("effective_c").get<double>(), 0.75, 1e-12);
  EXPECT_LE(summary.at("trace_distance").get<double>(), 1e-6);
  EXPECT_EQ(summary.at("reports").size(), 9u);
  EXPECT_EQ(io::read_text_file(config.output_path).rfind("t,re_00", 0), 0u);
  std::filesystem::remove(config.output_path);
  std::filesystem::remove(config.output_path + ".reports.json");
}

TEST(CmdSimulate, MissingFileIsInvalidInput) {
  std::ostringstream out, err;
  EXPECT_EQ(cli::guarded(err, [&] {
              return cli::cmd_simulate(RunConfig{}, "/nonexistent.json", out, err);
            }),
            cli::kInvalidInput);
}

TEST(CmdVerify, SmallRunPassesAndIsDeterministic) {
  RunConfig config;
  config.suite_size = 20;
  std::ostringstream a, b, err;
  EXPECT_EQ(cli::cmd_verify(config, a, err), cli::kSuccess) << err.str();
  EXPECT_EQ(cli::cmd_verify(config, b, err), cli::kSuccess);
  EXPECT_EQ(a.str(), b.str());
  const json j = json::parse(a.str());
  EXPECT_TRUE(j.at("passed").get<bool>());
}

}  // namespace
}  // namespace qeuler
