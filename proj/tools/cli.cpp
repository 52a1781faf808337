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

#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"
#include "qeuler/error.hpp"
#include "qeuler/io.hpp"
#include "qeuler/simulate.hpp"
#include "qeuler/sweep.hpp"
#include "qeuler/verify.hpp"

namespace qeuler::cli {

namespace {

constexpr double kSlackFloor = -1e-9;

void emit(const RunConfig& config, std::ostream& out, const std::string& text) {
  if (config.output_path.empty()) {
    out << text;
  } else {
    io::write_text_file(config.output_path, text);
  }
}

}  // namespace

int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err) {
  config.validate();
  const std::vector<SweepRow> rows = run_sweep(config);
  std::ostringstream csv;
  write_sweep_csv(csv, rows);
  emit(config, out, csv.str());
  int failures = 0;
  for (const auto& row : rows) {
    if (!(row.slack1 >= kSlackFloor) || !(row.slack2 >= kSlackFloor)) {
      err << "negative slack at c = " << io::format_number(row.c) << "\n";
      ++failures;
    }
  }
  return failures == 0 ? kSuccess : kPropertyFailure;
}

int cmd_simulate(const RunConfig& config, const std::filesystem::path& rho0_file,
                 std::ostream& out, std::ostream& err) {
  config.validate();
  DensityMatrix rho0 = io::read_state_file(rho0_file);
  if (rho0.dim() != 4) throw InputError("initial state must be 4x4");
  if (!rho0.is_bipartite()) rho0 = rho0.with_dims(kTwoQubits);
  const SimulationResult result = run_simulation(config, rho0);

  std::ostringstream csv;
  io::write_trajectory_csv(csv, result.trajectory);

  nlohmann::json summary = {{"effective_c", result.effective_c},
                            {"trace_distance", result.trace_distance},
                            {"t_final", result.trajectory.back().t},
                            {"reports", nlohmann::json::parse(io::format_reports(result.reports))}};
  if (result.reports_error) summary["reports_error"] = *result.reports_error;
  const std::string summary_text = summary.dump(2) + "\n";

  if (config.output_path.empty()) {
    out << csv.str() << summary_text;
  } else {
    io::write_text_file(config.output_path, csv.str());
    io::write_text_file(config.output_path + ".reports.json", summary_text);
  }
  err << "trace distance to steady state: " << io::format_number(result.trace_distance) << "\n";
  for (const auto& r : result.reports) {
    if (!r.satisfied) return kPropertyFailure;
  }
  return kSuccess;
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  VerifyOptions options;
  options.seed = config.seed;
  options.count = config.suite_size;
  options.grid = config.grid;
  const std::vector<SuiteResult> results = run_verification(options);
  bool ok = true;
  for (const auto& r : results) {
    err << (r.passed() ? "PASS " : "FAIL ") << r.name << "  cases=" << r.cases
        << " failures=" << r.failures << " worst=" << io::format_number(r.worst) << "\n";
    ok = ok && r.passed();
  }
  emit(config, out, format_verification(results));
  return ok ? kSuccess : kPropertyFailure;
}

int cmd_report(const RunConfig& config, const std::filesystem::path& state_file,
               const std::filesystem::path& h_file, std::ostream& out, std::ostream& err) {
  const DensityMatrix rho = io::read_state_file(state_file);
  const io::LocalHamiltonians h = io::read_hamiltonian_file(h_file);
  std::vector<RelationReport> reports;
  try {
    reports = all_relations(rho, h.a, h.b, config.grid);
  } catch (const NotLocallyThermalError& e) {
    const nlohmann::json error = {{"error", "not_locally_thermal"},
                                  {"message", e.what()},
                                  {"state", describe_state(rho)}};
    emit(config, out, error.dump(2) + "\n");
    err << "state is not locally thermal: " << e.what() << "\n";
    return kInvalidInput;
  }
  emit(config, out, io::format_reports(reports));
  for (const auto& r : reports) {
    if (!r.satisfied) return kPropertyFailure;
  }
  return kSuccess;
}

int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const IntegrationError& e) {
    err << "integration aborted: " << e.what() << "\n";
    return kPropertyFailure;
  } catch (const Error& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const nlohmann::json::exception& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
}

}  // namespace qeuler::cli
