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

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "qeuler/correlations.hpp"
#include "qeuler/dissipation.hpp"

namespace qeuler {

/// c values start, start + step, ..., stop (inclusive, up to round-off).
struct CGrid {
  double start = 0.0;
  double stop = 1.0;
  double step = 0.01;

  std::vector<double> points() const;
};

/// Settings shared by the sweep, simulate, verify and report commands.
struct RunConfig {
  double beta_e = 10.0;
  double omega = 1.0;
  double f = 0.0;
  double gamma = 1.0;  // fully collective rate
  CGrid c_grid;
  std::uint64_t seed = 20221;
  double dt = 0.005;
  double t_max = 50.0;
  int stride = 1;
  int suite_size = 500;
  GridSpec grid;
  std::string output_path;

  ModelParams model() const;
  /// Throws ValidationError for a c grid outside [0, 1], a non-positive
  /// step, or a dt violating the integrator bound.
  void validate() const;
};

/// Reads the JSON config; keys mirror the struct ("c_grid": {"start", "stop",
/// "step"}, "grid": {"theta_points", "phi_points", "resolution"}). Unknown
/// keys throw InputError.
RunConfig parse_run_config(const std::string& json_text);
RunConfig load_run_config(const std::filesystem::path& path);

}  // namespace qeuler
