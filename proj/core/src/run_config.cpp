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

#include "qeuler/run_config.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include "json.hpp"
#include "qeuler/error.hpp"
#include "qeuler/io.hpp"

namespace qeuler {

using nlohmann::json;

std::vector<double> CGrid::points() const {
  if (!(step > 0.0)) throw ValidationError("c grid step must be > 0");
  const auto n = static_cast<long long>(std::floor((stop - start) / step + 1e-9));
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(std::max(n + 1, 0LL)));
  for (long long i = 0; i <= n; ++i) {
    out.push_back(std::min(start + static_cast<double>(i) * step, stop));
  }
  return out;
}

ModelParams RunConfig::model() const { return ModelParams::collective(omega, beta_e, gamma, f); }

void RunConfig::validate() const {
  if (!(c_grid.start >= 0.0 && c_grid.stop <= 1.0 && c_grid.start <= c_grid.stop)) {
    throw ValidationError("c grid must satisfy 0 <= start <= stop <= 1");
  }
  if (!(c_grid.step > 0.0)) throw ValidationError("c grid step must be > 0");
  if (!(gamma >= 0.0)) throw ValidationError("gamma must be >= 0");
  const ModelParams params = model();
  params.validate();
  if (!(dt > 0.0) || !(t_max >= 0.0)) throw ValidationError("dt must be > 0 and t_max >= 0");
  const double stiffness = dt * params.max_rate() * (params.nbar() + 1.0);
  if (stiffness > 0.01) {
    std::ostringstream msg;
    msg << "dt * gamma * (nbar + 1) = " << stiffness << " exceeds 0.01";
    throw ValidationError(msg.str());
  }
  if (stride < 1) throw ValidationError("stride must be >= 1");
  if (suite_size < 1) throw ValidationError("suite_size must be >= 1");
  if (grid.theta_points < 1 || grid.phi_points < 1 || !(grid.resolution > 0.0) || grid.starts < 1) {
    throw ValidationError("measurement grid settings must be positive");
  }
}

namespace {

void reject_unknown(const json& j, const std::set<std::string>& known, const std::string& where) {
  for (const auto& [key, value] : j.items()) {
    if (!known.contains(key)) throw InputError("unknown key \"" + key + "\" in " + where);
  }
}

template <class T>
void read_if(const json& j, const char* key, T& target) {
  if (!j.contains(key)) return;
  try {
    target = j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InputError(std::string("bad value for \"") + key + "\": " + e.what());
  }
}

}  // namespace

RunConfig parse_run_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed config: ") + e.what());
  }
  if (!j.is_object()) throw InputError("config must be a JSON object");
  reject_unknown(j,
                 {"beta_e", "omega", "f", "gamma", "c_grid", "seed", "dt", "t_max", "stride",
                  "suite_size", "grid", "output_path"},
                 "config");
  RunConfig c;
  read_if(j, "beta_e", c.beta_e);
  read_if(j, "omega", c.omega);
  read_if(j, "f", c.f);
  read_if(j, "gamma", c.gamma);
  read_if(j, "seed", c.seed);
  read_if(j, "dt", c.dt);
  read_if(j, "t_max", c.t_max);
  read_if(j, "stride", c.stride);
  read_if(j, "suite_size", c.suite_size);
  read_if(j, "output_path", c.output_path);
  if (j.contains("c_grid")) {
    const json& g = j.at("c_grid");
    if (!g.is_object()) throw InputError("\"c_grid\" must be an object");
    reject_unknown(g, {"start", "stop", "step"}, "c_grid");
    read_if(g, "start", c.c_grid.start);
    read_if(g, "stop", c.c_grid.stop);
    read_if(g, "step", c.c_grid.step);
  }
  if (j.contains("grid")) {
    const json& g = j.at("grid");
    if (!g.is_object()) throw InputError("\"grid\" must be an object");
    reject_unknown(g, {"theta_points", "phi_points", "resolution", "starts"}, "grid");
    read_if(g, "theta_points", c.grid.theta_points);
    read_if(g, "phi_points", c.grid.phi_points);
    read_if(g, "resolution", c.grid.resolution);
    read_if(g, "starts", c.grid.starts);
  }
  return c;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  return parse_run_config(io::read_text_file(path));
}

}  // namespace qeuler
