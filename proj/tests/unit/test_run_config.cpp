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

#include <filesystem>

#include "helpers.hpp"
#include "qeuler/error.hpp"
#include "qeuler/run_config.hpp"

namespace qeuler {
namespace {

TEST(RunConfig, DefaultsAreColdBathUnitFrequency) {
  const RunConfig c;
  EXPECT_DOUBLE_EQ(c.beta_e, 10.0);
  EXPECT_DOUBLE_EQ(c.omega, 1.0);
  EXPECT_DOUBLE_EQ(c.f, 0.0);
  EXPECT_DOUBLE_EQ(c.gamma, 1.0);
  EXPECT_NO_THROW(c.validate());
  const auto points = c.c_grid.points();
  ASSERT_EQ(points.size(), 101u);
  EXPECT_DOUBLE_EQ(points.front(), 0.0);
  EXPECT_DOUBLE_EQ(points[50], 0.5);
  EXPECT_DOUBLE_EQ(points.back(), 1.0);
}

TEST(RunConfig, ParsesNestedKeys) {
  const RunConfig c = parse_run_config(
      R"({"beta_e": 4, "c_grid": {"start": 0.2, "stop": 0.4, "step": 0.1},
          "grid": {"theta_points": 16}, "seed": 9, "output_path": "x.csv"})");
  EXPECT_DOUBLE_EQ(c.beta_e, 4.0);
  EXPECT_EQ(c.c_grid.points().size(), 3u);
  EXPECT_EQ(c.grid.theta_points, 16);
  EXPECT_EQ(c.grid.phi_points, 64);
  EXPECT_EQ(c.seed, 9u);
  EXPECT_EQ(c.output_path, "x.csv");
}

TEST(RunConfig, DefaultFileMatchesDefaults) {
  const RunConfig c = load_run_config(std::filesystem::path(QEULER_DATA_DIR) / "configs/default.json");
  EXPECT_DOUBLE_EQ(c.beta_e, RunConfig{}.beta_e);
  EXPECT_EQ(c.c_grid.points(), RunConfig{}.c_grid.points());
}

TEST(RunConfig, RejectsUnknownAndMistypedKeys) {
  EXPECT_THROW(parse_run_config(R"({"betae": 3})"), InputError);
  EXPECT_THROW(parse_run_config(R"({"c_grid": {"begin": 0}})"), InputError);
  EXPECT_THROW(parse_run_config(R"({"beta_e": "hot"})"), InputError);
  EXPECT_THROW(parse_run_config("[1, 2]"), InputError);
  EXPECT_THROW(parse_run_config("{"), InputError);
}

TEST(RunConfig, ValidationFailures) {
  RunConfig c;
  c.c_grid.stop = 1.5;
  EXPECT_THROW(c.validate(), ValidationError);
  c = RunConfig{};
  c.c_grid.step = 0.0;
  EXPECT_THROW(c.validate(), ValidationError);
  c = RunConfig{};
  c.dt = 0.5;
  c.beta_e = 0.01;
  EXPECT_THROW(c.validate(), ValidationError);
  c = RunConfig{};
  c.omega = -1.0;
  EXPECT_THROW(c.validate(), ValidationError);
}

}  // namespace
}  // namespace qeuler
