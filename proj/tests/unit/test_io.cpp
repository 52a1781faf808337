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
#include <filesystem>
#include <limits>
#include <sstream>

#include "helpers.hpp"
#include "qeuler/error.hpp"
#include "qeuler/io.hpp"
#include "qeuler/random.hpp"

namespace qeuler {
namespace {

using namespace qeuler::testing;

TEST(StateFormat, RoundTripsComplexState) {
  Rng rng(60);
  const DensityMatrix rho = random_bipartite_state({2, 3}, rng);
  const DensityMatrix back = io::parse_state(io::format_state(rho));
  expect_matrix_near(back.matrix(), rho.matrix(), 1e-15);
  ASSERT_TRUE(back.dims());
  EXPECT_EQ(*back.dims(), (BipartiteDims{2, 3}));
}

TEST(StateFormat, RealMatrixWithoutDims) {
  const DensityMatrix rho = io::parse_state(R"({"re": [[0.25, 0], [0, 0.75]]})");
  EXPECT_FALSE(rho.is_bipartite());
  EXPECT_NEAR(rho(1, 1).real(), 0.75, 0.0);
}

TEST(StateFormat, RejectsMalformedInput) {
  EXPECT_THROW(io::parse_state("{"), InputError);
  EXPECT_THROW(io::parse_state(R"({"re": [[1, 0], [0]]})"), InputError);
  EXPECT_THROW(io::parse_state(R"({"re": [[1, "x"], [0, 0]]})"), InputError);
  EXPECT_THROW(io::parse_state(R"({"re": [[0.5, 0], [0, 0.6]]})"), ValidationError);
  EXPECT_THROW(io::parse_state(R"({"dims": [2, 3], "re": [[0.5, 0], [0, 0.5]]})"), DimensionError);
}

TEST(StateFormat, DataFilesLoad) {
  const std::filesystem::path dir = QEULER_DATA_DIR;
  for (const char* name : {"gg.json", "ee.json", "maximally_mixed.json", "psi_minus.json",
                           "plus_thermal.json"}) {
    const DensityMatrix rho = io::read_state_file(dir / "states" / name);
    EXPECT_EQ(rho.dim(), 4) << name;
    EXPECT_TRUE(rho.is_bipartite()) << name;
  }
}

TEST(StateFormat, MissingFileIsInputError) {
  EXPECT_THROW(io::read_state_file("/nonexistent/state.json"), InputError);
}

TEST(PovmFormat, RoundTrip) {
  Rng rng(61);
  const Povm p = random_povm(3, 4, rng);
  const Povm back = io::parse_povm(io::format_povm(p));
  ASSERT_EQ(back.size(), p.size());
  for (std::size_t n = 0; n < p.size(); ++n) expect_matrix_near(back[n], p[n], 1e-15);
}

TEST(HamiltonianFormat, SingleAndPair) {
  const io::LocalHamiltonians one = io::parse_hamiltonians(R"({"re": [[1, 0], [0, 0]]})");
  expect_matrix_near(one.a.matrix(), one.b.matrix(), 0.0);
  const io::LocalHamiltonians two = io::parse_hamiltonians(
      R"({"h_a": {"re": [[2, 0], [0, 0]]}, "h_b": {"re": [[1, 0], [0, 0]]}})");
  EXPECT_DOUBLE_EQ(two.a.spread(), 2.0);
  EXPECT_DOUBLE_EQ(two.b.spread(), 1.0);
  const io::LocalHamiltonians back = io::parse_hamiltonians(io::format_hamiltonian(two.a));
  expect_matrix_near(back.a.matrix(), two.a.matrix(), 0.0);
}

TEST(ReportFormat, RoundTripIncludingNonFinite) {
  std::vector<RelationReport> reports{make_relation("a", 0.5, 1.5, 1e-9, "digest"),
                                      make_relation("b", 0.0, std::numeric_limits<double>::infinity(),
                                                    2e-3, "")};
  reports[1].near_equality = false;
  const std::string text = io::format_reports(reports);
  EXPECT_NE(text.find("\"inf\""), std::string::npos);
  const auto back = io::parse_reports(text);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[0].name, "a");
  EXPECT_DOUBLE_EQ(back[0].slack, 1.0);
  EXPECT_TRUE(std::isinf(back[1].rhs));
  ASSERT_TRUE(back[1].near_equality);
  EXPECT_FALSE(*back[1].near_equality);
}

TEST(NumberFormat, TwelveSignificantDigits) {
  EXPECT_EQ(io::format_number(0.1), "0.1");
  EXPECT_EQ(io::format_number(1.0 / 3.0), "0.333333333333");
  EXPECT_EQ(io::format_number(std::numeric_limits<double>::infinity()), "inf");
  EXPECT_EQ(io::format_number(-std::numeric_limits<double>::infinity()), "-inf");
  EXPECT_EQ(io::format_number(std::numeric_limits<double>::quiet_NaN()), "nan");
}

TEST(TrajectoryCsv, HeaderAndRowWidth) {
  const DensityMatrix rho = analytic_steady_state(0.5, ModelParams::collective(1.0, 10.0));
  std::ostringstream out;
  io::write_trajectory_csv(out, {TrajectoryPoint{0.0, rho, 1.0, 0.0}});
  std::istringstream in(out.str());
  std::string header, row;
  std::getline(in, header);
  std::getline(in, row);
  EXPECT_EQ(header.rfind("t,re_00,im_00,re_01", 0), 0u);
  EXPECT_NE(header.find(",trace,min_eigenvalue"), std::string::npos);
  EXPECT_EQ(std::count(header.begin(), header.end(), ','), 34);
  EXPECT_EQ(std::count(row.begin(), row.end(), ','), 34);
}

}  // namespace
}  // namespace qeuler
