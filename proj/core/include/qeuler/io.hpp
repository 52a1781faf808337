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

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "qeuler/density_matrix.hpp"
#include "qeuler/dissipation.hpp"
#include "qeuler/hamiltonian.hpp"
#include "qeuler/measurement.hpp"
#include "qeuler/relations.hpp"

// File formats
//
// State:        {"dims": [d_A, d_B], "re": [[...], ...], "im": [[...], ...]}
//               rows are listed in order; "dims" may be omitted for an
//               unlabelled state and "im" for a real matrix.
// POVM:         [ {"re": ..., "im": ...}, ... ]  one entry per outcome.
// Hamiltonian:  {"re": ..., "im": ...}  used for both partitions, or
//               {"h_a": {...}, "h_b": {...}}.
// Reports:      [ {"name", "lhs", "rhs", "slack", "satisfied", "tolerance",
//                  "inputs_digest"[, "near_equality"]}, ... ]
//               non-finite numbers are written as the strings "inf"/"-inf"/"nan".
// Trajectory:   CSV header t, re_00, im_00, re_01, ..., trace, min_eigenvalue.

namespace qeuler::io {

DensityMatrix parse_state(const std::string& json_text);
std::string format_state(const DensityMatrix& rho);
DensityMatrix read_state_file(const std::filesystem::path& path);
void write_state_file(const std::filesystem::path& path, const DensityMatrix& rho);

Povm parse_povm(const std::string& json_text);
std::string format_povm(const Povm& povm);
Povm read_povm_file(const std::filesystem::path& path);

struct LocalHamiltonians {
  Hamiltonian a;
  Hamiltonian b;
};
LocalHamiltonians parse_hamiltonians(const std::string& json_text);
LocalHamiltonians read_hamiltonian_file(const std::filesystem::path& path);
std::string format_hamiltonian(const Hamiltonian& h);

std::string format_reports(const std::vector<RelationReport>& reports);
std::vector<RelationReport> parse_reports(const std::string& json_text);

void write_trajectory_csv(std::ostream& out, const std::vector<TrajectoryPoint>& trajectory);

/// 12 significant digits, '.' decimal separator, "inf"/"-inf"/"nan" for
/// non-finite values.
std::string format_number(double x);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace qeuler::io
