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

#include "qeuler/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "qeuler/error.hpp"

namespace qeuler::io {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

ComplexMatrix parse_matrix(const json& j) {
  if (!j.is_object() || !j.contains("re")) throw InputError("matrix needs an \"re\" array");
  const json& re = j.at("re");
  if (!re.is_array() || re.empty()) throw InputError("\"re\" must be a non-empty array of rows");
  const auto rows = static_cast<Eigen::Index>(re.size());
  const auto cols = static_cast<Eigen::Index>(re.front().size());
  const json* im = j.contains("im") ? &j.at("im") : nullptr;
  if (im && (!im->is_array() || static_cast<Eigen::Index>(im->size()) != rows)) {
    throw InputError("\"im\" must have the same shape as \"re\"");
  }
  ComplexMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const json& row = re.at(static_cast<std::size_t>(i));
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw InputError("matrix rows differ in length");
    }
    const json* im_row = im ? &im->at(static_cast<std::size_t>(i)) : nullptr;
    if (im_row && (!im_row->is_array() || static_cast<Eigen::Index>(im_row->size()) != cols)) {
      throw InputError("\"im\" must have the same shape as \"re\"");
    }
    for (Eigen::Index k = 0; k < cols; ++k) {
      const auto idx = static_cast<std::size_t>(k);
      if (!row.at(idx).is_number() || (im_row && !im_row->at(idx).is_number())) {
        throw InputError("matrix entries must be numbers");
      }
      m(i, k) = Complex(row.at(idx).get<double>(), im_row ? im_row->at(idx).get<double>() : 0.0);
    }
  }
  return m;
}

json matrix_json(const ComplexMatrix& m) {
  json re = json::array();
  json im = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json re_row = json::array();
    json im_row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      re_row.push_back(m(i, k).real());
      im_row.push_back(m(i, k).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  return json{{"re", std::move(re)}, {"im", std::move(im)}};
}

json number_json(double x) {
  if (std::isfinite(x)) return x;
  if (std::isnan(x)) return "nan";
  return x > 0 ? "inf" : "-inf";
}

double number_from_json(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  }
  throw InputError("expected a number");
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
  if (!out) throw InputError("write failed for " + path.string());
}

DensityMatrix parse_state(const std::string& json_text) {
  const json j = parse_json(json_text);
  ComplexMatrix m = parse_matrix(j);
  std::optional<BipartiteDims> dims;
  if (j.contains("dims")) {
    const json& d = j.at("dims");
    if (!d.is_array() || d.size() != 2 || !d[0].is_number_integer() || !d[1].is_number_integer()) {
      throw InputError("\"dims\" must be a pair of integers");
    }
    dims = BipartiteDims{d[0].get<Eigen::Index>(), d[1].get<Eigen::Index>()};
  }
  return DensityMatrix(std::move(m), dims);
}

std::string format_state(const DensityMatrix& rho) {
  json j = matrix_json(rho.matrix());
  if (rho.dims()) j["dims"] = {rho.dims()->a, rho.dims()->b};
  return j.dump(2) + "\n";
}

DensityMatrix read_state_file(const std::filesystem::path& path) {
  return parse_state(read_text_file(path));
}

void write_state_file(const std::filesystem::path& path, const DensityMatrix& rho) {
  write_text_file(path, format_state(rho));
}

Povm parse_povm(const std::string& json_text) {
  const json j = parse_json(json_text);
  if (!j.is_array() || j.empty()) throw InputError("POVM file must be a non-empty array");
  std::vector<ComplexMatrix> ops;
  for (const auto& entry : j) ops.push_back(parse_matrix(entry));
  return Povm(std::move(ops));
}

std::string format_povm(const Povm& povm) {
  json j = json::array();
  for (const auto& m : povm.operators()) j.push_back(matrix_json(m));
  return j.dump(2) + "\n";
}

Povm read_povm_file(const std::filesystem::path& path) { return parse_povm(read_text_file(path)); }

LocalHamiltonians parse_hamiltonians(const std::string& json_text) {
  const json j = parse_json(json_text);
  if (j.is_object() && j.contains("re")) {
    Hamiltonian h(parse_matrix(j));
    return {h, h};
  }
  if (j.is_object() && j.contains("h_a") && j.contains("h_b")) {
    return {Hamiltonian(parse_matrix(j.at("h_a"))), Hamiltonian(parse_matrix(j.at("h_b")))};
  }
  throw InputError("Hamiltonian file needs \"re\"/\"im\" or \"h_a\"/\"h_b\"");
}

LocalHamiltonians read_hamiltonian_file(const std::filesystem::path& path) {
  return parse_hamiltonians(read_text_file(path));
}

std::string format_hamiltonian(const Hamiltonian& h) { return matrix_json(h.matrix()).dump(2) + "\n"; }

std::string format_reports(const std::vector<RelationReport>& reports) {
  json j = json::array();
  for (const auto& r : reports) {
    json e{{"name", r.name},
           {"lhs", number_json(r.lhs)},
           {"rhs", number_json(r.rhs)},
           {"slack", number_json(r.slack)},
           {"satisfied", r.satisfied},
           {"tolerance", r.tolerance},
           {"inputs_digest", r.inputs_digest}};
    if (r.near_equality) e["near_equality"] = *r.near_equality;
    j.push_back(std::move(e));
  }
  return j.dump(2) + "\n";
}

std::vector<RelationReport> parse_reports(const std::string& json_text) {
  const json j = parse_json(json_text);
  if (!j.is_array()) throw InputError("report file must be an array");
  std::vector<RelationReport> out;
  for (const auto& e : j) {
    RelationReport r;
    r.name = e.at("name").get<std::string>();
    r.lhs = number_from_json(e.at("lhs"));
    r.rhs = number_from_json(e.at("rhs"));
    r.slack = number_from_json(e.at("slack"));
    r.satisfied = e.at("satisfied").get<bool>();
    r.tolerance = e.at("tolerance").get<double>();
    r.inputs_digest = e.at("inputs_digest").get<std::string>();
    if (e.contains("near_equality")) r.near_equality = e.at("near_equality").get<bool>();
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

void write_trajectory_csv(std::ostream& out, const std::vector<TrajectoryPoint>& trajectory) {
  if (trajectory.empty()) return;
  const Eigen::Index d = trajectory.front().rho.dim();
  out << "t";
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index k = 0; k < d; ++k) out << ",re_" << i << k << ",im_" << i << k;
  }
  out << ",trace,min_eigenvalue\n";
  for (const auto& p : trajectory) {
    out << format_number(p.t);
    const ComplexMatrix& m = p.rho.matrix();
    for (Eigen::Index i = 0; i < d; ++i) {
      for (Eigen::Index k = 0; k < d; ++k) {
        out << ',' << format_number(m(i, k).real()) << ',' << format_number(m(i, k).imag());
      }
    }
    out << ',' << format_number(p.trace) << ',' << format_number(p.min_eigenvalue) << '\n';
  }
}

}  // namespace qeuler::io
