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
#include <string>
#include <vector>

#include "qeuler/correlations.hpp"

namespace qeuler {

/// Outcome of one randomized property suite.
///
/// `worst` is the smallest slack seen for inequality suites and the largest
/// deviation for identity suites; `threshold` is the pass limit on it.
struct SuiteResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  double worst = 0.0;
  double threshold = 0.0;
  bool worst_is_deviation = false;

  bool passed() const { return cases > 0 && failures == 0; }
};

struct VerifyOptions {
  std::uint64_t seed = 20221;
  int count = 500;
  GridSpec grid;
};

std::vector<std::string> suite_names();

/// Throws InputError for an unknown name.
SuiteResult run_suite(const std::string& name, const VerifyOptions& options);

/// Every suite, concurrently; results follow suite_names() order.
std::vector<SuiteResult> run_verification(const VerifyOptions& options);

std::string format_verification(const std::vector<SuiteResult>& results);

}  // namespace qeuler
