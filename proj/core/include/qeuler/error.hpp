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

#include <stdexcept>
#include <string>

namespace qeuler {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not agree (matrix sizes, POVM vs state, bipartite labels).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A bipartite operation was requested on a state without (d_A, d_B) labels.
class MissingDimsError : public DimensionError {
 public:
  using DimensionError::DimensionError;
};

/// An object failed its invariants (trace, Hermiticity, positivity, completeness).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A thermodynamic relation was requested for a state that is not locally thermal.
class NotLocallyThermalError : public Error {
 public:
  using Error::Error;
};

/// The master-equation integrator left the physical state space.
class IntegrationError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file or configuration.
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace qeuler
