// Copyright 2026 The jetflow Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef JETFLOW_ERRORS_HPP_
#define JETFLOW_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace jetflow {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed map expression. `position` is a 0-based character offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Evaluation left the domain of analyticity (division by zero, pole at the
// expansion point, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Shapes or orders of the arguments do not fit together.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// The regression problem does not determine the requested block. Carries the
// full singular spectrum of the design matrix.
class IllPosedError : public Error {
 public:
  IllPosedError(const std::string& what, std::vector<double> singular_values)
      : Error(what), singular_values_(std::move(singular_values)) {}
  const std::vector<double>& singular_values() const {
    return singular_values_;
  }

 private:
  std::vector<double> singular_values_;
};

// High-precision factorization hit an exact zero pivot; retry with more bits.
class PrecisionExhausted : public Error {
 public:
  PrecisionExhausted(const std::string& what, int suggested_bits)
      : Error(what), suggested_bits_(suggested_bits) {}
  int suggested_bits() const { return suggested_bits_; }

 private:
  int suggested_bits_;
};

// Matrix has an eigenvalue on the closed negative real axis, so the principal
// logarithm is undefined.
class SpectrumError : public Error {
 public:
  using Error::Error;
};

class QuadratureError : public Error {
 public:
  using Error::Error;
};

// ODE solution left every bounded set or the step size underflowed.
class FlowBlowUp : public Error {
 public:
  using Error::Error;
};

}  // namespace jetflow

#endif  // JETFLOW_ERRORS_HPP_
