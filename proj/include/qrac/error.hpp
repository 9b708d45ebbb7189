// Copyright 2026 The qrac-sim Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file error.hpp
 * Exception types thrown by the qrac library.
 */
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qrac {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A dimension or alphabet size of zero (or otherwise unusable) was given.
class InvalidDimension : public Error {
  public:
    using Error::Error;
};

/// Two objects that must share a dimension do not.
class DimensionMismatch : public Error {
  public:
    using Error::Error;
};

/// A dit, question index, outcome or parameter lies outside its domain.
class OutOfRange : public Error {
  public:
    using Error::Error;
};

/// A vector or table violates a structural invariant (norm, totality, ...).
class InvalidValue : public Error {
  public:
    using Error::Error;
};

/// The requested operation is not defined for these parameters.
class Unsupported : public Error {
  public:
    using Error::Error;
};

/// Malformed text input (strategy tables).
class ParseError : public Error {
  public:
    using Error::Error;
};

/**
 * @brief Exhaustive search would exceed the configured budget.
 *
 * Carries the number of decoder tuples the search would have had to examine.
 */
class InfeasibleSize : public Error {
  public:
    InfeasibleSize(std::uint64_t required, std::uint64_t budget)
        : Error("exhaustive search needs " + std::to_string(required) +
                " decoder tuples, budget allows " + std::to_string(budget)),
          required_(required), budget_(budget) {}

    [[nodiscard]] std::uint64_t required() const noexcept { return required_; }
    [[nodiscard]] std::uint64_t budget() const noexcept { return budget_; }

  private:
    std::uint64_t required_;
    std::uint64_t budget_;
};

} // namespace qrac
