// Copyright 2026 The opmivp Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace opmivp {

/// Base class for every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input: expressions, config files, option values.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Lexing or parsing failure inside an expression. `position` is a 0-based
/// character offset into the source text.
class ParseError : public InputError {
 public:
  ParseError(const std::string& message, std::size_t position)
      : InputError(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A config file entry is missing, unknown, or has an invalid value.
class ConfigError : public InputError {
 public:
  ConfigError(const std::string& key, const std::string& message)
      : InputError("config key '" + key + "': " + message), key_(key) {}

  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

/// Requested truncation order exceeds the configured maximum.
class OrderTooLarge : public InputError {
 public:
  using InputError::InputError;
};

/// Operands built for different truncation orders.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Singular systems, non-finite quadrature samples, step-size underflow.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace opmivp
