// Copyright 2026 The gbit Authors
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

namespace gbit {

/// Raised when an argument violates an operation's precondition
/// (dimension mismatch, non-unit vector, non-orthogonal matrix, ...).
class InvalidInput : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an operation exists only for particular ball dimensions.
class UnsupportedDimension : public InvalidInput {
  public:
    using InvalidInput::InvalidInput;
};

/// Raised by iterative diagnostics that hit their round cap.
class NotConverged : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace gbit
