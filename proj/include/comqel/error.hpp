// Copyright 2026 The comqel Authors

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
 * @file
 * Exception types shared by all comqel modules.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace comqel {

/// Unsupported configuration (qubit counts, hyperparameters, config files).
class ConfigError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Caller broke a precondition (index out of range, length mismatch).
class UsageError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Input outside the normalized domain [-1, 1].
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Non-finite value encountered during training or ascent.
class NumericalError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace comqel
