// Copyright 2026 The cdfge Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <stdexcept>

namespace cdfge {

/// Numeric or domain violation (CLI exit code 3).
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Malformed or inconsistent configuration (CLI exit code 2).
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A detector finished without locating a jump (CLI exit code 4).
class NotDetected : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace cdfge
