// Copyright 2026 The randdual Authors
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

namespace randdual {

/// Malformed or inconsistent user configuration (CLI flags, JSON files).
class ConfigError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// An object failed a physical validity check (CPTP, unitarity, PSD).
class ValidationError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A request would exceed the configured dimension or memory budget.
class ResourceError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace randdual
