// Copyright 2026 The GreenEdge Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace greenedge {

// Input data violates a documented invariant (bad share, negative factor,
// inconsistent layer chain, ...). CLI maps this to exit code 3.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// A name could not be resolved against a loaded database.
class ResolutionError : public ValidationError {
 public:
  explicit ResolutionError(const std::string& what) : ValidationError(what) {}
};

// Requested demand exceeds a device's rated capability.
class InfeasibleDemandError : public ValidationError {
 public:
  explicit InfeasibleDemandError(const std::string& what) : ValidationError(what) {}
};

// A database or config file could not be read or parsed. Exit code 2.
class LoadError : public std::runtime_error {
 public:
  explicit LoadError(const std::string& what) : std::runtime_error(what) {}
};

// Two devices come from different process-LCA studies and may not be
// compared without an explicit override. Exit code 4.
class IncompatibilityError : public std::runtime_error {
 public:
  explicit IncompatibilityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace greenedge
