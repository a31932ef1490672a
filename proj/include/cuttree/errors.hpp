// Copyright 2026 The cuttree Authors
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

namespace cuttree {

/// Malformed arguments: out-of-range vertices, empty cut sides, bad partitions.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed graph or tree files.
class FormatError : public InputError {
 public:
  using InputError::InputError;
};

/// A caller-guaranteed precondition (e.g. "these cuts cross") does not hold.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The input is well-formed but outside the domain an algorithm supports,
/// e.g. a non-trivial min-cut tree for a graph with edge connectivity 2.
class UnsupportedInput : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exhaustive routines refuse graphs above their vertex limit.
class SizeRefusal : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A structural invariant failed during construction. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cuttree
