// Copyright 2026 The simdense Authors
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

namespace simdense {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unknown, duplicated or colliding qubit label.
class LabelError : public Error {
 public:
  using Error::Error;
};

/// Shapes or qubit counts that do not fit together.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A value that violates a domain invariant (non-unit norm, non-unitary
/// matrix, non-density matrix, malformed bit string, ...).
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// A protocol reached a state its own construction rules out, e.g. a
/// pre-measurement state with weight outside the measured family's span.
class ProtocolViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace simdense
