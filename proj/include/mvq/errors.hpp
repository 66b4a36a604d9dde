// Copyright 2026 The mvq Authors
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

namespace mvq {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Requested space is outside the supported mode count.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// Operands live on different Fock spaces or have mismatched shapes.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition was violated by the caller.
class ContractError : public Error {
 public:
  using Error::Error;
};

/// An internal identity that must hold did not (basis not orthonormal,
/// block structure broken, ...).
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// A computation would exceed its work budget.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// A state has weight outside the logical subspace it is supposed to occupy.
class LeakageError : public Error {
 public:
  using Error::Error;
};

/// The two-qubit protocol could not locate its coupling beat.
class ProtocolError : public Error {
 public:
  using Error::Error;
};

}  // namespace mvq
