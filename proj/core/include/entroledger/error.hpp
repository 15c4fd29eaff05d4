// Copyright 2026 The entroledger Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ENTROLEDGER_ERROR_HPP
#define ENTROLEDGER_ERROR_HPP

#include <stdexcept>
#include <string>

namespace entroledger {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotHermitian : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Composite Hilbert-space dimension above the configured cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A matrix that fails the density-matrix invariants (trace, positivity).
class InvalidState : public Error {
 public:
  using Error::Error;
};

class InvalidCoarseGraining : public Error {
 public:
  using Error::Error;
};

class IncompatibleDimension : public Error {
 public:
  using Error::Error;
};

/// Entropy target above ln(dim).
class TargetOutOfRange : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A post-hoc numerical consistency check failed.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace entroledger

#endif  // ENTROLEDGER_ERROR_HPP
