// Copyright 2026 The QTVR Authors
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

#ifndef QTVR_ERRORS_H_
#define QTVR_ERRORS_H_

#include <stdexcept>
#include <string>

namespace qtvr {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (negative Kimble factor,
/// non-positive frequency, efficiency out of range, ...).
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

/// The Bell-readout Gram matrix is singular or too ill-conditioned to solve.
class DegenerateCatalogError : public Error {
 public:
  using Error::Error;
};

/// The post-filter removes (almost) all of the signal, so the strain
/// sensitivity is undefined.
class SignalLossError : public Error {
 public:
  using Error::Error;
};

/// A computed quantity broke an invariant it must satisfy by construction,
/// e.g. a spectral density came out negative.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Second-order phase-noise averaging used outside its range of validity.
class ModelValidityError : public Error {
 public:
  using Error::Error;
};

/// A scheme pipeline failed while evaluating a curve.
class ComputationError : public Error {
 public:
  using Error::Error;
};

/// Configuration file problem. Carries the offending key and line number
/// (0 when the problem is not tied to a single line).
class ConfigError : public Error {
 public:
  ConfigError(const std::string& message, std::string key = {}, int line = 0);

  const std::string& key() const { return key_; }
  int line() const { return line_; }

 private:
  std::string key_;
  int line_;
};

}  // namespace qtvr

#endif  // QTVR_ERRORS_H_
