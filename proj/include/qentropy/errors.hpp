// Copyright 2026 The qentropy Authors
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

#ifndef QENTROPY_ERRORS_HPP
#define QENTROPY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qentropy {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParameterOutOfRange : public Error {
 public:
  using Error::Error;
};

class AngleOutOfRange : public ParameterOutOfRange {
 public:
  using ParameterOutOfRange::ParameterOutOfRange;
};

class CoherenceOutOfRange : public ParameterOutOfRange {
 public:
  using ParameterOutOfRange::ParameterOutOfRange;
};

class StepSizeInvalid : public Error {
 public:
  using Error::Error;
};

/// Composition of two channels with different thermal weights p.
class MismatchedTemperature : public Error {
 public:
  using Error::Error;
};

/// Raised for infinity minus infinity in entropy bookkeeping.
class IndeterminateError : public Error {
 public:
  using Error::Error;
};

/// A computed quantity violates a guaranteed identity beyond numerical noise.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

class ConfigInvalid : public Error {
 public:
  using Error::Error;
};

class IoFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace qentropy

#endif  // QENTROPY_ERRORS_HPP
