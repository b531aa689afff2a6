// Copyright 2026 The pielimits Authors
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

namespace pielimits {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (bad field, wrong axis ordering, missing key).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A numeric argument lies outside the domain of the function.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Relative entropy is infinite: p puts mass where q has none. Marks an
/// unusable operating point, which is not the same as zero information.
class DivergenceInfinite : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Requested computation exceeds the size the exact method supports.
class InfeasibleSize : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace pielimits
