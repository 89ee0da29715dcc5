// Copyright 2026 The ldpcpd Authors.
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

#ifndef LDPCPD_ERROR_H_
#define LDPCPD_ERROR_H_

#include <stdexcept>
#include <string>

namespace ldpcpd {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A parameter lies outside its mathematical domain (negative budget,
// Renyi order below one, pmf that does not sum to one, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Two objects that must share an alphabet do not.
class DimensionError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Observed data is inconsistent with the model it is scored against.
class DataError : public Error {
 public:
  using Error::Error;
};

}  // namespace ldpcpd

#endif  // LDPCPD_ERROR_H_
