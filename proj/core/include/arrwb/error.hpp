// Copyright 2026 The Authors.
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

#ifndef ARRWB_ERROR_HPP_
#define ARRWB_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace arrwb {

// Base class for every error raised by the workbench.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RingMismatch : public Error {
 public:
  RingMismatch() : Error("polynomials belong to different rings") {}
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by the zero polynomial") {}
};

class InvalidArrangement : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Raised when a Groebner computation exceeds its configured step budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace arrwb

#endif  // ARRWB_ERROR_HPP_
