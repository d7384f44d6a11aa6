// Copyright 2026 The twalg Authors
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

#ifndef TWALG_ERRORS_HPP_
#define TWALG_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace twalg {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands have incompatible shapes.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A scheme document or adjacency list violates an axiom.
class InvalidSchemeError : public Error {
 public:
  using Error::Error;
};

// Some minimal polynomial has a root outside the rationals.
class IrrationalEigenvalueError : public Error {
 public:
  using Error::Error;
};

// No generic central element split into distinct rational factors.
class NonSplitCenterError : public Error {
 public:
  using Error::Error;
};

// An isotypic ideal has non-square dimension or a multiplicity is fractional.
class WedderburnError : public Error {
 public:
  using Error::Error;
};

// A computed object failed an exact self-check.
class VerificationError : public Error {
 public:
  using Error::Error;
};

// Input is larger than a configured guard allows.
class GuardError : public Error {
 public:
  using Error::Error;
};

// Scheme spec text does not match the grammar.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace twalg

#endif  // TWALG_ERRORS_HPP_
