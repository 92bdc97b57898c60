// Copyright 2026 The weylmul Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace weyl {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class FieldMismatch : public Error {
 public:
  FieldMismatch() : Error("operands belong to different coefficient fields") {}
};

// The field characteristic does not exceed a factorial/binomial argument the
// algorithm must invert.
class CharacteristicTooSmall : public Error {
 public:
  using Error::Error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class BlockCountMismatch : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

class InconsistentMatrix : public Error {
 public:
  using Error::Error;
};

class DuplicatePoints : public Error {
 public:
  DuplicatePoints() : Error("evaluation points are not pairwise distinct") {}
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace weyl
