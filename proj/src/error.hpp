// Copyright 2026 The isharp authors
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

namespace isharp {

// Exception hierarchy. Every category maps onto one C-API status code;
// keep the set in sync with ish_status in include/isharp/isharp.h.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Raised when a computation needs the V/W shape at the exceptional slope
// but the invariants carry shape Unknown.
class ShapeRequired : public Error {
 public:
  using Error::Error;
};

class InsufficientRange : public Error {
 public:
  using Error::Error;
};

class NotRealizable : public Error {
 public:
  using Error::Error;
};

// A delta = -1 propagation step tried to remove a dimension from an empty
// graded summand.
class InfeasibleStep : public Error {
 public:
  using Error::Error;
};

class UnknownKnot : public Error {
 public:
  using Error::Error;
};

class UnknownField : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace isharp
