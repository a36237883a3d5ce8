// Copyright 2026 The liftdemo Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace liftdemo {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class UnreachableWaypoint : public Error {
 public:
  UnreachableWaypoint(std::size_t waypoint, const std::string& what)
      : Error(what), waypoint_(waypoint) {}
  std::size_t waypoint() const { return waypoint_; }

 private:
  std::size_t waypoint_;
};

class EmptyResult : public Error {
 public:
  using Error::Error;
};

class DegenerateSegment : public Error {
 public:
  using Error::Error;
};

class OverlapError : public Error {
 public:
  using Error::Error;
};

class ConstraintViolation : public Error {
 public:
  using Error::Error;
};

class InvalidCutoff : public Error {
 public:
  using Error::Error;
};

class InvalidWindow : public Error {
 public:
  using Error::Error;
};

class TooShort : public Error {
 public:
  using Error::Error;
};

/// Malformed input file. `line` is 1-based; 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class VersionMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace liftdemo
