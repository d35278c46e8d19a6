// Copyright 2026 The simroot Authors
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

#ifndef SIMROOT_ERROR_HPP
#define SIMROOT_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace simroot {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two operands of a binary operation live on different ground sets.
class GroundMismatch : public Error {
 public:
  using Error::Error;
};

/// A digit lies outside the ground set it was supposed to belong to.
class GroundError : public Error {
 public:
  using Error::Error;
};

/// Two components (or a graph's pairs) share a digit.
class OverlapError : public Error {
 public:
  using Error::Error;
};

/// Exponent k must be at least 1.
class KInvalid : public Error {
 public:
  using Error::Error;
};

/// An exhaustive procedure was asked to run above its size cap.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::size_t requested, std::size_t cap)
      : Error(what + ": size " + std::to_string(requested) +
              " exceeds cap " + std::to_string(cap)),
        requested_(requested),
        cap_(cap) {}

  std::size_t requested() const noexcept { return requested_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t requested_;
  std::size_t cap_;
};

/// Malformed element notation. `position()` is a byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class DuplicateDigit : public ParseError {
 public:
  using ParseError::ParseError;
};

class EmptyComponent : public ParseError {
 public:
  using ParseError::ParseError;
};

}  // namespace simroot

#endif  // SIMROOT_ERROR_HPP
