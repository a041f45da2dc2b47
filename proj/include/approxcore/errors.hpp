// Copyright 2026 The approxcore Authors.
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

#ifndef APPROXCORE_ERRORS_HPP
#define APPROXCORE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace approxcore {

/// A mathematical invariant that must hold for optimal inputs was violated.
/// Always indicates a bug upstream of the throwing stage.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An exhaustive oracle refused to run because the input is past its
/// configured size bound.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

inline void require(bool condition, const std::string& message) {
  if (!condition) throw InvariantError(message);
}

}  // namespace detail
}  // namespace approxcore

#endif  // APPROXCORE_ERRORS_HPP
