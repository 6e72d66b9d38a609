// Copyright 2026 The defall Authors.
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

#ifndef DEFALL_ERROR_H_
#define DEFALL_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace defall {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input document. `line()` is 1-based, 0 when not line-specific.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(line == 0 ? message
                        : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Tree-only operation called on a graph that is not a tree.
class NotATreeError : public PreconditionError {
 public:
  NotATreeError() : PreconditionError("graph is not a tree") {}
};

// Exhaustive search refused because the instance exceeds the configured cap.
class CapExceededError : public Error {
 public:
  using Error::Error;
};

}  // namespace defall

#endif  // DEFALL_ERROR_H_
