// Copyright 2026 The pcscore Authors.
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

#ifndef PCSCORE_ERRORS_H_
#define PCSCORE_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pcscore {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent manifest input. line() is 1-based, 0 if unknown.
class ManifestError : public Error {
 public:
  ManifestError(const std::string& message, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + message : message),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// An alignment path that does not describe the sequences it claims to.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// A word token collides with the literal mask label.
class InputCollisionError : public Error {
 public:
  using Error::Error;
};

// A score whose denominator is empty (e.g. F1 over an empty subset).
class UndefinedScoreError : public Error {
 public:
  using Error::Error;
};

// Precondition of an operation violated by the caller's data.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Reports or subsets produced under incompatible settings.
class MismatchError : public Error {
 public:
  using Error::Error;
};

}  // namespace pcscore

#endif  // PCSCORE_ERRORS_H_
