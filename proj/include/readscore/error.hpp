// Copyright 2026 The readscore Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef READSCORE_ERROR_HPP
#define READSCORE_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace readscore {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A record in an input file could not be parsed. Carries the file and the
/// 1-based line number; what() reads "file:line: message".
class ParseError : public Error {
 public:
  ParseError(std::string file, std::size_t line, const std::string& message)
      : Error(file + ":" + std::to_string(line) + ": " + message),
        file_(std::move(file)),
        line_(line) {}

  const std::string& file() const noexcept { return file_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string file_;
  std::size_t line_;
};

/// A value parsed fine but violates a domain invariant (score outside [0,1],
/// duplicate key, response off the 5-point scale, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Cross-record consistency failure while assembling a resource, e.g. a
/// pointer to a synset that does not exist.
class LoadError : public Error {
 public:
  using Error::Error;
};

/// Statistical routine called outside its domain (too few rows, collinear
/// design, zero variance).
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace readscore

#endif  // READSCORE_ERROR_HPP
