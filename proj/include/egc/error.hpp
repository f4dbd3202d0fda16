// Copyright 2026 The EGC Concierge Authors.
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

#ifndef EGC_ERROR_HPP_
#define EGC_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace egc {

// Base class of every domain error raised by the library. The CLI maps these
// to exit code 2 and the service to 4xx responses.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// No predicate could be matched in an utterance.
class ParseFailure : public Error {
 public:
  using Error::Error;
};

// A data file row was malformed or violated a range/uniqueness rule.
class LoadError : public Error {
 public:
  LoadError(const std::string &source, std::size_t row, const std::string &what)
      : Error(source + ":" + std::to_string(row) + ": " + what), row_(row) {}

  std::size_t row() const { return row_; }

 private:
  std::size_t row_;
};

class LookupError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class FitError : public Error {
 public:
  using Error::Error;
};

class NormalizationError : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Optimistic write rejected because the store moved on since the caller read it.
class VersionConflict : public Error {
 public:
  using Error::Error;
};

// Raised by live hit-count backends; callers fall back to the fixture table.
class TransportError : public Error {
 public:
  using Error::Error;
};

}  // namespace egc

#endif  // EGC_ERROR_HPP_
