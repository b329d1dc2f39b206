// Copyright 2026 The RepairForge Authors
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

#ifndef REPAIRFORGE_ERRORS_H_
#define REPAIRFORGE_ERRORS_H_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace repairforge {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::string source_name, int line, int column,
              std::string message);

  const std::string& source_name() const { return source_name_; }
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::string source_name_;
  int line_;
  int column_;
  std::string message_;
};

// A program that parses but violates a static rule (duplicate function,
// call to an unknown function, ...).
class ValidityError : public Error {
 public:
  using Error::Error;
};

class UnknownStatementError : public Error {
 public:
  explicit UnknownStatementError(std::int64_t id);
  std::int64_t id() const { return id_; }

 private:
  std::int64_t id_;
};

class InvalidEditError : public Error {
 public:
  using Error::Error;
};

class LocationNotExecutedError : public Error {
 public:
  explicit LocationNotExecutedError(std::int64_t id);
};

class ManifestError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class DuplicateJobError : public Error {
 public:
  using Error::Error;
};

}  // namespace repairforge

#endif  // REPAIRFORGE_ERRORS_H_
