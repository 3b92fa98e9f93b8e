// Copyright 2026 The HealSim Authors
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

#ifndef HEALSIM_ERROR_HPP_
#define HEALSIM_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace healsim {

enum class ErrorCode {
  kInvalidArgument,
  kUnphysical,
  kParse,
  kSchema,
  kIo,
  kNotConverged,
  kNumerical,
};

std::string_view to_string(ErrorCode code);

// Base exception for every failure raised by the library. Outcomes that are
// legitimate model states (no heal, timeout, no path) are reported through
// status enums instead.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error(ErrorCode::kParse, message + " at line " + std::to_string(line) +
                                     ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

class IoError : public Error {
 public:
  IoError(const std::string& message, std::string path)
      : Error(ErrorCode::kIo, message + ": " + path), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

class NotConvergedError : public Error {
 public:
  NotConvergedError(const std::string& message, double last_residual)
      : Error(ErrorCode::kNotConverged, message),
        last_residual_(last_residual) {}

  double last_residual() const noexcept { return last_residual_; }

 private:
  double last_residual_;
};

}  // namespace healsim

#endif  // HEALSIM_ERROR_HPP_
