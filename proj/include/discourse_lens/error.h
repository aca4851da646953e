// Copyright 2026 The discourse-lens Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DISCOURSE_LENS_ERROR_H_
#define DISCOURSE_LENS_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace discourse_lens {

enum class ErrorCode {
  kIoError,
  kSchemaError,
  kLabelError,
  kConfigInvalid,
  kInvalidPair,
  kConfigMismatch,
  kValidationFailed,
};

std::string_view error_code_name(ErrorCode code);

// Base of every failure the library reports. Anything else escaping a public
// entry point is a bug.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& message)
      : Error(ErrorCode::kIoError, message) {}
};

// Malformed input. `line` and `column` are 1-based; `source` names the file.
class SchemaError : public Error {
 public:
  SchemaError(std::string source, std::size_t line, std::size_t column,
              std::string reason);

  const std::string& source() const { return source_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& reason() const { return reason_; }

 private:
  std::string source_;
  std::size_t line_;
  std::size_t column_;
  std::string reason_;
};

// Unknown label under strict parsing.
class LabelError : public Error {
 public:
  LabelError(std::string source, std::size_t line, std::string label);

  const std::string& source() const { return source_; }
  std::size_t line() const { return line_; }
  const std::string& label() const { return label_; }

 private:
  std::string source_;
  std::size_t line_;
  std::string label_;
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& message)
      : Error(ErrorCode::kConfigInvalid, message) {}
};

class InvalidPairError : public Error {
 public:
  explicit InvalidPairError(const std::string& message)
      : Error(ErrorCode::kInvalidPair, message) {}
};

class ConfigMismatchError : public Error {
 public:
  explicit ConfigMismatchError(const std::string& message)
      : Error(ErrorCode::kConfigMismatch, message) {}
};

}  // namespace discourse_lens

#endif  // DISCOURSE_LENS_ERROR_H_
