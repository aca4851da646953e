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

#include "discourse_lens/error.h"

#include <string>
#include <utility>

namespace discourse_lens {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIoError: return "IO_ERROR";
    case ErrorCode::kSchemaError: return "SCHEMA_ERROR";
    case ErrorCode::kLabelError: return "LABEL_ERROR";
    case ErrorCode::kConfigInvalid: return "CONFIG_INVALID";
    case ErrorCode::kInvalidPair: return "INVALID_PAIR";
    case ErrorCode::kConfigMismatch: return "CONFIG_MISMATCH";
    case ErrorCode::kValidationFailed: return "VALIDATION_FAILED";
  }
  return "UNKNOWN";
}

SchemaError::SchemaError(std::string source, std::size_t line, std::size_t column,
                         std::string reason)
    : Error(ErrorCode::kSchemaError,
            source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + reason),
      source_(std::move(source)),
      line_(line),
      column_(column),
      reason_(std::move(reason)) {}

LabelError::LabelError(std::string source, std::size_t line, std::string label)
    : Error(ErrorCode::kLabelError,
            source + ":" + std::to_string(line) + ": unknown label \"" + label + "\""),
      source_(std::move(source)),
      line_(line),
      label_(std::move(label)) {}

}  // namespace discourse_lens
