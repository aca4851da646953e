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

#ifndef DISCOURSE_LENS_SRC_TEXT_UTIL_H_
#define DISCOURSE_LENS_SRC_TEXT_UTIL_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace discourse_lens::internal {

inline bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

// Byte offset of the first ill-formed UTF-8 sequence, or nullopt.
std::optional<std::size_t> first_invalid_utf8(std::string_view bytes);

// 1-based (line, column) of a byte offset.
struct TextPosition {
  std::size_t line = 1;
  std::size_t column = 1;
};
TextPosition position_of(std::string_view text, std::size_t offset);

// Parses a non-negative decimal integer without sign or whitespace.
std::optional<std::size_t> parse_index(std::string_view text);

}  // namespace discourse_lens::internal

#endif  // DISCOURSE_LENS_SRC_TEXT_UTIL_H_
