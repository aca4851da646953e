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

// Minimal RFC-4180 reader and writer.

#ifndef DISCOURSE_LENS_SRC_CSV_H_
#define DISCOURSE_LENS_SRC_CSV_H_

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace discourse_lens::internal {

struct CsvRecord {
  std::vector<std::string> fields;
  std::size_t line = 0;  // 1-based line the record starts on
};

// Accepts LF or CRLF record separators and skips empty lines. Throws
// SchemaError on unbalanced or misplaced quotes.
std::vector<CsvRecord> read_csv(std::string_view text, std::string_view source);

// Quotes a field only when it holds a comma, quote, CR or LF.
void append_csv_field(std::string& out, std::string_view field);
void append_csv_row(std::string& out, std::initializer_list<std::string_view> fields);

}  // namespace discourse_lens::internal

#endif  // DISCOURSE_LENS_SRC_CSV_H_
