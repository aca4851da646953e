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

#include "csv.h"

#include <string>

#include "discourse_lens/error.h"

namespace discourse_lens::internal {

std::vector<CsvRecord> read_csv(std::string_view text, std::string_view source) {
  std::vector<CsvRecord> records;
  std::size_t i = 0;
  std::size_t line = 1;
  const std::size_t n = text.size();
  auto fail = [&](std::size_t column, const std::string& reason) {
    throw SchemaError(std::string(source), line, column, reason);
  };

  while (i < n) {
    // Empty line.
    if (text[i] == '\n') {
      ++i;
      ++line;
      continue;
    }
    if (text[i] == '\r' && i + 1 < n && text[i + 1] == '\n') {
      i += 2;
      ++line;
      continue;
    }

    CsvRecord record;
    record.line = line;
    std::size_t line_start = i;
    bool end_of_record = false;
    while (!end_of_record) {
      std::string field;
      if (i < n && text[i] == '"') {
        const std::size_t open_col = i - line_start + 1;
        ++i;
        for (;;) {
          if (i >= n) fail(open_col, "unterminated quoted field");
          const char c = text[i];
          if (c == '"') {
            if (i + 1 < n && text[i + 1] == '"') {
              field.push_back('"');
              i += 2;
              continue;
            }
            ++i;
            break;
          }
          if (c == '\n') {
            ++line;
            line_start = i + 1;
          }
          field.push_back(c);
          ++i;
        }
        if (i < n && text[i] != ',' && text[i] != '\n' && text[i] != '\r') {
          fail(i - line_start + 1, "unexpected character after closing quote");
        }
      } else {
        while (i < n && text[i] != ',' && text[i] != '\n' && text[i] != '\r') {
          if (text[i] == '"') fail(i - line_start + 1, "quote inside unquoted field");
          field.push_back(text[i]);
          ++i;
        }
      }
      record.fields.push_back(std::move(field));

      if (i >= n) {
        end_of_record = true;
      } else if (text[i] == ',') {
        ++i;
      } else if (text[i] == '\n') {
        ++i;
        ++line;
        end_of_record = true;
      } else {  // '\r'
        if (i + 1 < n && text[i + 1] == '\n') {
          i += 2;
          ++line;
          end_of_record = true;
        } else {
          fail(i - line_start + 1, "bare carriage return outside quotes");
        }
      }
    }
    records.push_back(std::move(record));
  }
  return records;
}

void append_csv_field(std::string& out, std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
    out.append(field);
    return;
  }
  out.push_back('"');
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
}

void append_csv_row(std::string& out, std::initializer_list<std::string_view> fields) {
  bool first = true;
  for (std::string_view f : fields) {
    if (!first) out.push_back(',');
    first = false;
    append_csv_field(out, f);
  }
  out.push_back('\n');
}

}  // namespace discourse_lens::internal
