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

#ifndef DISCOURSE_LENS_FORMAT_H_
#define DISCOURSE_LENS_FORMAT_H_

#include <cstdint>
#include <string>
#include <string_view>

#include "json.hpp"

namespace discourse_lens {

// Fixed-point rendering of the exact binary value of `value`, rounded
// half-to-even. Negative zero prints as zero.
std::string format_fixed(double value, int fraction_digits);

// Parses a plain decimal ("-12.345") into an integer scaled by
// 10^fraction_digits. Returns false if the text has more fraction digits than
// requested or is not a decimal.
bool parse_scaled_decimal(std::string_view text, int fraction_digits, std::int64_t& out);

// Inverse of parse_scaled_decimal.
std::string format_scaled_decimal(std::int64_t scaled, int fraction_digits);

inline constexpr int kReportFractionDigits = 6;

// Canonical JSON text: object keys sorted, two-space indent, LF line endings,
// UTF-8 kept as-is, floating-point numbers with kReportFractionDigits digits.
std::string canonical_json(const nlohmann::json& value);

// Hex SHA-256 of `bytes`.
std::string sha256_hex(std::string_view bytes);

}  // namespace discourse_lens

#endif  // DISCOURSE_LENS_FORMAT_H_
