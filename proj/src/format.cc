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

#include "discourse_lens/format.h"

#include <openssl/evp.h>

#include <cmath>
#include <cstdio>
#include <limits>
#include <memory>
#include <stdexcept>
#include <vector>

namespace discourse_lens {

// glibc's printf renders the exact binary value and resolves exact ties with
// the current rounding mode (round-to-nearest-even by default).
std::string format_fixed(double value, int fraction_digits) {
  if (value == 0.0) value = 0.0;  // drop the sign of -0
  if (!std::isfinite(value)) return std::isnan(value) ? "nan" : (value > 0 ? "inf" : "-inf");
  const int needed = std::snprintf(nullptr, 0, "%.*f", fraction_digits, value);
  std::string out(static_cast<std::size_t>(needed) + 1, '\0');
  std::snprintf(out.data(), out.size(), "%.*f", fraction_digits, value);
  out.pop_back();
  // A negative value that rounds to zero prints as "-0.000"; normalize.
  if (out.front() == '-' && out.find_first_not_of("-0.") == std::string::npos) out.erase(0, 1);
  return out;
}

bool parse_scaled_decimal(std::string_view text, int fraction_digits, std::int64_t& out) {
  if (text.empty()) return false;
  bool negative = false;
  if (text.front() == '-' || text.front() == '+') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const auto dot = text.find('.');
  const std::string_view whole = text.substr(0, dot);
  const std::string_view frac = dot == std::string_view::npos ? "" : text.substr(dot + 1);
  if (whole.empty() || static_cast<int>(frac.size()) > fraction_digits) return false;
  if (dot != std::string_view::npos && frac.empty()) return false;
  std::int64_t value = 0;
  constexpr std::int64_t kLimit = std::numeric_limits<std::int64_t>::max() / 10;
  auto push = [&](char c) {
    if (c < '0' || c > '9' || value > kLimit) return false;
    value = value * 10 + (c - '0');
    return true;
  };
  for (char c : whole) {
    if (!push(c)) return false;
  }
  for (int i = 0; i < fraction_digits; ++i) {
    if (!push(i < static_cast<int>(frac.size()) ? frac[i] : '0')) return false;
  }
  out = negative ? -value : value;
  return true;
}

std::string format_scaled_decimal(std::int64_t scaled, int fraction_digits) {
  const bool negative = scaled < 0;
  const auto magnitude = static_cast<std::uint64_t>(negative ? -scaled : scaled);
  std::uint64_t divisor = 1;
  for (int i = 0; i < fraction_digits; ++i) divisor *= 10;
  std::string out = negative ? "-" : "";
  out += std::to_string(magnitude / divisor);
  if (fraction_digits > 0) {
    std::string frac = std::to_string(magnitude % divisor);
    out += "." + std::string(static_cast<std::size_t>(fraction_digits) - frac.size(), '0') + frac;
  }
  return out;
}

namespace {

void write_json(const nlohmann::json& v, int depth, std::string& out) {
  const std::string indent(static_cast<std::size_t>(depth) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(depth + 1) * 2, ' ');
  switch (v.type()) {
    case nlohmann::json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {  // std::map: sorted keys
        if (!first) out += ",\n";
        first = false;
        out += inner;
        out += nlohmann::json(it.key()).dump(-1, ' ', false,
                                             nlohmann::json::error_handler_t::replace);
        out += ": ";
        write_json(it.value(), depth + 1, out);
      }
      out += "\n" + indent + "}";
      return;
    }
    case nlohmann::json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      bool first = true;
      for (const auto& item : v) {
        if (!first) out += ",\n";
        first = false;
        out += inner;
        write_json(item, depth + 1, out);
      }
      out += "\n" + indent + "]";
      return;
    }
    case nlohmann::json::value_t::number_float:
      out += format_fixed(v.get<double>(), kReportFractionDigits);
      return;
    default:
      out += v.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
      return;
  }
}

}  // namespace

std::string canonical_json(const nlohmann::json& value) {
  std::string out;
  write_json(value, 0, out);
  out += '\n';
  return out;
}

std::string sha256_hex(std::string_view bytes) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), digest, &length) != 1) {
    throw std::runtime_error("SHA-256 computation failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(length * 2);
  for (unsigned int i = 0; i < length; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0x0F]);
  }
  return out;
}

}  // namespace discourse_lens
