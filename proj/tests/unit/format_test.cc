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

#include <functional>
#include <numeric>
#include <stdexcept>

#include "discourse_lens/format.h"
#include "discourse_lens/parallel.h"
#include "gtest/gtest.h"

namespace discourse_lens {
namespace {

TEST(FormatFixedTest, RoundHalfEven) {
  EXPECT_EQ(format_fixed(0.5, 0), "0");
  EXPECT_EQ(format_fixed(1.5, 0), "2");
  EXPECT_EQ(format_fixed(2.5, 0), "2");
  EXPECT_EQ(format_fixed(0.125, 2), "0.12");  // exactly representable tie
  EXPECT_EQ(format_fixed(0.375, 2), "0.38");
  EXPECT_EQ(format_fixed(100.0, 4), "100.0000");
  EXPECT_EQ(format_fixed(1.0 / 3, 6), "0.333333");
}

TEST(FormatFixedTest, NegativeZero) {
  EXPECT_EQ(format_fixed(-0.0, 2), "0.00");
  EXPECT_EQ(format_fixed(-0.0001, 2), "0.00");
  EXPECT_EQ(format_fixed(-0.5, 1), "-0.5");
}

TEST(ScaledDecimalTest, ParseAndFormat) {
  std::int64_t v = 0;
  ASSERT_TRUE(parse_scaled_decimal("0.558000", 6, v));
  EXPECT_EQ(v, 558000);
  ASSERT_TRUE(parse_scaled_decimal("-12.5", 3, v));
  EXPECT_EQ(v, -12500);
  ASSERT_TRUE(parse_scaled_decimal("7", 2, v));
  EXPECT_EQ(v, 700);
  EXPECT_FALSE(parse_scaled_decimal("1.2345", 2, v));
  EXPECT_FALSE(parse_scaled_decimal("abc", 2, v));
  EXPECT_FALSE(parse_scaled_decimal("", 2, v));
  EXPECT_FALSE(parse_scaled_decimal("1.", 2, v));
  EXPECT_EQ(format_scaled_decimal(58000, 4), "5.8000");
  EXPECT_EQ(format_scaled_decimal(-5, 2), "-0.05");
  EXPECT_EQ(format_scaled_decimal(0, 0), "0");
}

TEST(CanonicalJsonTest, SortedKeysAndFixedFloats) {
  nlohmann::json doc = {{"b", 1}, {"a", {{"y", 0.5}, {"x", "s\"q"}}}, {"c", {1.0, true, nullptr}}};
  EXPECT_EQ(canonical_json(doc),
            "{\n"
            "  \"a\": {\n"
            "    \"x\": \"s\\\"q\",\n"
            "    \"y\": 0.500000\n"
            "  },\n"
            "  \"b\": 1,\n"
            "  \"c\": [\n"
            "    1.000000,\n"
            "    true,\n"
            "    null\n"
            "  ]\n"
            "}\n");
  EXPECT_EQ(canonical_json(nlohmann::json::object()), "{}\n");
  EXPECT_EQ(canonical_json(nlohmann::json::array()), "[]\n");
  EXPECT_EQ(canonical_json(nlohmann::json("caf\xc3\xa9")), "\"caf\xc3\xa9\"\n");
}

TEST(Sha256Test, KnownVectors) {
  EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(MapReduceTest, ChunkOrderIsPreserved) {
  for (unsigned threads : {1u, 2u, 3u, 8u, 64u}) {
    const auto out = map_reduce<std::vector<std::size_t>>(
        100, Parallelism{threads},
        [](std::size_t begin, std::size_t end) {
          std::vector<std::size_t> v(end - begin);
          std::iota(v.begin(), v.end(), begin);
          return v;
        },
        [](std::vector<std::size_t>& acc, std::vector<std::size_t>&& part) {
          acc.insert(acc.end(), part.begin(), part.end());
        });
    ASSERT_EQ(out.size(), 100u);
    for (std::size_t i = 0; i < out.size(); ++i) EXPECT_EQ(out[i], i);
  }
}

TEST(MapReduceTest, EmptyAndExceptions) {
  const auto none = map_reduce<int>(
      0, Parallelism{4}, [](std::size_t begin, std::size_t end) { return int(end - begin); },
      [](int& acc, int&& p) { acc += p; });
  EXPECT_EQ(none, 0);
  EXPECT_THROW((map_reduce<int>(
                   10, Parallelism{4},
                   [](std::size_t begin, std::size_t) -> int {
                     if (begin > 0) throw std::runtime_error("boom");
                     return 1;
                   },
                   [](int& acc, int&& p) { acc += p; })),
               std::runtime_error);
}

TEST(RunTasksTest, ResultsInTaskOrder) {
  std::vector<std::function<int()>> tasks;
  for (int i = 0; i < 7; ++i) tasks.push_back([i] { return i * i; });
  EXPECT_EQ(run_tasks<int>(tasks, Parallelism{3}), (std::vector<int>{0, 1, 4, 9, 16, 25, 36}));
}

}  // namespace
}  // namespace discourse_lens
