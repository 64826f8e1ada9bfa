// Copyright 2026 The FuseNorm Authors.
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

#ifndef FUSENORM_NUMBER_WORDS_H_
#define FUSENORM_NUMBER_WORDS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fusenorm {

inline constexpr int64_t kMaxCardinal = 1'000'000'000'000'000;  // exclusive
inline constexpr int64_t kMaxOrdinal = 1'000'000;                 // exclusive

// American English cardinal words without "and": 10001 -> "ten thousand one".
// Throws std::out_of_range outside [0, kMaxCardinal).
std::vector<std::string> VerbalizeCardinal(int64_t n);

// 4 -> "fourth", 21 -> "twenty first". Throws std::out_of_range outside
// [1, kMaxOrdinal).
std::vector<std::string> VerbalizeOrdinal(int64_t n);

// Pairwise year reading: 1970 -> "nineteen seventy", 1905 -> "nineteen oh
// five", 1900 -> "nineteen hundred", 2005 -> "two thousand five".
// Throws std::out_of_range outside [1000, 10000).
std::vector<std::string> VerbalizeYear(int year);

// "zero" .. "nine"; throws std::invalid_argument on a non-digit.
const std::string& DigitWord(char digit);

// Digit-by-digit reading of a run of ASCII digits.
std::vector<std::string> VerbalizeDigits(std::string_view digits);

// Parses "1,234" or "1234" (no sign, no leading zeros) below kMaxCardinal.
std::optional<int64_t> ParseIntegerLiteral(std::string_view text);

// Greedy parse of a cardinal word sequence starting at words[0]
// ("one thousand nine hundred seventy", "nineteen hundred"). Returns the value
// and the number of words consumed, or nullopt if words[0] is not a number
// word.
struct ParsedNumber {
  int64_t value = 0;
  size_t consumed = 0;
};
std::optional<ParsedNumber> ParseCardinalWords(std::span<const std::string> words);

// Recognizes an ordinal word sequence ("fifth", "twenty first", "thirtieth").
std::optional<ParsedNumber> ParseOrdinalWords(std::span<const std::string> words);

}  // namespace fusenorm

#endif  // FUSENORM_NUMBER_WORDS_H_
