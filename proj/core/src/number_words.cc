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

#include "fusenorm/number_words.h"

#include <array>
#include <map>
#include <stdexcept>

#include "fusenorm/text_util.h"

namespace fusenorm {
namespace {

const std::array<std::string, 20> kOnes = {
    "zero",    "one",     "two",       "three",    "four",
    "five",    "six",     "seven",     "eight",    "nine",
    "ten",     "eleven",  "twelve",    "thirteen", "fourteen",
    "fifteen", "sixteen", "seventeen", "eighteen", "nineteen"};

const std::array<std::string, 10> kTens = {
    "", "", "twenty", "thirty", "forty", "fifty", "sixty", "seventy", "eighty",
    "ninety"};

struct Scale {
  int64_t value;
  const char* word;
};
constexpr std::array<Scale, 4> kScales = {{{1'000'000'000'000, "trillion"},
                                           {1'000'000'000, "billion"},
                                           {1'000'000, "million"},
                                           {1'000, "thousand"}}};

void AppendBelowThousand(int64_t n, std::vector<std::string>* out) {
  if (n >= 100) {
    out->push_back(kOnes[n / 100]);
    out->push_back("hundred");
    n %= 100;
    if (n == 0) return;
  }
  if (n >= 20) {
    out->push_back(kTens[n / 10]);
    if (n % 10 != 0) out->push_back(kOnes[n % 10]);
  } else {
    out->push_back(kOnes[n]);
  }
}

std::string OrdinalOfWord(const std::string& word) {
  static const std::map<std::string, std::string> kIrregular = {
      {"one", "first"},  {"two", "second"}, {"three", "third"},
      {"five", "fifth"}, {"eight", "eighth"}, {"nine", "ninth"},
      {"twelve", "twelfth"}};
  if (auto it = kIrregular.find(word); it != kIrregular.end()) return it->second;
  if (word.back() == 'y') return word.substr(0, word.size() - 1) + "ieth";
  return word + "th";
}

const std::map<std::string, int64_t>& SmallNumberWords() {
  static const auto* kMap = [] {
    auto* m = new std::map<std::string, int64_t>;
    for (int i = 0; i < 20; ++i) (*m)[kOnes[i]] = i;
    for (int i = 2; i < 10; ++i) (*m)[kTens[i]] = i * 10;
    return m;
  }();
  return *kMap;
}

const std::map<std::string, int64_t>& OrdinalWords() {
  static const auto* kMap = [] {
    auto* m = new std::map<std::string, int64_t>;
    for (int i = 1; i < 20; ++i) (*m)[OrdinalOfWord(kOnes[i])] = i;
    for (int i = 2; i < 10; ++i) (*m)[OrdinalOfWord(kTens[i])] = i * 10;
    (*m)["hundredth"] = 100;
    (*m)["thousandth"] = 1000;
    return m;
  }();
  return *kMap;
}

std::string CardinalOfOrdinalWord(const std::string& ordinal) {
  static const auto* kMap = [] {
    auto* m = new std::map<std::string, std::string>;
    for (int i = 1; i < 20; ++i) (*m)[OrdinalOfWord(kOnes[i])] = kOnes[i];
    for (int i = 2; i < 10; ++i) (*m)[OrdinalOfWord(kTens[i])] = kTens[i];
    (*m)["hundredth"] = "hundred";
    (*m)["thousandth"] = "thousand";
    return m;
  }();
  return kMap->at(ordinal);
}

}  // namespace

std::vector<std::string> VerbalizeCardinal(int64_t n) {
  if (n < 0 || n >= kMaxCardinal) {
    throw std::out_of_range("cardinal out of range: " + std::to_string(n));
  }
  std::vector<std::string> out;
  if (n == 0) {
    out.push_back(kOnes[0]);
    return out;
  }
  for (const Scale& scale : kScales) {
    if (n >= scale.value) {
      AppendBelowThousand(n / scale.value, &out);
      out.push_back(scale.word);
      n %= scale.value;
    }
  }
  if (n > 0) AppendBelowThousand(n, &out);
  return out;
}

std::vector<std::string> VerbalizeOrdinal(int64_t n) {
  if (n < 1 || n >= kMaxOrdinal) {
    throw std::out_of_range("ordinal out of range: " + std::to_string(n));
  }
  std::vector<std::string> words = VerbalizeCardinal(n);
  words.back() = OrdinalOfWord(words.back());
  return words;
}

std::vector<std::string> VerbalizeYear(int year) {
  if (year < 1000 || year >= 10000) {
    throw std::out_of_range("year out of range: " + std::to_string(year));
  }
  const int high = year / 100;
  const int low = year % 100;
  if (year % 1000 < 10 && high % 10 == 0) {
    // 2000..2009, 1000..1009: "two thousand five".
    return VerbalizeCardinal(year);
  }
  std::vector<std::string> out = VerbalizeCardinal(high);
  if (low == 0) {
    out.push_back("hundred");
  } else if (low < 10) {
    out.push_back("oh");
    out.push_back(kOnes[low]);
  } else {
    AppendBelowThousand(low, &out);
  }
  return out;
}

const std::string& DigitWord(char digit) {
  if (digit < '0' || digit > '9') {
    throw std::invalid_argument(std::string("not a digit: ") + digit);
  }
  return kOnes[digit - '0'];
}

std::vector<std::string> VerbalizeDigits(std::string_view digits) {
  std::vector<std::string> out;
  out.reserve(digits.size());
  for (char c : digits) out.push_back(DigitWord(c));
  return out;
}

std::optional<int64_t> ParseIntegerLiteral(std::string_view text) {
  std::string digits;
  if (text.find(',') != std::string_view::npos) {
    // Grouped form: 1-3 leading digits then groups of exactly three.
    const std::vector<std::string> groups = SplitOn(text, ',');
    if (groups[0].empty() || groups[0].size() > 3 || !IsDigits(groups[0])) {
      return std::nullopt;
    }
    for (size_t i = 1; i < groups.size(); ++i) {
      if (groups[i].size() != 3 || !IsDigits(groups[i])) return std::nullopt;
    }
    digits = Join(groups, "");
  } else {
    digits = std::string(text);
  }
  if (!IsDigits(digits) || digits.size() > 15) return std::nullopt;
  if (digits.size() > 1 && digits[0] == '0') return std::nullopt;
  const int64_t value = std::stoll(digits);
  if (value >= kMaxCardinal) return std::nullopt;
  return value;
}

std::optional<ParsedNumber> ParseCardinalWords(
    std::span<const std::string> words) {
  const auto& small = SmallNumberWords();
  int64_t total = 0;     // completed scale groups
  int64_t group = 0;     // current group below the next scale word
  int64_t last_scale = kMaxCardinal;
  size_t i = 0;
  // State of the current group: which kinds of word may follow.
  bool have_hundreds = false;
  bool have_tens = false;   // a tens word (twenty..ninety)
  bool have_unit = false;   // a word in 0..19
  bool any = false;
  while (i < words.size()) {
    const std::string& w = words[i];
    if (auto it = small.find(w); it != small.end()) {
      const int64_t v = it->second;
      if (v == 0) {
        if (any) break;  // "zero" only stands alone
        ++i;
        return ParsedNumber{0, i};
      }
      if (v >= 20) {
        if (have_tens || have_unit) break;
        have_tens = true;
      } else {
        if (have_unit) break;
        if (have_tens && v >= 10) break;
        have_unit = true;
      }
      group += v;
      any = true;
      ++i;
      continue;
    }
    if (w == "hundred") {
      if (!any || have_hundreds || group == 0 || group >= 100) break;
      // "nineteen hundred" is accepted; "twenty one hundred" too.
      group *= 100;
      have_hundreds = true;
      have_tens = have_unit = false;
      ++i;
      continue;
    }
    const Scale* scale = nullptr;
    for (const Scale& candidate : kScales) {
      if (w == candidate.word) scale = &candidate;
    }
    if (scale == nullptr || group == 0 || scale->value >= last_scale) break;
    total += group * scale->value;
    last_scale = scale->value;
    group = 0;
    have_hundreds = have_tens = have_unit = false;
    ++i;
  }
  if (!any) return std::nullopt;
  return ParsedNumber{total + group, i};
}

std::optional<ParsedNumber> ParseOrdinalWords(
    std::span<const std::string> words) {
  if (words.empty()) return std::nullopt;
  const auto& ordinals = OrdinalWords();
  if (auto it = ordinals.find(words[0]); it != ordinals.end()) {
    return ParsedNumber{it->second, 1};
  }
  // A cardinal whose last word is in ordinal form: "one hundred twenty first".
  const auto& small = SmallNumberWords();
  for (size_t k = 1; k < words.size(); ++k) {
    auto it = ordinals.find(words[k]);
    if (it == ordinals.end()) {
      if (!small.contains(words[k]) && words[k] != "hundred" && words[k] != "thousand") {
        return std::nullopt;
      }
      continue;
    }
    std::vector<std::string> cardinal(words.begin(), words.begin() + static_cast<ptrdiff_t>(k));
    cardinal.push_back(CardinalOfOrdinalWord(words[k]));
    const auto parsed = ParseCardinalWords(cardinal);
    if (!parsed || parsed->consumed != cardinal.size() || parsed->value >= kMaxOrdinal) {
      return std::nullopt;
    }
    return ParsedNumber{parsed->value, k + 1};
  }
  return std::nullopt;
}

}  // namespace fusenorm
