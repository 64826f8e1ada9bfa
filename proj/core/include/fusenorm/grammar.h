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

#ifndef FUSENORM_GRAMMAR_H_
#define FUSENORM_GRAMMAR_H_

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "fusenorm/weight.h"

namespace fusenorm {

// Semiotic classes in normalization priority order; the order fixes the
// micro-weight each class gets inside the [1.0, 1.01] band.
enum class SemioticClass {
  kDate,
  kTime,
  kMoney,
  kMeasure,
  kDecimal,
  kFraction,
  kOrdinal,
  kCardinal,
  kRoman,
  kElectronic,
  kVerbatim,
  kPlain,
  kPunct,
};

inline constexpr std::array<SemioticClass, 11> kSemioticClasses = {
    SemioticClass::kDate,     SemioticClass::kTime,
    SemioticClass::kMoney,    SemioticClass::kMeasure,
    SemioticClass::kDecimal,  SemioticClass::kFraction,
    SemioticClass::kOrdinal,  SemioticClass::kCardinal,
    SemioticClass::kRoman,    SemioticClass::kElectronic,
    SemioticClass::kVerbatim};

std::string_view ClassName(SemioticClass c);
std::optional<SemioticClass> ClassFromName(std::string_view name);
bool IsSemiotic(SemioticClass c);

// Arc weights of the grammar.
inline constexpr Weight kPlainWeight = Weight::FromTicks(100 * Weight::kTicksPerUnit);
inline constexpr Weight kPunctWeight = Weight::FromTicks(2 * Weight::kTicksPerUnit);
inline constexpr Weight kBandLow = Weight::One();
inline constexpr Weight kBandHigh = Weight::FromTicks(10100);

// 1.0 + 0.01 * rank / 11, rounded to the nearest tick. Throws for PLAIN and
// PUNCT.
Weight ClassWeight(SemioticClass c);

// One interpretation of a span.
struct Reading {
  SemioticClass cls = SemioticClass::kPlain;
  std::vector<std::string> spoken;
  Weight weight;
  // False for the readings that leave a semiotic span (partly) unverbalized.
  bool normalized = true;

  std::string Text() const;
  bool operator==(const Reading&) const = default;
};

// A tiled region of the input. Byte offsets are into the tagged sentence.
struct TokenSpan {
  std::string text;
  size_t start = 0;
  size_t end = 0;
  std::vector<std::string> tokens;
  std::vector<SemioticClass> classes;
  bool is_semiotic = false;
  // Preceded by whitespace in the source (or first span).
  bool space_before = false;
};

struct UnitEntry {
  std::string singular;
  std::string plural;
};

struct CurrencyEntry {
  std::string major_singular;
  std::string major_plural;
  std::string minor_singular;
  std::string minor_plural;
};

// Lexicons behind the verbalizers. Loaded once from a directory of
// `key<TAB>value` files and immutable afterwards.
class GrammarSet {
 public:
  // Throws DataError when a file is missing or malformed.
  static GrammarSet Load(const std::filesystem::path& dir);

  // $FUSENORM_GRAMMAR_DIR, else the source-tree data directory, else the
  // installed share directory.
  static std::filesystem::path DefaultDataDir();

  // Lazily loaded from DefaultDataDir().
  static const GrammarSet& Default();

  std::optional<int> MonthNumber(std::string_view name) const;
  // 1-based; canonical full name.
  const std::string& MonthName(int month) const;
  const UnitEntry* FindUnit(std::string_view symbol) const;
  // Longest currency symbol that prefixes `text`, with its length.
  std::optional<std::pair<const CurrencyEntry*, size_t>> MatchCurrencyPrefix(
      std::string_view text) const;
  bool IsDictionaryWord(std::string_view lower_word) const;
  size_t dictionary_size() const { return words_.size(); }
  const std::string* TldSpoken(std::string_view lower_label) const;
  const std::string* SymbolSpoken(char symbol) const;

 private:
  std::unordered_map<std::string, int> months_;
  std::array<std::string, 13> month_names_;
  std::unordered_map<std::string, UnitEntry> units_;
  std::map<std::string, CurrencyEntry> currencies_;
  std::unordered_set<std::string> words_;
  std::unordered_map<std::string, std::string> tlds_;
  std::unordered_map<char, std::string> symbols_;
};

}  // namespace fusenorm

#endif  // FUSENORM_GRAMMAR_H_
