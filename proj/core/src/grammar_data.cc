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

#include <cstdlib>
#include <fstream>
#include <mutex>
#include <stdexcept>

#include "fusenorm/errors.h"
#include "fusenorm/grammar.h"
#include "fusenorm/text_util.h"

namespace fusenorm {
namespace {

struct Entry {
  std::string key;
  std::string value;
};

std::vector<Entry> ReadTsv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open grammar file " + path.string());
  std::vector<Entry> entries;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 == line.size()) {
      throw DataError(path.string() + ":" + std::to_string(line_no) +
                      ": expected key<TAB>value");
    }
    entries.push_back({line.substr(0, tab), line.substr(tab + 1)});
  }
  return entries;
}

std::vector<std::string> SplitForms(const Entry& e, size_t expected,
                                    const std::filesystem::path& path) {
  std::vector<std::string> forms = SplitOn(e.value, '|');
  if (forms.size() != expected) {
    throw DataError(path.string() + ": entry '" + e.key + "' needs " +
                    std::to_string(expected) + " '|'-separated forms");
  }
  return forms;
}

}  // namespace

std::string_view ClassName(SemioticClass c) {
  switch (c) {
    case SemioticClass::kDate: return "DATE";
    case SemioticClass::kTime: return "TIME";
    case SemioticClass::kMoney: return "MONEY";
    case SemioticClass::kMeasure: return "MEASURE";
    case SemioticClass::kDecimal: return "DECIMAL";
    case SemioticClass::kFraction: return "FRACTION";
    case SemioticClass::kOrdinal: return "ORDINAL";
    case SemioticClass::kCardinal: return "CARDINAL";
    case SemioticClass::kRoman: return "ROMAN";
    case SemioticClass::kElectronic: return "ELECTRONIC";
    case SemioticClass::kVerbatim: return "VERBATIM";
    case SemioticClass::kPlain: return "PLAIN";
    case SemioticClass::kPunct: return "PUNCT";
  }
  return "?";
}

std::optional<SemioticClass> ClassFromName(std::string_view name) {
  for (int i = 0; i <= static_cast<int>(SemioticClass::kPunct); ++i) {
    const auto c = static_cast<SemioticClass>(i);
    if (ClassName(c) == name) return c;
  }
  return std::nullopt;
}

bool IsSemiotic(SemioticClass c) {
  return c != SemioticClass::kPlain && c != SemioticClass::kPunct;
}

Weight ClassWeight(SemioticClass c) {
  if (!IsSemiotic(c)) {
    throw std::invalid_argument("ClassWeight: not a semiotic class");
  }
  const int64_t rank = static_cast<int64_t>(c);
  const int64_t classes = static_cast<int64_t>(kSemioticClasses.size());
  // 0.01 units = 100 ticks; round half up.
  const int64_t micro = (2 * 100 * rank + classes) / (2 * classes);
  return Weight::One() + Weight::FromTicks(micro);
}

std::string Reading::Text() const { return Join(spoken); }

GrammarSet GrammarSet::Load(const std::filesystem::path& dir) {
  GrammarSet g;
  const auto months_path = dir / "months.tsv";
  for (const Entry& e : ReadTsv(months_path)) {
    const int m = std::atoi(e.value.c_str());
    if (m < 1 || m > 12) {
      throw DataError(months_path.string() + ": bad month number for " + e.key);
    }
    g.months_[ToLowerAscii(e.key)] = m;
    if (g.month_names_[m].empty()) g.month_names_[m] = e.key;
  }
  for (int m = 1; m <= 12; ++m) {
    if (g.month_names_[m].empty()) {
      throw DataError(months_path.string() + ": missing month " + std::to_string(m));
    }
  }
  const auto units_path = dir / "units.tsv";
  for (const Entry& e : ReadTsv(units_path)) {
    auto forms = SplitForms(e, 2, units_path);
    g.units_[e.key] = {forms[0], forms[1]};
  }
  const auto currency_path = dir / "currency.tsv";
  for (const Entry& e : ReadTsv(currency_path)) {
    auto forms = SplitForms(e, 4, currency_path);
    g.currencies_[e.key] = {forms[0], forms[1], forms[2], forms[3]};
  }
  for (const Entry& e : ReadTsv(dir / "words.tsv")) {
    g.words_.insert(ToLowerAscii(e.key));
  }
  for (const Entry& e : ReadTsv(dir / "tlds.tsv")) {
    g.tlds_[ToLowerAscii(e.key)] = e.value;
  }
  const auto symbols_path = dir / "electronic.tsv";
  for (const Entry& e : ReadTsv(symbols_path)) {
    if (e.key.size() != 1) {
      throw DataError(symbols_path.string() + ": symbol keys are single characters");
    }
    g.symbols_[e.key[0]] = e.value;
  }
  return g;
}

std::filesystem::path GrammarSet::DefaultDataDir() {
  if (const char* env = std::getenv("FUSENORM_GRAMMAR_DIR"); env && *env) {
    return env;
  }
  const std::filesystem::path source_dir = FUSENORM_DATA_DIR;
  if (std::filesystem::exists(source_dir / "months.tsv")) return source_dir;
  return FUSENORM_INSTALL_DATA_DIR;
}

const GrammarSet& GrammarSet::Default() {
  static const GrammarSet* instance = new GrammarSet(Load(DefaultDataDir()));
  return *instance;
}

std::optional<int> GrammarSet::MonthNumber(std::string_view name) const {
  auto it = months_.find(ToLowerAscii(name));
  if (it == months_.end()) return std::nullopt;
  return it->second;
}

const std::string& GrammarSet::MonthName(int month) const {
  if (month < 1 || month > 12) throw std::out_of_range("month");
  return month_names_[month];
}

const UnitEntry* GrammarSet::FindUnit(std::string_view symbol) const {
  auto it = units_.find(std::string(symbol));
  return it == units_.end() ? nullptr : &it->second;
}

std::optional<std::pair<const CurrencyEntry*, size_t>>
GrammarSet::MatchCurrencyPrefix(std::string_view text) const {
  std::optional<std::pair<const CurrencyEntry*, size_t>> best;
  for (const auto& [symbol, entry] : currencies_) {
    if (text.starts_with(symbol) && (!best || symbol.size() > best->second)) {
      best = std::make_pair(&entry, symbol.size());
    }
  }
  return best;
}

bool GrammarSet::IsDictionaryWord(std::string_view lower_word) const {
  return words_.count(std::string(lower_word)) > 0;
}

const std::string* GrammarSet::TldSpoken(std::string_view lower_label) const {
  auto it = tlds_.find(std::string(lower_label));
  return it == tlds_.end() ? nullptr : &it->second;
}

const std::string* GrammarSet::SymbolSpoken(char symbol) const {
  auto it = symbols_.find(symbol);
  return it == symbols_.end() ? nullptr : &it->second;
}

}  // namespace fusenorm
