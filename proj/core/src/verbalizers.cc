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

#include "fusenorm/verbalizers.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <functional>
#include <map>
#include <set>

#include "fusenorm/number_words.h"
#include "fusenorm/tagger.h"
#include "fusenorm/text_util.h"

namespace fusenorm {
namespace {

void Append(std::vector<std::string>* out, const std::vector<std::string>& words) {
  out->insert(out->end(), words.begin(), words.end());
}

Reading MakeReading(SemioticClass c, std::vector<std::string> words) {
  return Reading{c, std::move(words), ClassWeight(c), true};
}

std::vector<std::string> TokenTexts(std::string_view span) {
  std::vector<std::string> out;
  for (Token& t : Tokenize(span)) out.push_back(std::move(t.text));
  return out;
}

std::optional<int> SmallInt(std::string_view text, size_t max_digits) {
  if (!IsDigits(text) || text.size() > max_digits) return std::nullopt;
  return std::stoi(std::string(text));
}

// Numeric literal with an optional fractional part: "3", "1,000", "3.25", ".5".
struct NumberLiteral {
  std::optional<int64_t> integer;  // absent for ".5"
  std::string fraction;            // digits after the point, may be empty
  bool has_point = false;

  bool IsExactlyOne() const { return integer == 1 && !has_point; }
};

std::optional<NumberLiteral> ParseNumberLiteral(std::string_view text) {
  NumberLiteral lit;
  const size_t dot = text.find('.');
  std::string_view int_part = text.substr(0, dot);
  if (dot != std::string_view::npos) {
    lit.has_point = true;
    lit.fraction = std::string(text.substr(dot + 1));
    if (!IsDigits(lit.fraction)) return std::nullopt;
  }
  if (int_part.empty()) {
    if (!lit.has_point) return std::nullopt;
  } else {
    // "0.5" is fine; "007" is not a number literal.
    lit.integer = ParseIntegerLiteral(int_part);
    if (!lit.integer) return std::nullopt;
  }
  return lit;
}

std::vector<std::string> SpeakNumber(const NumberLiteral& lit) {
  std::vector<std::string> out;
  if (lit.integer) out = VerbalizeCardinal(*lit.integer);
  if (lit.has_point) {
    out.push_back("point");
    Append(&out, VerbalizeDigits(lit.fraction));
  }
  return out;
}

std::vector<std::string> SplitSpaces(const std::string& s) {
  return SplitWhitespace(s);
}

std::vector<std::string> DateWords(const GrammarSet& g, int month, int day,
                                   std::optional<int> year) {
  std::vector<std::string> out = {g.MonthName(month)};
  Append(&out, VerbalizeOrdinal(day));
  if (year) Append(&out, VerbalizeYear(*year));
  return out;
}

bool ValidMonthDay(int month, int day) {
  return month >= 1 && month <= 12 && day >= 1 && day <= 31;
}

std::optional<int> ParseYear(std::string_view text) {
  auto y = SmallInt(text, 4);
  if (!y || text.size() != 4 || *y < 1000) return std::nullopt;
  return y;
}

// "4" or "4th" as a day of month.
std::optional<int> ParseDay(std::string_view text) {
  if (auto d = SmallInt(text, 2)) return d;
  if (text.size() >= 3) {
    auto readings = VerbalizeOrdinalToken(text);
    if (!readings.empty()) return SmallInt(text.substr(0, text.size() - 2), 2);
  }
  return std::nullopt;
}

std::optional<std::string> AmPm(std::string_view text) {
  const std::string lower = ToLowerAscii(text);
  if (lower == "am" || lower == "a.m.") return "a m";
  if (lower == "pm" || lower == "p.m.") return "p m";
  return std::nullopt;
}

std::vector<std::string> ClockWords(int hour, int minute, bool has_ampm) {
  std::vector<std::string> out = VerbalizeCardinal(hour);
  if (minute == 0) {
    if (!has_ampm) out.push_back("o'clock");
  } else if (minute < 10) {
    out.push_back("oh");
    out.push_back(DigitWord(static_cast<char>('0' + minute)));
  } else {
    Append(&out, VerbalizeCardinal(minute));
  }
  return out;
}

// "10:30" -> (10, 30); requires two minute digits.
std::optional<std::pair<int, int>> ParseClock(std::string_view text) {
  const size_t colon = text.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  auto hour = SmallInt(text.substr(0, colon), 2);
  std::string_view mm = text.substr(colon + 1);
  auto minute = SmallInt(mm, 2);
  if (!hour || !minute || mm.size() != 2 || *hour > 23 || *minute > 59) {
    return std::nullopt;
  }
  return std::make_pair(*hour, *minute);
}

// Splits "75F" / "3.5kg" / "100%" into a number literal and a unit suffix.
std::optional<std::pair<NumberLiteral, std::string>> SplitNumberPrefix(
    std::string_view text) {
  size_t i = 0;
  while (i < text.size() &&
         (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == ',' ||
          text[i] == '.')) {
    ++i;
  }
  // A trailing separator belongs to neither side.
  if (i == 0 || i == text.size()) return std::nullopt;
  auto lit = ParseNumberLiteral(text.substr(0, i));
  if (!lit) return std::nullopt;
  return std::make_pair(*lit, std::string(text.substr(i)));
}

const std::vector<std::string>& RomanTable() {
  static const auto* kTable = [] {
    auto* table = new std::vector<std::string>(1);
    const std::array<const char*, 10> units = {"",  "I",  "II",  "III", "IV",
                                               "V", "VI", "VII", "VIII", "IX"};
    for (int n = 1; n < 40; ++n) {
      table->push_back(std::string(n / 10, 'X') + units[n % 10]);
    }
    return table;
  }();
  return *kTable;
}

std::optional<int> ParseRoman(std::string_view text) {
  const auto& table = RomanTable();
  for (size_t n = 1; n < table.size(); ++n) {
    if (table[n] == text) return static_cast<int>(n);
  }
  return std::nullopt;
}

std::vector<Reading> RomanReadings(std::string_view span) {
  auto n = ParseRoman(span);
  if (!n) return {};
  std::vector<std::string> ordinal = VerbalizeOrdinal(*n);
  std::vector<std::string> the_ordinal = {"the"};
  Append(&the_ordinal, ordinal);
  return {MakeReading(SemioticClass::kRoman, VerbalizeCardinal(*n)),
          MakeReading(SemioticClass::kRoman, std::move(the_ordinal)),
          MakeReading(SemioticClass::kRoman, std::move(ordinal))};
}

std::string LetterWord(char c) {
  return std::string(1, static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
}

// ---- Electronic addresses ----------------------------------------------

// One way to read a component of an address.
struct Option {
  std::vector<std::string> words;
  int residual = 0;  // characters spelled one by one
};

bool OptionBefore(const Option& a, const Option& b) {
  if (a.residual != b.residual) return a.residual < b.residual;
  if (a.words.size() != b.words.size()) return a.words.size() < b.words.size();
  return a.words < b.words;
}

Option SpellChars(std::string_view text, const GrammarSet& g) {
  Option opt;
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      opt.words.push_back(DigitWord(c));
      ++opt.residual;
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      opt.words.push_back(LetterWord(c));
      ++opt.residual;
    } else if (const std::string* spoken = g.SymbolSpoken(c)) {
      Append(&opt.words, SplitSpaces(*spoken));
    } else {
      opt.words.emplace_back(1, c);
    }
  }
  return opt;
}

constexpr size_t kSegmentSearchBudget = 20000;
constexpr size_t kMaxChunkOptions = 16;

// Maximal segmentations of a lowercase letter run into dictionary words of
// two or more letters plus single residual letters. Maximal: no run of
// residual letters contains a dictionary word.
std::vector<Option> SegmentChunk(const std::string& lower, const GrammarSet& g) {
  std::vector<Option> found;
  std::vector<std::string> pieces;
  size_t budget = kSegmentSearchBudget;
  auto run_has_word = [&](size_t run_start, size_t end) {
    // Only substrings ending at `end` are new since the last check.
    for (size_t b = run_start; b + 2 <= end; ++b) {
      if (g.IsDictionaryWord(std::string_view(lower).substr(b, end - b))) return true;
    }
    return false;
  };
  std::function<void(size_t, size_t, int)> dfs = [&](size_t pos, size_t run_start,
                                                     int residual) {
    if (budget == 0) return;
    --budget;
    if (pos == lower.size()) {
      found.push_back({pieces, residual});
      return;
    }
    for (size_t len = lower.size() - pos; len >= 2; --len) {
      if (!g.IsDictionaryWord(std::string_view(lower).substr(pos, len))) continue;
      pieces.push_back(lower.substr(pos, len));
      dfs(pos + len, pos + len, residual);
      pieces.pop_back();
    }
    if (!run_has_word(run_start, pos + 1)) {
      pieces.push_back(lower.substr(pos, 1));
      dfs(pos + 1, run_start, residual + 1);
      pieces.pop_back();
    }
  };
  dfs(0, 0, 0);
  std::sort(found.begin(), found.end(), OptionBefore);
  if (found.size() > kMaxChunkOptions) found.resize(kMaxChunkOptions);
  return found;
}

// Splits an address label at letter/digit/symbol changes and camel-case
// boundaries: "WeAreSC" -> We|Are|SC, "abc123" -> abc|123.
std::vector<std::string> CaseChunks(std::string_view label) {
  auto kind = [](char c) {
    if (std::isdigit(static_cast<unsigned char>(c))) return 0;
    if (std::isalpha(static_cast<unsigned char>(c))) return 1;
    return 2;
  };
  auto upper = [](char c) { return c >= 'A' && c <= 'Z'; };
  auto lower = [](char c) { return c >= 'a' && c <= 'z'; };
  std::vector<std::string> chunks;
  std::string cur;
  for (size_t i = 0; i < label.size(); ++i) {
    const char c = label[i];
    bool boundary = false;
    if (!cur.empty()) {
      const char prev = label[i - 1];
      if (kind(prev) != kind(c) || kind(c) == 2) boundary = true;
      if (lower(prev) && upper(c)) boundary = true;
      if (upper(prev) && upper(c) && i + 1 < label.size() && lower(label[i + 1])) {
        boundary = true;
      }
    }
    if (boundary) chunks.push_back(std::exchange(cur, {}));
    cur += c;
  }
  if (!cur.empty()) chunks.push_back(cur);
  return chunks;
}

// Cross product of per-part options, keeping the best `limit` combinations.
std::vector<Option> Combine(const std::vector<std::vector<Option>>& parts,
                            size_t limit) {
  std::vector<Option> beam = {Option{}};
  for (const auto& options : parts) {
    std::vector<Option> next;
    for (const Option& prefix : beam) {
      for (const Option& opt : options) {
        Option merged = prefix;
        Append(&merged.words, opt.words);
        merged.residual += opt.residual;
        next.push_back(std::move(merged));
      }
    }
    std::sort(next.begin(), next.end(), OptionBefore);
    if (next.size() > limit) next.resize(limit);
    beam = std::move(next);
  }
  return beam;
}

// Per chunk: its spelling, the best segmentation, and any runner-up that is
// just as good (same residual and piece count).
std::vector<Option> LabelOptions(std::string_view label, const GrammarSet& g) {
  std::vector<std::vector<Option>> parts;
  for (const std::string& chunk : CaseChunks(label)) {
    std::vector<Option> options = {SpellChars(chunk, g)};
    const bool short_acronym = IsUpperAscii(chunk) && chunk.size() <= 3;
    if (IsAlphaAscii(chunk) && !short_acronym) {
      const std::vector<Option> segs = SegmentChunk(ToLowerAscii(chunk), g);
      for (size_t i = 0; i < segs.size(); ++i) {
        if (i > 0 && (segs[i].residual != segs[0].residual ||
                      segs[i].words.size() != segs[0].words.size())) {
          break;
        }
        if (segs[i].words != options.front().words) options.push_back(segs[i]);
      }
    }
    parts.push_back(std::move(options));
  }
  return Combine(parts, kMaxElectronicReadings);
}

bool IsLabel(std::string_view label) {
  return !label.empty() && std::all_of(label.begin(), label.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_';
  });
}

struct Address {
  std::string scheme;   // "http" / "https" or empty
  std::string local;    // email local part or empty
  std::vector<std::string> host;  // labels, last one is the TLD
  std::string path;     // from the first '/' on, or empty
};

std::optional<Address> ParseAddress(std::string_view text, const GrammarSet& g) {
  if (text.empty() || text.find_first_of(" \t") != std::string_view::npos) {
    return std::nullopt;
  }
  Address addr;
  std::string_view rest = text;
  if (const size_t at = rest.find('@'); at != std::string_view::npos) {
    addr.local = std::string(rest.substr(0, at));
    if (addr.local.empty() ||
        !std::all_of(addr.local.begin(), addr.local.end(), [](char c) {
          return std::isalnum(static_cast<unsigned char>(c)) || c == '.' ||
                 c == '-' || c == '_' || c == '+';
        })) {
      return std::nullopt;
    }
    rest = rest.substr(at + 1);
  } else {
    for (std::string_view scheme : {"https://", "http://"}) {
      if (rest.starts_with(scheme)) {
        addr.scheme = std::string(scheme.substr(0, scheme.size() - 3));
        rest.remove_prefix(scheme.size());
      }
    }
    if (const size_t slash = rest.find('/'); slash != std::string_view::npos) {
      addr.path = std::string(rest.substr(slash));
      rest = rest.substr(0, slash);
    }
  }
  addr.host = SplitOn(rest, '.');
  if (addr.host.size() < 2) return std::nullopt;
  for (const std::string& label : addr.host) {
    if (!IsLabel(label)) return std::nullopt;
  }
  const std::string tld = ToLowerAscii(addr.host.back());
  if (!IsAlphaAscii(tld) || g.TldSpoken(tld) == nullptr) return std::nullopt;
  return addr;
}

}  // namespace

std::vector<Reading> VerbalizeDate(std::string_view span, const GrammarSet& g) {
  const std::vector<std::string> toks = TokenTexts(span);
  std::vector<Reading> out;
  auto emit = [&](std::vector<std::string> words) {
    out.push_back(MakeReading(SemioticClass::kDate, std::move(words)));
  };
  if (toks.size() == 1) {
    const std::string& t = toks[0];
    if (auto year = ParseYear(t); year && t.size() == 4) {
      if (*year >= 1100 && *year < 2100) {
        emit(VerbalizeYear(*year));
        if (VerbalizeCardinal(*year) != VerbalizeYear(*year)) {
          emit(VerbalizeCardinal(*year));
        }
      }
      return out;
    }
    for (char sep : {'/', '-'}) {
      const std::vector<std::string> parts = SplitOn(t, sep);
      if (parts.size() == 2 && sep == '/') {
        auto m = SmallInt(parts[0], 2);
        auto d = SmallInt(parts[1], 2);
        if (m && d && ValidMonthDay(*m, *d)) emit(DateWords(g, *m, *d, std::nullopt));
      } else if (parts.size() == 3) {
        if (parts[0].size() == 4) {
          auto y = ParseYear(parts[0]);
          auto m = SmallInt(parts[1], 2);
          auto d = SmallInt(parts[2], 2);
          if (y && m && d && ValidMonthDay(*m, *d)) emit(DateWords(g, *m, *d, y));
        } else if (parts[2].size() == 4) {
          auto m = SmallInt(parts[0], 2);
          auto d = SmallInt(parts[1], 2);
          auto y = ParseYear(parts[2]);
          if (y && m && d && ValidMonthDay(*m, *d)) emit(DateWords(g, *m, *d, y));
        }
      }
    }
    return out;
  }
  // Multi-token: drop a comma before the year.
  std::vector<std::string> parts;
  for (const std::string& t : toks) {
    if (t != ",") parts.push_back(t);
  }
  if (parts.size() < 2 || parts.size() > 3 || parts.size() + 1 < toks.size()) {
    return out;
  }
  std::optional<int> year;
  if (parts.size() == 3) {
    year = ParseYear(parts[2]);
    if (!year) return out;
  } else if (toks.size() != parts.size()) {
    return out;  // "4 July ,"
  }
  if (auto m = g.MonthNumber(parts[1]); m && !IsDigits(parts[1])) {
    if (auto d = ParseDay(parts[0]); d && ValidMonthDay(*m, *d)) {
      emit(DateWords(g, *m, *d, year));
    }
  } else if (auto m2 = g.MonthNumber(parts[0]); m2 && !IsDigits(parts[0])) {
    if (auto d = ParseDay(parts[1]); d && ValidMonthDay(*m2, *d)) {
      emit(DateWords(g, *m2, *d, year));
    }
  }
  return out;
}

std::vector<Reading> VerbalizeTime(std::string_view span) {
  const std::vector<std::string> toks = TokenTexts(span);
  std::vector<Reading> out;
  if (toks.empty() || toks.size() > 2) return out;
  std::string head = toks[0];
  std::optional<std::string> ampm;
  if (toks.size() == 2) {
    ampm = AmPm(toks[1]);
    if (!ampm) return out;
  } else {
    for (std::string_view suffix : {"am", "pm", "AM", "PM"}) {
      if (head.size() > 2 && head.ends_with(suffix)) {
        ampm = AmPm(suffix);
        head.resize(head.size() - 2);
        break;
      }
    }
  }
  if (auto clock = ParseClock(head)) {
    if (ampm && (clock->first == 0 || clock->first > 12)) return out;
    std::vector<std::string> words = ClockWords(clock->first, clock->second, ampm.has_value());
    if (ampm) Append(&words, SplitSpaces(*ampm));
    out.push_back(MakeReading(SemioticClass::kTime, std::move(words)));
  } else if (ampm) {
    auto hour = SmallInt(head, 2);
    if (hour && *hour >= 1 && *hour <= 12) {
      std::vector<std::string> words = VerbalizeCardinal(*hour);
      Append(&words, SplitSpaces(*ampm));
      out.push_back(MakeReading(SemioticClass::kTime, std::move(words)));
    }
  }
  return out;
}

std::vector<Reading> VerbalizeMoney(std::string_view span, const GrammarSet& g) {
  const std::vector<std::string> toks = TokenTexts(span);
  std::vector<Reading> out;
  if (toks.empty() || toks.size() > 2) return out;
  auto currency = g.MatchCurrencyPrefix(toks[0]);
  if (!currency) return out;
  const CurrencyEntry& cur = *currency->first;
  auto lit = ParseNumberLiteral(std::string_view(toks[0]).substr(currency->second));
  if (!lit) return out;
  std::vector<std::string> words;
  if (toks.size() == 2) {
    static const std::set<std::string> kScaleWords = {"thousand", "million",
                                                      "billion", "trillion"};
    if (!kScaleWords.count(toks[1])) return out;
    words = SpeakNumber(*lit);
    words.push_back(toks[1]);
    Append(&words, SplitSpaces(cur.major_plural));
  } else if (lit->has_point && lit->fraction.size() == 2 && lit->integer) {
    const int cents = std::stoi(lit->fraction);
    if (*lit->integer > 0) {
      words = VerbalizeCardinal(*lit->integer);
      Append(&words, SplitSpaces(*lit->integer == 1 ? cur.major_singular
                                                   : cur.major_plural));
    }
    if (cents > 0 || *lit->integer == 0) {
      Append(&words, VerbalizeCardinal(cents));
      Append(&words, SplitSpaces(cents == 1 ? cur.minor_singular : cur.minor_plural));
    }
  } else {
    words = SpeakNumber(*lit);
    Append(&words, SplitSpaces(lit->IsExactlyOne() ? cur.major_singular
                                                   : cur.major_plural));
  }
  out.push_back(MakeReading(SemioticClass::kMoney, std::move(words)));
  return out;
}

std::vector<Reading> VerbalizeMeasure(std::string_view span, const GrammarSet& g) {
  const std::vector<std::string> toks = TokenTexts(span);
  std::vector<Reading> out;
  std::optional<NumberLiteral> lit;
  const UnitEntry* unit = nullptr;
  if (toks.size() == 1) {
    auto split = SplitNumberPrefix(toks[0]);
    if (!split) return out;
    lit = split->first;
    unit = g.FindUnit(split->second);
  } else if (toks.size() == 2) {
    // Detached one-letter units and "in" read too often as words.
    if (toks[1].size() < 2 || toks[1] == "in") return out;
    lit = ParseNumberLiteral(toks[0]);
    unit = g.FindUnit(toks[1]);
  }
  if (!lit || unit == nullptr) return out;
  std::vector<std::string> words = SpeakNumber(*lit);
  Append(&words, SplitSpaces(lit->IsExactlyOne() ? unit->singular : unit->plural));
  out.push_back(MakeReading(SemioticClass::kMeasure, std::move(words)));
  return out;
}

std::vector<Reading> VerbalizeDecimal(std::string_view span) {
  auto lit = ParseNumberLiteral(span);
  if (!lit || !lit->has_point || lit->fraction.empty()) return {};
  return {MakeReading(SemioticClass::kDecimal, SpeakNumber(*lit))};
}

std::vector<Reading> VerbalizeFraction(std::string_view span) {
  const std::vector<std::string> parts = SplitOn(span, '/');
  if (parts.size() != 2) return {};
  auto num = ParseIntegerLiteral(parts[0]);
  auto den = ParseIntegerLiteral(parts[1]);
  if (!num || !den || parts[0].find(',') != std::string::npos ||
      parts[1].find(',') != std::string::npos || *num < 1 || *den < 2 ||
      *den >= kMaxOrdinal) {
    return {};
  }
  const bool plural = *num != 1;
  std::vector<std::string> quantity = VerbalizeCardinal(*num);
  if (*den == 2) {
    quantity.push_back(plural ? "halves" : "half");
  } else if (*den == 4) {
    quantity.push_back(plural ? "quarters" : "quarter");
  } else {
    std::vector<std::string> ord = VerbalizeOrdinal(*den);
    if (plural) ord.back() += "s";
    Append(&quantity, ord);
  }
  std::vector<std::string> math = VerbalizeCardinal(*num);
  math.push_back("divided");
  math.push_back("by");
  Append(&math, VerbalizeCardinal(*den));
  return {MakeReading(SemioticClass::kFraction, std::move(quantity)),
          MakeReading(SemioticClass::kFraction, std::move(math))};
}

std::vector<Reading> VerbalizeOrdinalToken(std::string_view span) {
  if (span.size() < 3) return {};
  const std::string suffix = ToLowerAscii(span.substr(span.size() - 2));
  auto n = ParseIntegerLiteral(span.substr(0, span.size() - 2));
  if (!n || *n < 1 || *n >= kMaxOrdinal) return {};
  std::string expected = "th";
  if (*n % 100 < 11 || *n % 100 > 13) {
    if (*n % 10 == 1) expected = "st";
    if (*n % 10 == 2) expected = "nd";
    if (*n % 10 == 3) expected = "rd";
  }
  if (suffix != expected) return {};
  return {MakeReading(SemioticClass::kOrdinal, VerbalizeOrdinal(*n))};
}

std::vector<Reading> VerbalizeCardinalToken(std::string_view span) {
  const bool negative = span.starts_with('-');
  if (negative) span.remove_prefix(1);
  auto n = ParseIntegerLiteral(span);
  if (!n) return {};
  std::vector<std::string> words;
  if (negative) words.push_back("minus");
  Append(&words, VerbalizeCardinal(*n));
  return {MakeReading(SemioticClass::kCardinal, std::move(words))};
}

std::vector<Reading> VerbalizeRoman(std::string_view span,
                                    std::optional<std::string_view> context_word) {
  if (span.size() == 1) {
    if (!context_word || context_word->empty() ||
        !std::isupper(static_cast<unsigned char>(context_word->front())) ||
        !IsAlphaAscii(*context_word)) {
      return {};
    }
  }
  return RomanReadings(span);
}

bool LooksElectronic(std::string_view token, const GrammarSet& g) {
  return ParseAddress(token, g).has_value();
}

std::vector<Reading> SegmentElectronic(std::string_view span, const GrammarSet& g) {
  auto addr = ParseAddress(span, g);
  if (!addr) return {};
  std::vector<std::vector<Option>> parts;
  std::vector<std::string> spelled;
  auto fixed = [&](Option opt) {
    Append(&spelled, opt.words);
    parts.push_back({std::move(opt)});
  };
  auto label = [&](std::string_view text) {
    Append(&spelled, SpellChars(text, g).words);
    parts.push_back(LabelOptions(text, g));
  };
  auto symbol = [&](char c) { fixed(SpellChars(std::string_view(&c, 1), g)); };
  if (!addr->scheme.empty()) {
    fixed(SpellChars(addr->scheme, g));
    symbol(':');
    symbol('/');
    symbol('/');
  }
  if (!addr->local.empty()) {
    const std::vector<std::string> pieces = SplitOn(addr->local, '.');
    for (size_t i = 0; i < pieces.size(); ++i) {
      if (i > 0) symbol('.');
      if (!pieces[i].empty()) label(pieces[i]);
    }
    symbol('@');
  }
  for (size_t i = 0; i < addr->host.size(); ++i) {
    if (i > 0) symbol('.');
    const std::string lower = ToLowerAscii(addr->host[i]);
    if (i + 1 == addr->host.size()) {
      fixed(Option{SplitSpaces(*g.TldSpoken(lower)), 0});
    } else if (lower == "www") {
      fixed(SpellChars(lower, g));
    } else {
      label(addr->host[i]);
    }
  }
  if (!addr->path.empty()) fixed(SpellChars(addr->path, g));

  // Combinations best-first, then the full spelling. Each later reading costs
  // one tick more so the shortest path prefers the better segmentation.
  std::vector<Reading> out;
  std::set<std::vector<std::string>> seen;
  auto add = [&](std::vector<std::string> words) {
    if (!seen.insert(words).second) return;
    Reading r = MakeReading(SemioticClass::kElectronic, std::move(words));
    r.weight += Weight::FromTicks(static_cast<int64_t>(
        std::min(out.size(), kMaxElectronicReadings / 2)));
    out.push_back(std::move(r));
  };
  std::vector<Option> combos = Combine(parts, kMaxElectronicReadings - 1);
  for (Option& combo : combos) add(std::move(combo.words));
  add(std::move(spelled));
  return out;
}

bool IsVerbatimCode(std::string_view token) {
  if (token.empty() || token.size() > 12) return false;
  bool letter = false;
  bool digit = false;
  for (char c : token) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digit = true;
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      letter = true;
    } else {
      return false;
    }
  }
  if (letter && digit) return true;
  // Zero-padded digit strings ("007") are codes, not numbers.
  return digit && token.size() >= 2 && token[0] == '0';
}

Reading VerbalizeVerbatim(std::string_view span) {
  std::vector<std::string> words;
  for (char c : span) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      words.push_back(DigitWord(c));
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      words.push_back(LetterWord(c));
    }
  }
  return MakeReading(SemioticClass::kVerbatim, std::move(words));
}

std::vector<Reading> VerbalizeClass(SemioticClass c, std::string_view span,
                                    const GrammarSet& g) {
  switch (c) {
    case SemioticClass::kDate: return VerbalizeDate(span, g);
    case SemioticClass::kTime: return VerbalizeTime(span);
    case SemioticClass::kMoney: return VerbalizeMoney(span, g);
    case SemioticClass::kMeasure: return VerbalizeMeasure(span, g);
    case SemioticClass::kDecimal: return VerbalizeDecimal(span);
    case SemioticClass::kFraction: return VerbalizeFraction(span);
    case SemioticClass::kOrdinal: return VerbalizeOrdinalToken(span);
    case SemioticClass::kCardinal: return VerbalizeCardinalToken(span);
    case SemioticClass::kRoman: return RomanReadings(span);
    case SemioticClass::kElectronic: return SegmentElectronic(span, g);
    case SemioticClass::kVerbatim: {
      Reading r = VerbalizeVerbatim(span);
      if (r.spoken.empty()) return {};
      return {std::move(r)};
    }
    case SemioticClass::kPlain:
    case SemioticClass::kPunct:
      break;
  }
  return {};
}

Reading UnchangedReading(const TokenSpan& span) {
  Reading verbatim{SemioticClass::kPlain, span.tokens, kPlainWeight, false};
  if (span.tokens.size() != 1) return verbatim;
  const std::string& tok = span.tokens[0];
  // Pieces: digit runs, letter runs, single other characters.
  struct Piece {
    std::string text;
    int kind;  // 0 digits, 1 letters, 2 symbol
  };
  std::vector<Piece> pieces;
  for (char c : tok) {
    const auto u = static_cast<unsigned char>(c);
    const int kind = std::isdigit(u) ? 0 : (std::isalpha(u) ? 1 : 2);
    if (!pieces.empty() && pieces.back().kind == kind && kind != 2) {
      pieces.back().text += c;
    } else if (!pieces.empty() && kind == 2 && pieces.back().kind == 2 && u >= 0x80) {
      pieces.back().text += c;  // keep UTF-8 sequences together
    } else {
      pieces.push_back({std::string(1, c), kind});
    }
  }
  if (pieces.size() < 2) return verbatim;
  Reading r{SemioticClass::kPlain, {}, Weight::Zero(), false};
  std::string text;
  int prev_kind = -1;
  for (const Piece& p : pieces) {
    std::string spoken;
    if (p.kind == 0) {
      auto n = ParseIntegerLiteral(p.text);
      spoken = Join(n ? VerbalizeCardinal(*n) : VerbalizeDigits(p.text));
      r.weight += ClassWeight(SemioticClass::kCardinal);
    } else if (p.kind == 1) {
      spoken = p.text;
      r.weight += kPlainWeight;
    } else {
      spoken = p.text;
      r.weight += kPunctWeight;
    }
    // Symbols glue to their neighbours; word pieces are space-separated.
    if (!text.empty() && p.kind != 2 && prev_kind != 2) text += ' ';
    text += spoken;
    prev_kind = p.kind;
  }
  r.spoken = SplitWhitespace(text);
  return r;
}

std::vector<Reading> Readings(const TokenSpan& span, const GrammarSet& g) {
  if (!span.is_semiotic) {
    const bool punct = !span.classes.empty() && span.classes[0] == SemioticClass::kPunct;
    return {Reading{punct ? SemioticClass::kPunct : SemioticClass::kPlain, span.tokens,
                    punct ? kPunctWeight : kPlainWeight, true}};
  }
  std::vector<Reading> all;
  for (SemioticClass c : span.classes) {
    for (Reading& r : VerbalizeClass(c, span.text, g)) all.push_back(std::move(r));
  }
  all.push_back(UnchangedReading(span));
  // Classes were visited in priority order, so the first reading of a surface
  // form is also its cheapest.
  std::vector<Reading> out;
  std::set<std::vector<std::string>> seen;
  for (Reading& r : all) {
    if (seen.insert(r.spoken).second) out.push_back(std::move(r));
  }
  std::stable_sort(out.begin(), out.end(), [](const Reading& a, const Reading& b) {
    if (a.weight != b.weight) return a.weight < b.weight;
    return a.spoken < b.spoken;
  });
  return out;
}

}  // namespace fusenorm
