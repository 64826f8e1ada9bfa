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

#include "fusenorm/equivalence.h"

#include <array>
#include <fstream>
#include <istream>
#include <stdexcept>

#include <spdlog/spdlog.h>

#include "fusenorm/errors.h"
#include "fusenorm/grammar.h"
#include "fusenorm/number_words.h"
#include "fusenorm/text_util.h"

namespace fusenorm {
namespace {

constexpr size_t kMaxRewrites = 10000;

constexpr std::array<std::string_view, 12> kMonths = {
    "january", "february", "march",     "april",   "may",      "june",
    "july",    "august",   "september", "october", "november", "december"};

constexpr std::array<std::string_view, 10> kDigits = {
    "zero", "one", "two", "three", "four", "five", "six", "seven", "eight", "nine"};

bool IsNumberWord(const std::string& word) {
  return ParseCardinalWords(std::span<const std::string>(&word, 1)).has_value() ||
         word == "hundred" || word == "thousand" || word == "million" ||
         word == "billion" || word == "trillion";
}

EquivRule::PatternToken ParsePatternToken(const std::string& tok) {
  using Kind = EquivRule::PatternToken::Kind;
  if (tok == "<month>") return {Kind::kMonth, {}};
  if (tok == "<ordinal>") return {Kind::kOrdinal, {}};
  if (tok == "<cardinal>") return {Kind::kCardinal, {}};
  if (tok == "<digit>") return {Kind::kDigit, {}};
  if (tok.front() == '<' && tok.back() == '>') {
    throw std::invalid_argument("unknown capture class " + tok);
  }
  return {Kind::kLiteral, tok};
}

size_t ParseCaptureIndex(std::string_view digits, size_t captures) {
  if (digits.empty() || !IsDigits(digits) || digits.size() > 2) {
    throw std::invalid_argument("bad capture reference");
  }
  const size_t n = std::stoul(std::string(digits));
  if (n < 1 || n > captures) {
    throw std::invalid_argument("capture $" + std::string(digits) + " out of range");
  }
  return n - 1;
}

EquivRule::RewriteToken ParseRewriteToken(const std::string& tok, size_t captures) {
  using Kind = EquivRule::RewriteToken::Kind;
  constexpr std::string_view kYear = "${year:";
  if (tok.starts_with(kYear) && tok.ends_with("}")) {
    return {Kind::kYear, {},
            ParseCaptureIndex(std::string_view(tok).substr(
                                  kYear.size(), tok.size() - kYear.size() - 1),
                              captures)};
  }
  if (tok.starts_with("$")) {
    return {Kind::kCapture, {}, ParseCaptureIndex(std::string_view(tok).substr(1), captures)};
  }
  return {Kind::kLiteral, tok, 0};
}

struct Match {
  size_t length = 0;
  std::vector<std::vector<std::string>> captures;
  std::vector<int64_t> values;  // numeric value per capture, -1 if none
};

// Number-class captures must start a number: the previous word may not be a
// number word, so "one hundred two thousand" never yields "two thousand".
bool StartsNumber(std::span<const std::string> tokens, size_t i) {
  return i == 0 || !IsNumberWord(tokens[i - 1]);
}

std::optional<Match> MatchAt(const EquivRule& rule, std::span<const std::string> tokens,
                             size_t start) {
  using Kind = EquivRule::PatternToken::Kind;
  Match m;
  size_t i = start;
  for (const EquivRule::PatternToken& p : rule.pattern) {
    if (i >= tokens.size()) return std::nullopt;
    const auto rest = tokens.subspan(i);
    size_t used = 0;
    int64_t value = -1;
    switch (p.kind) {
      case Kind::kLiteral:
        if (tokens[i] != p.literal) return std::nullopt;
        i += 1;
        continue;
      case Kind::kMonth:
        if (!IsMonthWord(tokens[i])) return std::nullopt;
        used = 1;
        break;
      case Kind::kDigit:
        if (std::find(kDigits.begin(), kDigits.end(), tokens[i]) == kDigits.end()) {
          return std::nullopt;
        }
        used = 1;
        break;
      case Kind::kOrdinal:
      case Kind::kCardinal: {
        if (!StartsNumber(tokens, i)) return std::nullopt;
        const auto parsed = p.kind == Kind::kOrdinal ? ParseOrdinalWords(rest)
                                                     : ParseCardinalWords(rest);
        if (!parsed) return std::nullopt;
        used = parsed->consumed;
        value = parsed->value;
        break;
      }
    }
    m.captures.emplace_back(tokens.begin() + static_cast<ptrdiff_t>(i),
                            tokens.begin() + static_cast<ptrdiff_t>(i + used));
    m.values.push_back(value);
    i += used;
  }
  m.length = i - start;
  return m;
}

std::vector<std::string> Rewrite(const EquivRule& rule, const Match& m) {
  using Kind = EquivRule::RewriteToken::Kind;
  std::vector<std::string> out;
  for (const EquivRule::RewriteToken& r : rule.rewrite) {
    switch (r.kind) {
      case Kind::kLiteral:
        out.push_back(r.literal);
        break;
      case Kind::kCapture:
        out.insert(out.end(), m.captures[r.capture].begin(), m.captures[r.capture].end());
        break;
      case Kind::kYear: {
        const int64_t v = m.values[r.capture];
        if (v >= 1100 && v <= 2099) {
          for (std::string& w : VerbalizeYear(static_cast<int>(v))) out.push_back(std::move(w));
        } else {
          out.insert(out.end(), m.captures[r.capture].begin(), m.captures[r.capture].end());
        }
        break;
      }
    }
  }
  return out;
}

// Applies the first rule (in file order) that changes anything, at its
// leftmost position. Returns false at a fixed point.
bool RewriteOnce(const std::vector<EquivRule>& rules, std::vector<std::string>& tokens) {
  for (const EquivRule& rule : rules) {
    for (size_t i = 0; i < tokens.size(); ++i) {
      const auto m = MatchAt(rule, tokens, i);
      if (!m) continue;
      std::vector<std::string> replacement = Rewrite(rule, *m);
      const auto begin = tokens.begin() + static_cast<ptrdiff_t>(i);
      const auto end = begin + static_cast<ptrdiff_t>(m->length);
      if (std::equal(begin, end, replacement.begin(), replacement.end())) continue;
      tokens.erase(begin, end);
      tokens.insert(tokens.begin() + static_cast<ptrdiff_t>(i), replacement.begin(),
                    replacement.end());
      return true;
    }
  }
  return false;
}

}  // namespace

bool IsMonthWord(std::string_view word) {
  return std::find(kMonths.begin(), kMonths.end(), word) != kMonths.end();
}

std::vector<std::string> CanonicalTokens(std::string_view text) {
  std::string cleaned;
  cleaned.reserve(text.size());
  for (char c : text) {
    if (c == '\'') continue;
    cleaned += IsPunctuationChar(c) ? ' ' : c;
  }
  return SplitWhitespace(ToLowerAscii(cleaned));
}

EquivRuleSet EquivRuleSet::Parse(std::istream& in, const std::string& source) {
  std::vector<EquivRule> rules;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (TrimAscii(line).empty() || line.front() == '#') continue;
    const std::string where = source + ":" + std::to_string(line_no) + ": ";
    const std::vector<std::string> fields = SplitOn(line, '\t');
    if (fields.size() != 2) throw DataError(where + "expected pattern<TAB>rewrite");
    EquivRule rule;
    rule.text = line;
    try {
      size_t captures = 0;
      for (const std::string& tok : SplitWhitespace(fields[0])) {
        rule.pattern.push_back(ParsePatternToken(tok));
        if (rule.pattern.back().kind != EquivRule::PatternToken::Kind::kLiteral) ++captures;
      }
      for (const std::string& tok : SplitWhitespace(fields[1])) {
        rule.rewrite.push_back(ParseRewriteToken(tok, captures));
      }
    } catch (const std::invalid_argument& e) {
      throw DataError(where + e.what());
    }
    if (rule.pattern.empty()) throw DataError(where + "empty pattern");
    rules.push_back(std::move(rule));
  }
  return EquivRuleSet(std::move(rules));
}

EquivRuleSet EquivRuleSet::Load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path);
  return Parse(in, path);
}

EquivRuleSet EquivRuleSet::LoadDefault() {
  return Load((GrammarSet::DefaultDataDir() / "equiv_rules.tsv").string());
}

std::string EquivRuleSet::Canonicalize(std::string_view text) const {
  std::vector<std::string> tokens = CanonicalTokens(text);
  size_t steps = 0;
  while (RewriteOnce(rules_, tokens)) {
    if (++steps == kMaxRewrites) {
      spdlog::warn("equivalence rules did not converge on '{}'", text);
      break;
    }
  }
  return Join(tokens);
}

}  // namespace fusenorm
