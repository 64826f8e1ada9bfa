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

#include "fusenorm/tagger.h"

#include <algorithm>
#include <cctype>
#include <string_view>

#include <spdlog/spdlog.h>

#include "fusenorm/errors.h"
#include "fusenorm/text_util.h"
#include "fusenorm/verbalizers.h"

namespace fusenorm {
namespace {

constexpr std::string_view kLeading = "\"'([{<";
constexpr std::string_view kTrailing = ".,!?;:\"')]}>";

bool IsSpace(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

// "U.S.", "a.m.", "Ph.D." keep their final period.
bool IsDottedAbbreviation(std::string_view core) {
  if (core.find('.') == std::string_view::npos) return false;
  for (const std::string& seg : SplitOn(core, '.')) {
    if (seg.empty() || seg.size() > 2 || !IsAlphaAscii(seg)) return false;
  }
  return true;
}

void SplitRawToken(std::string_view sentence, size_t begin, size_t end,
                   bool space_before, std::vector<Token>* out) {
  std::string_view raw = sentence.substr(begin, end - begin);
  if (IsPunctuationToken(raw) && raw.find_first_of("$€£¥%") == std::string_view::npos) {
    out->push_back({std::string(raw), begin, end, space_before});
    return;
  }
  size_t b = begin;
  size_t e = end;
  std::vector<Token> lead;
  while (e - b > 1 && kLeading.find(sentence[b]) != std::string_view::npos) {
    lead.push_back({std::string(1, sentence[b]), b, b + 1, false});
    ++b;
  }
  std::vector<Token> trail;  // collected back to front
  while (e - b > 1 && kTrailing.find(sentence[e - 1]) != std::string_view::npos) {
    const char c = sentence[e - 1];
    if (c == '.' && IsDottedAbbreviation(sentence.substr(b, e - b))) break;
    size_t run = e - 1;
    while (c == '.' && run > b + 1 && sentence[run - 1] == '.') --run;  // "..."
    trail.push_back({std::string(sentence.substr(run, e - run)), run, e, false});
    e = run;
  }
  if (!lead.empty()) lead.front().space_before = space_before;
  out->insert(out->end(), lead.begin(), lead.end());
  out->push_back({std::string(sentence.substr(b, e - b)), b, e,
                  lead.empty() ? space_before : false});
  out->insert(out->end(), trail.rbegin(), trail.rend());
}

std::vector<SemioticClass> MultiTokenClasses(std::string_view text,
                                             std::span<const Token> toks,
                                             const GrammarSet& g) {
  std::vector<SemioticClass> classes;
  for (SemioticClass c : {SemioticClass::kDate, SemioticClass::kTime,
                          SemioticClass::kMoney, SemioticClass::kMeasure}) {
    if (!VerbalizeClass(c, text, g).empty()) classes.push_back(c);
  }
  // Spelled codes: "CB 10 1 SD", "SW1A 1AA".
  auto is_mixed = [](const std::string& t) {
    return IsVerbatimCode(t) && !IsDigits(t);
  };
  const std::string& first = toks[0].text;
  const bool first_ok = (IsUpperAscii(first) && first.size() >= 2 && first.size() <= 3) ||
                        (is_mixed(first) && first.size() <= 4);
  bool all_ok = first_ok;
  bool has_digit = false;
  bool all_mixed = true;
  for (const Token& t : toks) {
    const std::string& s = t.text;
    const bool digits = IsDigits(s) && s.size() <= 3;
    const bool letters = IsUpperAscii(s) && s.size() <= 3;
    const bool mixed = is_mixed(s) && s.size() <= 4;
    if (!t.space_before && &t != &toks[0]) all_ok = false;
    if (!(digits || letters || mixed)) all_ok = false;
    if (digits || mixed) has_digit = true;
    if (!mixed) all_mixed = false;
  }
  if (all_ok && has_digit && (toks.size() >= 3 || all_mixed)) {
    classes.push_back(SemioticClass::kVerbatim);
  }
  return classes;
}

std::vector<SemioticClass> SingleTokenClasses(std::span<const Token> tokens, size_t i,
                                              const GrammarSet& g) {
  const std::string& text = tokens[i].text;
  std::vector<SemioticClass> classes;
  for (SemioticClass c : kSemioticClasses) {
    bool fires = false;
    switch (c) {
      case SemioticClass::kRoman: {
        std::optional<std::string_view> context;
        // The word before a single-letter numeral must be a capitalized word
        // that does not itself start the sentence ("When Henry I died").
        if (i >= 2 && tokens[i - 1].space_before) context = tokens[i - 1].text;
        fires = !VerbalizeRoman(text, context).empty();
        break;
      }
      case SemioticClass::kElectronic:
        fires = LooksElectronic(text, g);
        break;
      case SemioticClass::kVerbatim:
        fires = IsVerbatimCode(text);
        break;
      default:
        fires = !VerbalizeClass(c, text, g).empty();
    }
    if (fires) classes.push_back(c);
  }
  return classes;
}

}  // namespace

std::vector<Token> Tokenize(std::string_view sentence) {
  std::vector<Token> tokens;
  size_t i = 0;
  bool space_before = true;
  while (i < sentence.size()) {
    if (IsSpace(sentence[i])) {
      space_before = true;
      ++i;
      continue;
    }
    const size_t begin = i;
    while (i < sentence.size() && !IsSpace(sentence[i])) ++i;
    SplitRawToken(sentence, begin, i, space_before, &tokens);
    space_before = false;
  }
  return tokens;
}

std::vector<TokenSpan> Tag(std::string_view sentence, const GrammarSet& g) {
  if (sentence.size() > kMaxSentenceLength) {
    throw DataError("sentence longer than " + std::to_string(kMaxSentenceLength) +
                    " bytes");
  }
  const std::vector<Token> tokens = Tokenize(sentence);
  std::vector<TokenSpan> spans;
  size_t i = 0;
  while (i < tokens.size()) {
    size_t len = 1;
    std::vector<SemioticClass> classes;
    for (size_t n = std::min(kMaxLookahead, tokens.size() - i); n >= 2; --n) {
      const size_t b = tokens[i].start;
      const size_t e = tokens[i + n - 1].end;
      classes = MultiTokenClasses(sentence.substr(b, e - b),
                                  std::span(tokens).subspan(i, n), g);
      if (!classes.empty()) {
        len = n;
        break;
      }
    }
    if (classes.empty()) classes = SingleTokenClasses(tokens, i, g);

    TokenSpan span;
    span.start = tokens[i].start;
    span.end = tokens[i + len - 1].end;
    span.text = std::string(sentence.substr(span.start, span.end - span.start));
    span.space_before = tokens[i].space_before;
    for (size_t k = i; k < i + len; ++k) span.tokens.push_back(tokens[k].text);
    if (!classes.empty()) {
      span.classes = std::move(classes);
      span.is_semiotic = true;
    } else if (IsPunctuationToken(span.text)) {
      span.classes = {SemioticClass::kPunct};
    } else {
      span.classes = {SemioticClass::kPlain};
    }
    spans.push_back(std::move(span));
    i += len;
  }

  size_t semiotic = 0;
  size_t demoted = 0;
  for (TokenSpan& span : spans) {
    if (!span.is_semiotic) continue;
    if (++semiotic > kMaxSemioticSpans) {
      span.is_semiotic = false;
      span.classes = {SemioticClass::kPlain};
      ++demoted;
    }
  }
  if (demoted > 0) {
    spdlog::warn("sentence has {} semiotic spans; {} beyond the first {} left unchanged",
                 semiotic, demoted, kMaxSemioticSpans);
  }
  return spans;
}

}  // namespace fusenorm
