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

#ifndef FUSENORM_TAGGER_H_
#define FUSENORM_TAGGER_H_

#include <string>
#include <string_view>
#include <vector>

#include "fusenorm/grammar.h"

namespace fusenorm {

inline constexpr size_t kMaxSentenceLength = 10'000;
inline constexpr size_t kMaxSemioticSpans = 20;
inline constexpr size_t kMaxLookahead = 4;

struct Token {
  std::string text;
  size_t start = 0;
  size_t end = 0;
  bool space_before = false;
};

// Whitespace split, then leading/trailing punctuation split off into separate
// tokens. Dotted abbreviations ("U.S.", "a.m.") keep their final period.
std::vector<Token> Tokenize(std::string_view sentence);

// Classifies the sentence into tiling spans. Multi-token matchers (dates,
// times, measures, codes) look ahead up to kMaxLookahead tokens and the
// longest match wins. Semiotic spans beyond the kMaxSemioticSpans-th are
// demoted to PLAIN with a warning. Throws DataError for sentences longer than
// kMaxSentenceLength bytes.
std::vector<TokenSpan> Tag(std::string_view sentence, const GrammarSet& g);

}  // namespace fusenorm

#endif  // FUSENORM_TAGGER_H_
