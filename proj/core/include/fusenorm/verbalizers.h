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

#ifndef FUSENORM_VERBALIZERS_H_
#define FUSENORM_VERBALIZERS_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fusenorm/grammar.h"

namespace fusenorm {

// Each verbalizer returns every reading of `span` for its class, or an empty
// set when the span does not match the class pattern. Multi-token spans
// ("4 July 1776", "CB 10 1 SD") are passed as their source text.

// M/D, M/D/YYYY, YYYY/MM/DD, YYYY-MM-DD, bare years, "D Month [Y]" and
// "Month D[,] [Y]". Canonical form: month-name ordinal-day [pairwise year].
std::vector<Reading> VerbalizeDate(std::string_view span, const GrammarSet& g);
std::vector<Reading> VerbalizeTime(std::string_view span);
std::vector<Reading> VerbalizeMoney(std::string_view span, const GrammarSet& g);
std::vector<Reading> VerbalizeMeasure(std::string_view span, const GrammarSet& g);
std::vector<Reading> VerbalizeDecimal(std::string_view span);
// Quantity form ("one quarter") and math form ("one divided by four").
std::vector<Reading> VerbalizeFraction(std::string_view span);
std::vector<Reading> VerbalizeOrdinalToken(std::string_view span);
std::vector<Reading> VerbalizeCardinalToken(std::string_view span);

// Numerals I..XXXIX. Returns cardinal, "the" + ordinal and bare ordinal.
// The single letters I, V and X are only read as numerals after a
// capitalized context word ("Henry I"); pass nullopt when there is none.
std::vector<Reading> VerbalizeRoman(std::string_view span,
                                    std::optional<std::string_view> context_word);

// Dictionary segmentations of the address labels, best first, then the full
// character spelling; at most kMaxElectronicReadings in total. Reading i
// weighs min(i, 8) ticks above the class weight.
inline constexpr size_t kMaxElectronicReadings = 16;
std::vector<Reading> SegmentElectronic(std::string_view span, const GrammarSet& g);
bool LooksElectronic(std::string_view token, const GrammarSet& g);

// Character-by-character reading: letters lowercased, digits as digit words.
Reading VerbalizeVerbatim(std::string_view span);
bool IsVerbatimCode(std::string_view token);

// Dispatches to the class verbalizer. ROMAN is read without a context guard.
std::vector<Reading> VerbalizeClass(SemioticClass c, std::string_view span,
                                    const GrammarSet& g);

// The reading that leaves a semiotic span unverbalized. A single token with
// internal structure ("1/4") is read piece by piece: digit runs as cardinals,
// symbols kept at punctuation weight, letter runs kept at plain weight.
// Anything else is kept verbatim at plain weight.
Reading UnchangedReading(const TokenSpan& span);

// All readings of a tagged span, one canonical surface per interpretation,
// sorted by (weight, text). Semiotic spans always include UnchangedReading.
std::vector<Reading> Readings(const TokenSpan& span, const GrammarSet& g);

}  // namespace fusenorm

#endif  // FUSENORM_VERBALIZERS_H_
