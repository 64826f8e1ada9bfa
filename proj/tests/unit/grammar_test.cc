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

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <set>

#include "fusenorm/errors.h"
#include "fusenorm/grammar.h"
#include "fusenorm/number_words.h"
#include "fusenorm/tagger.h"
#include "fusenorm/text_util.h"
#include "fusenorm/verbalizers.h"

namespace fusenorm {
namespace {

const GrammarSet& G() { return GrammarSet::Default(); }

std::set<std::string> Texts(const std::vector<Reading>& rs) {
  std::set<std::string> out;
  for (const Reading& r : rs) out.insert(r.Text());
  return out;
}

// Hand-rolled Roman numeral value, independent of the grammar.
int RomanValue(const std::string& s) {
  auto v = [](char c) {
    switch (c) {
      case 'I': return 1;
      case 'V': return 5;
      case 'X': return 10;
      default: return 0;
    }
  };
  int total = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    const int cur = v(s[i]);
    total += (i + 1 < s.size() && cur < v(s[i + 1])) ? -cur : cur;
  }
  return total;
}

TEST(NumberWordsTest, Cardinals) {
  EXPECT_EQ(Join(VerbalizeCardinal(10001)), "ten thousand one");
  EXPECT_EQ(Join(VerbalizeCardinal(0)), "zero");
  EXPECT_EQ(Join(VerbalizeCardinal(4)), "four");
  EXPECT_EQ(Join(VerbalizeCardinal(1970)), "one thousand nine hundred seventy");
  EXPECT_EQ(Join(VerbalizeCardinal(999'999'999'999'999)),
            "nine hundred ninety nine trillion nine hundred ninety nine billion nine "
            "hundred ninety nine million nine hundred ninety nine thousand nine hundred "
            "ninety nine");
  EXPECT_THROW(VerbalizeCardinal(-1), std::out_of_range);
  EXPECT_THROW(VerbalizeCardinal(kMaxCardinal), std::out_of_range);
}

TEST(NumberWordsTest, Ordinals) {
  EXPECT_EQ(Join(VerbalizeOrdinal(4)), "fourth");
  EXPECT_EQ(Join(VerbalizeOrdinal(3)), "third");
  EXPECT_EQ(Join(VerbalizeOrdinal(1)), "first");
  EXPECT_EQ(Join(VerbalizeOrdinal(12)), "twelfth");
  EXPECT_EQ(Join(VerbalizeOrdinal(20)), "twentieth");
  EXPECT_EQ(Join(VerbalizeOrdinal(21)), "twenty first");
  EXPECT_EQ(Join(VerbalizeOrdinal(100)), "one hundredth");
  EXPECT_THROW(VerbalizeOrdinal(0), std::out_of_range);
  EXPECT_THROW(VerbalizeOrdinal(kMaxOrdinal), std::out_of_range);
}

TEST(NumberWordsTest, Years) {
  EXPECT_EQ(Join(VerbalizeYear(1970)), "nineteen seventy");
  EXPECT_EQ(Join(VerbalizeYear(1905)), "nineteen oh five");
  EXPECT_EQ(Join(VerbalizeYear(1900)), "nineteen hundred");
  EXPECT_EQ(Join(VerbalizeYear(2020)), "twenty twenty");
  EXPECT_EQ(Join(VerbalizeYear(2005)), "two thousand five");
}

TEST(NumberWordsTest, CardinalIsInjectiveAndParsesBackUpTo1e5) {
  std::set<std::string> seen;
  for (int64_t n = 0; n <= 100000; ++n) {
    const std::vector<std::string> words = VerbalizeCardinal(n);
    ASSERT_TRUE(seen.insert(Join(words)).second) << n;
    const auto parsed = ParseCardinalWords(words);
    ASSERT_TRUE(parsed.has_value()) << n;
    EXPECT_EQ(parsed->value, n);
    EXPECT_EQ(parsed->consumed, words.size());
  }
}

TEST(NumberWordsTest, CardinalInjectiveOnSample) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int64_t> dist(100000, kMaxCardinal - 1);
  for (int i = 0; i < 20000; ++i) {
    const int64_t n = dist(rng);
    const auto words = VerbalizeCardinal(n);
    const auto parsed = ParseCardinalWords(words);
    ASSERT_TRUE(parsed.has_value());
    EXPECT_EQ(parsed->value, n);
  }
}

TEST(NumberWordsTest, OrdinalsParseBack) {
  for (int64_t n = 1; n < 2000; ++n) {
    const auto words = VerbalizeOrdinal(n);
    const auto parsed = ParseOrdinalWords(words);
    ASSERT_TRUE(parsed.has_value()) << n;
    EXPECT_EQ(parsed->value, n);
    EXPECT_EQ(parsed->consumed, words.size());
  }
}

TEST(GrammarTest, ClassWeightsAreOrderedInBand) {
  Weight prev = Weight::Zero();
  for (SemioticClass c : kSemioticClasses) {
    const Weight w = ClassWeight(c);
    EXPECT_GE(w, kBandLow);
    EXPECT_LE(w, kBandHigh);
    EXPECT_GT(w, prev);
    prev = w;
  }
  EXPECT_EQ(ClassWeight(SemioticClass::kDate), Weight::One());
  EXPECT_EQ(ClassFromName("FRACTION"), SemioticClass::kFraction);
  EXPECT_FALSE(ClassFromName("NOPE").has_value());
}

TEST(GrammarTest, LexiconsLoad) {
  EXPECT_EQ(G().MonthNumber("Sept"), 9);
  EXPECT_EQ(G().MonthName(1), "January");
  ASSERT_NE(G().FindUnit("F"), nullptr);
  EXPECT_TRUE(G().IsDictionaryWord("great"));
  EXPECT_GT(G().dictionary_size(), 5000u);
}

TEST(GrammarTest, MalformedFileReportsLine) {
  const auto dir = std::filesystem::temp_directory_path() / "fusenorm_bad_grammar";
  std::filesystem::remove_all(dir);
  std::filesystem::copy(GrammarSet::DefaultDataDir(), dir);
  {
    std::ofstream out(dir / "units.tsv", std::ios::app);
    out << "no tab on this line\n";
  }
  try {
    GrammarSet::Load(dir);
    FAIL() << "expected DataError";
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("units.tsv:"), std::string::npos) << e.what();
  }
  std::filesystem::remove_all(dir);
}

TEST(VerbalizerTest, DateReadings) {
  EXPECT_EQ(Texts(VerbalizeDate("1/4", G())), std::set<std::string>{"January fourth"});
  EXPECT_EQ(Texts(VerbalizeDate("1970", G())),
            (std::set<std::string>{"nineteen seventy", "one thousand nine hundred seventy"}));
  EXPECT_EQ(Texts(VerbalizeDate("2020/11/05", G())),
            std::set<std::string>{"November fifth twenty twenty"});
  EXPECT_EQ(Texts(VerbalizeDate("4 July 1776", G())),
            std::set<std::string>{"July fourth seventeen seventy six"});
  EXPECT_TRUE(VerbalizeDate("13/40", G()).empty());
  EXPECT_TRUE(VerbalizeDate("hello", G()).empty());
}

TEST(VerbalizerTest, FractionBothForms) {
  EXPECT_EQ(Texts(VerbalizeFraction("1/2")),
            (std::set<std::string>{"one half", "one divided by two"}));
  EXPECT_EQ(Texts(VerbalizeFraction("2/3")),
            (std::set<std::string>{"two thirds", "two divided by three"}));
  EXPECT_EQ(Texts(VerbalizeFraction("3/4")),
            (std::set<std::string>{"three quarters", "three divided by four"}));
}

TEST(VerbalizerTest, OtherClasses) {
  EXPECT_EQ(Texts(VerbalizeMeasure("75F", G())),
            std::set<std::string>{"seventy five degrees Fahrenheit"});
  EXPECT_EQ(Texts(VerbalizeMoney("$5", G())), std::set<std::string>{"five dollars"});
  EXPECT_EQ(Texts(VerbalizeMoney("$20.50", G())),
            std::set<std::string>{"twenty dollars fifty cents"});
  EXPECT_EQ(Texts(VerbalizeTime("3:30pm")), std::set<std::string>{"three thirty p m"});
  EXPECT_EQ(Texts(VerbalizeDecimal("3.14")), std::set<std::string>{"three point one four"});
  EXPECT_EQ(Texts(VerbalizeCardinalToken("10001")), std::set<std::string>{"ten thousand one"});
  EXPECT_EQ(Texts(VerbalizeOrdinalToken("21st")), std::set<std::string>{"twenty first"});
  EXPECT_TRUE(VerbalizeOrdinalToken("21th").empty());
}

TEST(VerbalizerTest, RomanReadings) {
  EXPECT_EQ(Texts(VerbalizeRoman("III", std::nullopt)),
            (std::set<std::string>{"three", "the third", "third"}));
  EXPECT_EQ(Texts(VerbalizeRoman("I", "Henry")),
            (std::set<std::string>{"one", "the first", "first"}));
  EXPECT_TRUE(VerbalizeRoman("I", std::nullopt).empty());
  EXPECT_TRUE(VerbalizeRoman("I", "and").empty());
  // Every numeral I..XXXIX against an arithmetic oracle.
  const char* tens[] = {"", "X", "XX", "XXX"};
  const char* units[] = {"", "I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX"};
  for (int t = 0; t < 4; ++t) {
    for (int u = 0; u < 10; ++u) {
      const std::string numeral = std::string(tens[t]) + units[u];
      if (numeral.empty()) continue;
      const int value = RomanValue(numeral);
      ASSERT_EQ(value, 10 * t + u);
      const std::set<std::string> expected = {Join(VerbalizeCardinal(value)),
                                              "the " + Join(VerbalizeOrdinal(value)),
                                              Join(VerbalizeOrdinal(value))};
      EXPECT_EQ(Texts(VerbalizeRoman(numeral, "King")), expected) << numeral;
    }
  }
}

TEST(VerbalizerTest, ElectronicSegmentation) {
  const auto wearesc = Texts(SegmentElectronic("WeAreSC.com", G()));
  EXPECT_TRUE(wearesc.contains("we are s c dot com"));
  EXPECT_TRUE(wearesc.contains("w e a r e s c dot com"));
  EXPECT_EQ(Texts(SegmentElectronic("a.com", G())), std::set<std::string>{"a dot com"});
  EXPECT_TRUE(Texts(SegmentElectronic("greattech.com", G())).contains("great tech dot com"));
  EXPECT_LE(SegmentElectronic("john.smith@gmail.com", G()).size(), kMaxElectronicReadings);
  for (const Reading& r : SegmentElectronic("john.smith@gmail.com", G())) {
    EXPECT_GE(r.weight, kBandLow);
    EXPECT_LE(r.weight, kBandHigh);
  }
}

TEST(VerbalizerTest, Verbatim) {
  EXPECT_EQ(VerbalizeVerbatim("A").Text(), "a");
  EXPECT_EQ(VerbalizeVerbatim("X9Z").Text(), "x nine z");
  const auto spans = Tag("Cambridgeshire CB 10 1 SD", G());
  ASSERT_EQ(spans.size(), 2u);
  EXPECT_EQ(spans[1].text, "CB 10 1 SD");
  const auto readings = Readings(spans[1], G());
  EXPECT_EQ(readings.front().Text(), "c b one zero one s d");
}

TEST(VerbalizerTest, OneQuarterReadings) {
  const auto spans = Tag("1/4", G());
  ASSERT_EQ(spans.size(), 1u);
  const auto readings = Readings(spans[0], G());
  ASSERT_EQ(readings.size(), 4u);
  std::map<std::string, Weight> by_text;
  for (const Reading& r : readings) by_text[r.Text()] = r.weight;
  for (const char* t : {"January fourth", "one quarter", "one divided by four"}) {
    ASSERT_TRUE(by_text.contains(t)) << t;
    EXPECT_GE(by_text[t], kBandLow);
    EXPECT_LE(by_text[t], kBandHigh);
  }
  ASSERT_TRUE(by_text.contains("one/four"));
  EXPECT_EQ(by_text["one/four"],
            kPunctWeight + ClassWeight(SemioticClass::kCardinal) * 2);
}

TEST(VerbalizerTest, PunctuationAndWeightBands) {
  const auto spans = Tag("Well , it was 1/4 of $5 at 3:30pm on 2020/11/05 .", G());
  for (const TokenSpan& s : spans) {
    for (const Reading& r : Readings(s, G())) {
      if (r.cls == SemioticClass::kPunct) {
        EXPECT_EQ(r.weight, kPunctWeight);
      } else if (r.cls == SemioticClass::kPlain && r.normalized) {
        EXPECT_EQ(r.weight, kPlainWeight);
      } else if (r.normalized) {
        EXPECT_GE(r.weight, kBandLow) << r.Text();
        EXPECT_LE(r.weight, kBandHigh) << r.Text();
      } else {
        EXPECT_GT(r.weight, kBandHigh + Weight::FromDouble(0.2)) << r.Text();
      }
    }
    if (s.is_semiotic) {
      EXPECT_FALSE(Readings(s, G()).empty());
    }
  }
}

TEST(TaggerTest, TrainSentence) {
  const auto spans = Tag("The train leaves on 1/4", G());
  ASSERT_EQ(spans.size(), 5u);
  const TokenSpan& s = spans[4];
  EXPECT_TRUE(s.is_semiotic);
  EXPECT_NE(std::find(s.classes.begin(), s.classes.end(), SemioticClass::kDate),
            s.classes.end());
  EXPECT_NE(std::find(s.classes.begin(), s.classes.end(), SemioticClass::kFraction),
            s.classes.end());
}

TEST(TaggerTest, PlainSentence) {
  const auto spans = Tag("hello world", G());
  ASSERT_EQ(spans.size(), 2u);
  for (const TokenSpan& s : spans) EXPECT_FALSE(s.is_semiotic);
}

TEST(TaggerTest, CupSentence) {
  const auto spans = Tag("What's 1/2 cup plus 2/3 cup?", G());
  size_t semiotic = 0;
  for (const TokenSpan& s : spans) {
    if (!s.is_semiotic) continue;
    ++semiotic;
    EXPECT_NE(std::find(s.classes.begin(), s.classes.end(), SemioticClass::kFraction),
              s.classes.end());
  }
  EXPECT_EQ(semiotic, 2u);
  EXPECT_EQ(spans.size() - semiotic, 5u);
}

TEST(TaggerTest, SpansTileInput) {
  const std::string text = "On 4 July 1776, Mr. Smith paid $5 (about 3.5kg) at www.x.com!";
  const auto spans = Tag(text, G());
  size_t prev_end = 0;
  std::string rebuilt;
  for (const TokenSpan& s : spans) {
    EXPECT_GE(s.start, prev_end);
    EXPECT_EQ(text.substr(s.start, s.end - s.start), s.text);
    EXPECT_EQ(s.is_semiotic, std::any_of(s.classes.begin(), s.classes.end(), IsSemiotic));
    prev_end = s.end;
    rebuilt += s.text;
  }
  std::string squeezed;
  for (char c : text) {
    if (c != ' ') squeezed += c;
  }
  std::string rebuilt_squeezed;
  for (char c : rebuilt) {
    if (c != ' ') rebuilt_squeezed += c;
  }
  EXPECT_EQ(rebuilt_squeezed, squeezed);
}

TEST(TaggerTest, SemioticSpansAreCapped) {
  std::string text;
  for (int i = 0; i < 30; ++i) text += std::to_string(i + 10) + " ";
  const auto spans = Tag(text, G());
  size_t semiotic = 0;
  for (const TokenSpan& s : spans) semiotic += s.is_semiotic ? 1 : 0;
  EXPECT_EQ(semiotic, kMaxSemioticSpans);
  EXPECT_EQ(spans.size(), 30u);
}

TEST(TaggerTest, OverlongSentenceIsDataError) {
  EXPECT_THROW(Tag(std::string(kMaxSentenceLength + 1, 'a'), G()), DataError);
}

}  // namespace
}  // namespace fusenorm
