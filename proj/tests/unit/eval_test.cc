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
#include <fstream>
#include <random>
#include <sstream>

#include "fusenorm/equivalence.h"
#include "fusenorm/errors.h"
#include "fusenorm/evaluate.h"
#include "fusenorm/google_tn.h"

#include <json.hpp>

namespace fusenorm {
namespace {

const std::string kSample = std::string(FUSENORM_TEST_DATA_DIR) + "/google_tn_sample.txt";

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(GoogleTnTest, SmallestFile) {
  std::istringstream in("PLAIN\tHello\t<self>\nPLAIN\tthere\t<self>\nPUNCT\t.\tsil\n");
  const auto ex = ParseGoogleTn(in, "mem");
  ASSERT_EQ(ex.size(), 1u);
  EXPECT_EQ(ex[0].written, "Hello there.");
  EXPECT_EQ(ex[0].spoken, "Hello there.");
}

TEST(GoogleTnTest, FixtureReconstruction) {
  const auto ex = LoadGoogleTn(kSample);
  ASSERT_EQ(ex.size(), 3u);
  EXPECT_EQ(ex[0].written, "The train leaves on 1/4.");
  EXPECT_EQ(ex[0].spoken, "The train leaves on january fourth.");
  EXPECT_NE(ex[0].spoken.find("january fourth"), std::string::npos);
  EXPECT_EQ(ex[1].written, "What a day!");
  EXPECT_EQ(ex[2].written, "Room 12, please");
  EXPECT_EQ(ex[2].spoken, "Room twelve, please");
  EXPECT_EQ(ex[2].rows.size(), 4u);
}

TEST(GoogleTnTest, RoundTripIsByteExact) {
  const auto ex = LoadGoogleTn(kSample);
  std::ostringstream out;
  WriteGoogleTn(out, ex);
  EXPECT_EQ(out.str(), ReadFile(kSample));
}

TEST(GoogleTnTest, MalformedLineReportsLineNumber) {
  std::istringstream in("PLAIN\ta\t<self>\nPLAIN\tonly-two\n");
  try {
    ParseGoogleTn(in, "bad.tsv");
    FAIL() << "expected DataError";
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("bad.tsv:2"), std::string::npos);
  }
  EXPECT_THROW(LoadGoogleTn("/nonexistent/file.tsv"), DataError);
}

class CanonicalizeTest : public ::testing::Test {
 protected:
  const EquivRuleSet rules = EquivRuleSet::LoadDefault();
};

TEST_F(CanonicalizeTest, Examples) {
  EXPECT_EQ(rules.Canonicalize("the fifth of November two thousand twenty"),
            rules.Canonicalize("November fifth twenty twenty"));
  EXPECT_EQ(rules.Canonicalize(""), "");
  EXPECT_EQ(rules.Canonicalize("Misses Pegler."), "misses pegler");
  EXPECT_EQ(rules.Canonicalize("Mrs. Pegler"), "misses pegler");
  EXPECT_EQ(rules.Canonicalize("Dr. Who"), "doctor who");
  EXPECT_EQ(rules.Canonicalize("What's up?"), "whats up");
  EXPECT_EQ(rules.Canonicalize("one oh one"), rules.Canonicalize("one zero one"));
  EXPECT_EQ(rules.Canonicalize("on the fourth of january"), rules.Canonicalize("on january fourth"));
  EXPECT_EQ(rules.Canonicalize("january the fourth"), rules.Canonicalize("january fourth"));
  EXPECT_EQ(rules.Canonicalize("one thousand nine hundred eighty four"),
            rules.Canonicalize("nineteen eighty four"));
}

TEST_F(CanonicalizeTest, NeverMergesDistinctNumbers) {
  EXPECT_NE(rules.Canonicalize("fourteen"), rules.Canonicalize("fourth"));
  EXPECT_NE(rules.Canonicalize("one fourteenth"), rules.Canonicalize("one fourth"));
  EXPECT_NE(rules.Canonicalize("ten thousand one"), rules.Canonicalize("one hundred thousand one"));
  EXPECT_NE(rules.Canonicalize("january fourth"), rules.Canonicalize("one quarter"));
  EXPECT_NE(rules.Canonicalize("nineteen eighty four"), rules.Canonicalize("nineteen eighty five"));
}

const std::vector<std::string> kPhrases = {
    "the fifth of November two thousand twenty",
    "November the fifth twenty twenty",
    "on the first of may one thousand nine hundred",
    "Mr. and Mrs. Smith met Dr. Jones",
    "room one oh two oh",
    "oh seven",
    "the twenty first of december",
    "two thousand and one",
    "Chapter four, page nineteen",
    "one half cup plus two thirds cup",
    "march third the second",
    "the the the",
    "",
};

TEST_F(CanonicalizeTest, Idempotent) {
  for (const std::string& p : kPhrases) {
    const std::string once = rules.Canonicalize(p);
    EXPECT_EQ(rules.Canonicalize(once), once) << p;
  }
}

TEST_F(CanonicalizeTest, OrderOfRulesDoesNotMatter) {
  std::vector<EquivRule> shuffled = rules.rules();
  std::mt19937 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const EquivRuleSet permuted(shuffled);
    for (const std::string& p : kPhrases) {
      EXPECT_EQ(permuted.Canonicalize(p), rules.Canonicalize(p)) << p;
    }
  }
}

TEST(EquivRuleParseTest, Errors) {
  std::istringstream bad("# comment\nthe <ordinal>\t$3\n");
  EXPECT_THROW(EquivRuleSet::Parse(bad, "rules.tsv"), DataError);
  std::istringstream unknown_class("<weekday>\tx\n");
  EXPECT_THROW(EquivRuleSet::Parse(unknown_class, "rules.tsv"), DataError);
  std::istringstream no_tab("just one field\n");
  EXPECT_THROW(EquivRuleSet::Parse(no_tab, "rules.tsv"), DataError);
  std::istringstream ok("# c\n\nmr\tmister\n");
  EXPECT_EQ(EquivRuleSet::Parse(ok, "rules.tsv").rules().size(), 1u);
}

TEST(EvaluateTest, IdenticalIsPerfect) {
  const EquivRuleSet rules = EquivRuleSet::LoadDefault();
  const std::vector<std::string> x = {"a b", "The train leaves on January fourth", ""};
  const EvalReport r = Evaluate(x, x, rules);
  EXPECT_EQ(r.correct, 3u);
  EXPECT_DOUBLE_EQ(r.accuracy, 100.0);
  EXPECT_TRUE(r.errors.empty());
  EXPECT_EQ(r.ToText().substr(0, 16), "accuracy: 100.00");
  EXPECT_DOUBLE_EQ(Evaluate({}, {}, rules).accuracy, 100.0);
}

TEST(EvaluateTest, AccuracyArithmetic) {
  const EquivRuleSet rules;
  std::vector<std::string> refs(231, "same");
  std::vector<std::string> hyps = refs;
  for (size_t i = 0; i < 13; ++i) hyps[i * 17] = "different";
  const EvalReport r = Evaluate(hyps, refs, rules);
  EXPECT_EQ(r.correct, 218u);
  EXPECT_EQ(r.errors.size(), 13u);
  EXPECT_NEAR(r.accuracy, 94.37, 0.005);
  EXPECT_EQ(r.ToText().substr(0, 15), "accuracy: 94.37");
}

TEST(EvaluateTest, DatePairCountsAsCorrect) {
  const EquivRuleSet rules = EquivRuleSet::LoadDefault();
  const std::vector<std::string> hyp = {"the fifth of November two thousand twenty"};
  const std::vector<std::string> ref = {"November fifth twenty twenty"};
  EXPECT_EQ(Evaluate(hyp, ref, rules).correct, 1u);
}

TEST(EvaluateTest, LengthMismatch) {
  const std::vector<std::string> a = {"x"};
  EXPECT_THROW(Evaluate(a, {}, EquivRuleSet{}), std::invalid_argument);
}

TEST(EvaluateTest, JsonReport) {
  const EquivRuleSet rules = EquivRuleSet::LoadDefault();
  const std::vector<std::string> hyp = {"on one quarter", "same"};
  const std::vector<std::string> ref = {"on january fourth", "same"};
  const std::vector<std::string> written = {"on 1/4", "same"};
  const auto j = nlohmann::json::parse(Evaluate(hyp, ref, rules, written).ToJson());
  EXPECT_EQ(j["total"], 2);
  EXPECT_EQ(j["correct"], 1);
  ASSERT_EQ(j["errors"].size(), 1u);
  EXPECT_EQ(j["errors"][0]["bucket"], "CLASS_AMBIGUITY");
  EXPECT_EQ(j["errors"][0]["written"], "on 1/4");
}

struct BucketCase {
  const char* written;
  const char* hyp;
  const char* ref;
  ErrorBucket bucket;
};

TEST(BucketizeTest, ErrorPatterns) {
  const EquivRuleSet rules = EquivRuleSet::LoadDefault();
  const BucketCase cases[] = {
      {"Number 10001", "Number one hundred thousand one", "Number Ten thousand one",
       ErrorBucket::kNumber},
      {"Set the thermostat to 75F", "Set the thermostat to seventy five F",
       "Set the thermostat to seventy five degrees Fahrenheit", ErrorBucket::kUnknownFormat},
      {"Set it to 75F", "Set it to 75F", "Set it to seventy five degrees Fahrenheit",
       ErrorBucket::kUnknownFormat},
      {"Josiah in the gutter! exclaimed Mrs. Pegler.",
       "Josiah in the gutter! exclaimed m r e Pegler.",
       "Josiah in the gutter! exclaimed Misses Pegler.", ErrorBucket::kHallucination},
      {"Cambridgeshire, CB 10 1 SD", "Cambridgeshire c b one one s d",
       "Cambridgeshire c b one zero one s d", ErrorBucket::kOmission},
      {"The train leaves on 1/4", "The train leaves on one quarter",
       "The train leaves on January fourth", ErrorBucket::kClassAmbiguity},
      {"Visit WeAreSC.com", "Visit w e a r e s c dot com", "Visit we are s c dot com",
       ErrorBucket::kUrlSplitting},
      {"hi there", "there hi", "hi there", ErrorBucket::kOther},
  };
  for (const BucketCase& c : cases) {
    EXPECT_EQ(BucketName(Bucketize(c.written, c.hyp, c.ref, rules)), BucketName(c.bucket))
        << c.hyp;
  }
}

}  // namespace
}  // namespace fusenorm
