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

#include "fusenorm/evaluate.h"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <map>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "fusenorm/number_words.h"
#include "fusenorm/text_util.h"

namespace fusenorm {
namespace {

bool IsNumeric(const std::string& w) {
  const std::span<const std::string> one(&w, 1);
  if (ParseCardinalWords(one) || ParseOrdinalWords(one)) return true;
  if (w == "hundred" || w == "thousand" || w == "million" || w == "billion") return true;
  // Plural ordinals as in "two thirds".
  if (w.size() > 1 && w.back() == 's') {
    const std::string stem = w.substr(0, w.size() - 1);
    return ParseOrdinalWords(std::span<const std::string>(&stem, 1)).has_value();
  }
  return false;
}

bool IsReadingWord(const std::string& w) {
  static const std::set<std::string> kWords = {
      "half", "halves", "quarter", "quarters", "divided", "by",    "the",   "of",
      "oh",   "point",  "minus",   "dot",      "at",      "slash", "dash",  "colon",
      "a",    "m",      "p",       "am",       "pm",      "oclock"};
  return IsNumeric(w) || IsMonthWord(w) || kWords.contains(w);
}

bool LooksLikeAddress(std::string_view written) {
  for (const std::string& tok : SplitWhitespace(written)) {
    if (tok.find('@') != std::string::npos || tok.find("://") != std::string::npos ||
        tok.starts_with("www.")) {
      return true;
    }
    const size_t dot = tok.find('.');
    if (dot != std::string::npos && dot > 0 && dot + 2 < tok.size() &&
        std::isalpha(static_cast<unsigned char>(tok[dot - 1])) &&
        std::isalpha(static_cast<unsigned char>(tok[dot + 1])) &&
        std::isalpha(static_cast<unsigned char>(tok[dot + 2]))) {
      return true;
    }
  }
  return false;
}

// Letter runs of written tokens that also hold digits, e.g. "f" in "75F".
std::set<std::string> MixedTokenLetters(std::string_view written) {
  std::set<std::string> out;
  for (const std::string& tok : SplitWhitespace(written)) {
    if (std::none_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      continue;
    }
    std::string run;
    for (char c : tok + " ") {
      if (std::isalpha(static_cast<unsigned char>(c))) {
        run += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      } else if (!run.empty()) {
        out.insert(run);
        run.clear();
      }
    }
  }
  return out;
}

std::multiset<std::string> Minus(const std::vector<std::string>& a,
                                 const std::vector<std::string>& b) {
  std::multiset<std::string> out(a.begin(), a.end());
  for (const std::string& w : b) {
    auto it = out.find(w);
    if (it != out.end()) out.erase(it);
  }
  return out;
}

}  // namespace

std::string_view BucketName(ErrorBucket b) {
  switch (b) {
    case ErrorBucket::kUnknownFormat: return "UNKNOWN_FORMAT";
    case ErrorBucket::kUrlSplitting: return "URL_SPLITTING";
    case ErrorBucket::kNumber: return "NUMBER";
    case ErrorBucket::kHallucination: return "HALLUCINATION";
    case ErrorBucket::kOmission: return "OMISSION";
    case ErrorBucket::kClassAmbiguity: return "CLASS_AMBIGUITY";
    case ErrorBucket::kOther: return "OTHER";
  }
  return "OTHER";
}

ErrorBucket Bucketize(std::string_view written, std::string_view hypothesis,
                      std::string_view reference, const EquivRuleSet& rules) {
  const std::vector<std::string> hyp = SplitWhitespace(rules.Canonicalize(hypothesis));
  const std::vector<std::string> ref = SplitWhitespace(rules.Canonicalize(reference));
  const std::vector<std::string> src = CanonicalTokens(written);

  for (const std::string& w : hyp) {
    if (std::any_of(w.begin(), w.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      return ErrorBucket::kUnknownFormat;
    }
  }
  if (LooksLikeAddress(written) || std::find(ref.begin(), ref.end(), "dot") != ref.end()) {
    return ErrorBucket::kUrlSplitting;
  }
  const std::multiset<std::string> extra = Minus(hyp, ref);
  const std::multiset<std::string> missing = Minus(ref, hyp);
  if (!extra.empty() && !missing.empty() &&
      std::all_of(extra.begin(), extra.end(), IsNumeric) &&
      std::all_of(missing.begin(), missing.end(), IsNumeric)) {
    return ErrorBucket::kNumber;
  }
  const std::set<std::string> leftovers = MixedTokenLetters(written);
  for (const std::string& w : extra) {
    if (leftovers.contains(w)) return ErrorBucket::kUnknownFormat;
  }
  for (const std::string& w : extra) {
    if (!IsReadingWord(w) && std::find(src.begin(), src.end(), w) == src.end()) {
      return ErrorBucket::kHallucination;
    }
  }
  if (extra.empty() && !missing.empty()) return ErrorBucket::kOmission;
  for (const std::string& w : missing) {
    if (!IsReadingWord(w)) return ErrorBucket::kOmission;
  }
  const auto reading = [](const std::string& w) { return IsReadingWord(w); };
  if ((!extra.empty() || !missing.empty()) && std::all_of(extra.begin(), extra.end(), reading) &&
      std::all_of(missing.begin(), missing.end(), reading)) {
    return ErrorBucket::kClassAmbiguity;
  }
  return ErrorBucket::kOther;
}

EvalReport Evaluate(std::span<const std::string> hypotheses,
                    std::span<const std::string> references, const EquivRuleSet& rules,
                    std::span<const std::string> written) {
  if (hypotheses.size() != references.size()) {
    throw std::invalid_argument("hypothesis and reference counts differ (" +
                                std::to_string(hypotheses.size()) + " vs " +
                                std::to_string(references.size()) + ")");
  }
  if (!written.empty() && written.size() != references.size()) {
    throw std::invalid_argument("written and reference counts differ");
  }
  EvalReport report;
  report.total = references.size();
  for (size_t i = 0; i < references.size(); ++i) {
    if (rules.Canonicalize(hypotheses[i]) == rules.Canonicalize(references[i])) {
      ++report.correct;
      continue;
    }
    EvalError err;
    err.index = i;
    err.written = written.empty() ? std::string() : written[i];
    err.reference = references[i];
    err.hypothesis = hypotheses[i];
    err.bucket = Bucketize(err.written, err.hypothesis, err.reference, rules);
    ++report.bucket_counts[static_cast<size_t>(err.bucket)];
    report.errors.push_back(std::move(err));
  }
  report.accuracy = report.total == 0 ? 100.0
                                      : 100.0 * static_cast<double>(report.correct) /
                                            static_cast<double>(report.total);
  return report;
}

std::string EvalReport::ToText() const {
  char acc[32];
  std::snprintf(acc, sizeof(acc), "%.2f", accuracy);
  std::string out = "accuracy: " + std::string(acc) + "\n";
  out += "correct: " + std::to_string(correct) + "/" + std::to_string(total) + "\n";
  if (errors.empty()) return out;
  out += "\nbucket            count\n";
  for (size_t b = 0; b < kNumErrorBuckets; ++b) {
    if (bucket_counts[b] == 0) continue;
    std::string name(BucketName(static_cast<ErrorBucket>(b)));
    name.resize(18, ' ');
    out += name + std::to_string(bucket_counts[b]) + "\n";
  }
  out += "\n";
  for (const EvalError& e : errors) {
    out += "#" + std::to_string(e.index + 1) + " [" + std::string(BucketName(e.bucket)) + "]\n";
    if (!e.written.empty()) out += "  written:    " + e.written + "\n";
    out += "  reference:  " + e.reference + "\n";
    out += "  hypothesis: " + e.hypothesis + "\n";
  }
  return out;
}

std::string EvalReport::ToJson() const {
  nlohmann::ordered_json j;
  j["total"] = total;
  j["correct"] = correct;
  j["accuracy"] = accuracy;
  nlohmann::ordered_json buckets = nlohmann::ordered_json::object();
  for (size_t b = 0; b < kNumErrorBuckets; ++b) {
    buckets[std::string(BucketName(static_cast<ErrorBucket>(b)))] = bucket_counts[b];
  }
  j["buckets"] = buckets;
  j["errors"] = nlohmann::ordered_json::array();
  for (const EvalError& e : errors) {
    j["errors"].push_back({{"index", e.index},
                           {"written", e.written},
                           {"reference", e.reference},
                           {"hypothesis", e.hypothesis},
                           {"bucket", BucketName(e.bucket)}});
  }
  return j.dump(2);
}

}  // namespace fusenorm
