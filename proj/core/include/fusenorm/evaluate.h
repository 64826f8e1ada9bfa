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

#ifndef FUSENORM_EVALUATE_H_
#define FUSENORM_EVALUATE_H_

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fusenorm/equivalence.h"

namespace fusenorm {

enum class ErrorBucket {
  kUnknownFormat,
  kUrlSplitting,
  kNumber,
  kHallucination,
  kOmission,
  kClassAmbiguity,
  kOther,
};
inline constexpr size_t kNumErrorBuckets = 7;

std::string_view BucketName(ErrorBucket b);

struct EvalError {
  size_t index = 0;
  std::string written;  // empty when unknown
  std::string reference;
  std::string hypothesis;
  ErrorBucket bucket = ErrorBucket::kOther;
};

struct EvalReport {
  size_t total = 0;
  size_t correct = 0;
  double accuracy = 0.0;  // percent; 100 for an empty set
  std::vector<EvalError> errors;
  std::array<size_t, kNumErrorBuckets> bucket_counts{};

  // "accuracy: 94.37" plus counts and one line per error.
  std::string ToText() const;
  std::string ToJson() const;
};

// Heuristic label for a wrong hypothesis, checked in this order:
//   UNKNOWN_FORMAT  a digit survives in the hypothesis
//   URL_SPLITTING   the written side holds an address, or the reference says "dot"
//   NUMBER          same length, differing only where both sides have number words
//   HALLUCINATION   a content word absent from the reference and the written text
//   OMISSION        a content word of the reference is missing
//   CLASS_AMBIGUITY every differing word is a month, number or reading word
//   OTHER
ErrorBucket Bucketize(std::string_view written, std::string_view hypothesis,
                      std::string_view reference, const EquivRuleSet& rules);

// Throws std::invalid_argument when the lists differ in length, or when
// `written` is non-empty and differs in length.
EvalReport Evaluate(std::span<const std::string> hypotheses,
                    std::span<const std::string> references, const EquivRuleSet& rules,
                    std::span<const std::string> written = {});

}  // namespace fusenorm

#endif  // FUSENORM_EVALUATE_H_
