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

#ifndef FUSENORM_NORMALIZER_H_
#define FUSENORM_NORMALIZER_H_

#include <string>
#include <string_view>
#include <vector>

#include "fusenorm/candidates.h"
#include "fusenorm/grammar.h"
#include "fusenorm/scoring.h"

namespace fusenorm {

struct NormalizerOptions {
  PruneConfig prune;
  ScoreMode mode = ScoreMode::kMasked;
  // Fall back to the shortest path when the scorer fails; otherwise the
  // ScoringError propagates.
  bool fallback = true;
  // Whether punctuation spans are passed to the scorer.
  bool keep_punctuation = true;
};

struct NormalizeResult {
  std::string text;
  Candidate chosen;
  // Every kept candidate with its score; empty when nothing was scored.
  std::vector<ScoredCandidate> scored;
  bool used_fallback = false;
  std::string warning;
};

// Tag -> lattice -> prune -> rescore. Without a scorer this is the
// deterministic shortest-path baseline. Safe to share across threads if the
// scorer is.
class Normalizer {
 public:
  Normalizer(const GrammarSet& grammar, CandidateScorer* scorer,
             NormalizerOptions options = {});

  NormalizeResult Normalize(std::string_view sentence) const;

  const NormalizerOptions& options() const { return options_; }

 private:
  const GrammarSet& grammar_;
  CandidateScorer* scorer_;
  NormalizerOptions options_;
};

}  // namespace fusenorm

#endif  // FUSENORM_NORMALIZER_H_
