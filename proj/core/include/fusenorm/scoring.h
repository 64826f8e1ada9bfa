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

#ifndef FUSENORM_SCORING_H_
#define FUSENORM_SCORING_H_

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fusenorm/candidates.h"

namespace fusenorm {

// Placeholder that stands in for a whole premasked span.
inline const std::string kMaskToken = "[MASK]";

enum class ScoreMode { kAutoregressive, kMasked };

std::string_view ScoreModeName(ScoreMode mode);

// Half-open token range [begin, end).
struct TokenRange {
  size_t begin = 0;
  size_t end = 0;
  bool operator==(const TokenRange&) const = default;
};

// Orientation: lower is better. The value is a negative average
// log-likelihood per scored token; perplexity is exp(value).
struct Score {
  double value = 0.0;
};

struct ScoreRequest {
  std::vector<std::string> tokens;
  std::vector<TokenRange> semiotic_spans;
  ScoreMode mode = ScoreMode::kMasked;
};

// One masked-LM query: score `tokens` with every range in `premask` replaced
// by a single mask placeholder and excluded from the average.
struct MaskedItem {
  std::vector<std::string> tokens;
  std::vector<TokenRange> premask;
};

struct ScoredCandidate {
  Candidate candidate;
  Score score;
};

// Transport or model failure while scoring. Carries the items of the batch
// that could not be scored.
class ScoringError : public std::runtime_error {
 public:
  ScoringError(const std::string& what, std::vector<MaskedItem> failed_batch = {})
      : std::runtime_error(what), failed_batch_(std::move(failed_batch)) {}
  const std::vector<MaskedItem>& failed_batch() const { return failed_batch_; }

 private:
  std::vector<MaskedItem> failed_batch_;
};

// Left-to-right language model.
class CausalLm {
 public:
  virtual ~CausalLm() = default;
  // Natural log of P(token | history).
  virtual double LogProb(std::span<const std::string> history,
                         const std::string& token) const = 0;
};

// Bidirectional (masked) language model.
class MaskedLm {
 public:
  virtual ~MaskedLm() = default;
  // Natural log of P(tokens[position] | all other tokens), with the target
  // position treated as masked. Other entries equal to kMaskToken are
  // placeholders carrying no lexical information.
  virtual double LogProbAt(std::span<const std::string> tokens,
                           size_t position) const = 0;
};

// Scores batches of masked items; implemented in-process over a MaskedLm
// (PllScorer) or remotely over HTTP (RemoteScorer).
class VariantScorer {
 public:
  virtual ~VariantScorer() = default;
  virtual std::vector<double> ScoreVariants(std::span<const MaskedItem> items) = 0;
};

// Throws std::invalid_argument unless ranges are ordered, disjoint, non-empty
// and inside [0, token_count).
void ValidateRanges(std::span<const TokenRange> ranges, size_t token_count);

// -(1/T) * sum_i log P(token_i | prefix). Throws std::invalid_argument on an
// empty sequence.
Score ScoreAutoregressive(const CausalLm& lm, std::span<const std::string> tokens);

// Pseudo-log-likelihood with premasked spans: each premasked range becomes
// one placeholder and is not scored; every other token is masked in turn.
// Returns the negated mean. Throws std::invalid_argument when nothing is left
// to score.
Score MlmScoreVariant(const MaskedLm& lm, std::span<const std::string> tokens,
                      std::span<const TokenRange> premask);

// The masked sequence MlmScoreVariant scores, plus which positions count.
struct MaskedSequence {
  std::vector<std::string> tokens;
  std::vector<size_t> scored_positions;
};
MaskedSequence ApplyPremask(std::span<const std::string> tokens,
                            std::span<const TokenRange> premask);

// One variant per semiotic span: all other semiotic spans premasked. A
// request without semiotic spans yields a single unmasked variant.
std::vector<MaskedItem> BuildMaskedVariants(const ScoreRequest& request);

// Mean of the variant scores of BuildMaskedVariants(request).
Score MlmAggregate(VariantScorer& scorer, const ScoreRequest& request);

class PllScorer : public VariantScorer {
 public:
  explicit PllScorer(const MaskedLm& lm) : lm_(lm) {}
  std::vector<double> ScoreVariants(std::span<const MaskedItem> items) override;

 private:
  const MaskedLm& lm_;
};

// Scores whole candidates. Implementations must be safe to call from several
// threads at once.
class CandidateScorer {
 public:
  virtual ~CandidateScorer() = default;
  virtual std::vector<Score> ScoreAll(std::span<const ScoreRequest> requests) = 0;
};

// Routes autoregressive requests to a CausalLm and masked requests through
// MlmAggregate over a VariantScorer. Either backend may be null if that mode
// is never requested.
class LmCandidateScorer : public CandidateScorer {
 public:
  LmCandidateScorer(const CausalLm* causal, VariantScorer* masked)
      : causal_(causal), masked_(masked) {}
  std::vector<Score> ScoreAll(std::span<const ScoreRequest> requests) override;

 private:
  const CausalLm* causal_;
  VariantScorer* masked_;
};

// Tokens of the chosen readings, with the token range of every semiotic
// span. Punctuation spans are dropped unless `keep_punctuation`.
ScoreRequest MakeScoreRequest(const Candidate& candidate, ScoreMode mode,
                              bool keep_punctuation);

struct Selection {
  ScoredCandidate best;
  std::vector<ScoredCandidate> all;  // input order
};

// argmin score; ties go to the lower WFST weight, then to the smaller text.
// Throws std::invalid_argument on an empty list; ScoringError propagates.
Selection SelectBest(std::span<const Candidate> candidates, CandidateScorer& scorer,
                     ScoreMode mode, bool keep_punctuation = true);

}  // namespace fusenorm

#endif  // FUSENORM_SCORING_H_
