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

#include "fusenorm/scoring.h"

#include <algorithm>
#include <numeric>

#include "fusenorm/text_util.h"

namespace fusenorm {

std::string_view ScoreModeName(ScoreMode mode) {
  return mode == ScoreMode::kMasked ? "masked" : "autoregressive";
}

void ValidateRanges(std::span<const TokenRange> ranges, size_t token_count) {
  size_t prev_end = 0;
  for (const TokenRange& r : ranges) {
    if (r.begin >= r.end || r.end > token_count || r.begin < prev_end) {
      throw std::invalid_argument("token ranges must be ordered, disjoint and in bounds");
    }
    prev_end = r.end;
  }
}

Score ScoreAutoregressive(const CausalLm& lm, std::span<const std::string> tokens) {
  if (tokens.empty()) throw std::invalid_argument("cannot score an empty sequence");
  double total = 0.0;
  for (size_t i = 0; i < tokens.size(); ++i) {
    total += lm.LogProb(tokens.first(i), tokens[i]);
  }
  return {-total / static_cast<double>(tokens.size())};
}

MaskedSequence ApplyPremask(std::span<const std::string> tokens,
                            std::span<const TokenRange> premask) {
  ValidateRanges(premask, tokens.size());
  MaskedSequence seq;
  size_t next = 0;
  for (size_t i = 0; i < tokens.size();) {
    if (next < premask.size() && premask[next].begin == i) {
      seq.tokens.push_back(kMaskToken);
      i = premask[next].end;
      ++next;
      continue;
    }
    seq.scored_positions.push_back(seq.tokens.size());
    seq.tokens.push_back(tokens[i]);
    ++i;
  }
  return seq;
}

Score MlmScoreVariant(const MaskedLm& lm, std::span<const std::string> tokens,
                      std::span<const TokenRange> premask) {
  const MaskedSequence seq = ApplyPremask(tokens, premask);
  if (seq.scored_positions.empty()) {
    throw std::invalid_argument("every token is premasked; nothing to score");
  }
  double total = 0.0;
  for (size_t pos : seq.scored_positions) total += lm.LogProbAt(seq.tokens, pos);
  return {-total / static_cast<double>(seq.scored_positions.size())};
}

std::vector<MaskedItem> BuildMaskedVariants(const ScoreRequest& request) {
  ValidateRanges(request.semiotic_spans, request.tokens.size());
  if (request.semiotic_spans.empty()) return {MaskedItem{request.tokens, {}}};
  std::vector<MaskedItem> variants;
  for (size_t keep = 0; keep < request.semiotic_spans.size(); ++keep) {
    MaskedItem item{request.tokens, {}};
    for (size_t j = 0; j < request.semiotic_spans.size(); ++j) {
      if (j != keep) item.premask.push_back(request.semiotic_spans[j]);
    }
    variants.push_back(std::move(item));
  }
  return variants;
}

Score MlmAggregate(VariantScorer& scorer, const ScoreRequest& request) {
  const std::vector<MaskedItem> variants = BuildMaskedVariants(request);
  const std::vector<double> scores = scorer.ScoreVariants(variants);
  if (scores.size() != variants.size()) {
    throw ScoringError("scorer returned " + std::to_string(scores.size()) +
                       " scores for " + std::to_string(variants.size()) + " items");
  }
  return {std::accumulate(scores.begin(), scores.end(), 0.0) /
          static_cast<double>(scores.size())};
}

std::vector<double> PllScorer::ScoreVariants(std::span<const MaskedItem> items) {
  std::vector<double> out;
  out.reserve(items.size());
  for (const MaskedItem& item : items) {
    out.push_back(MlmScoreVariant(lm_, item.tokens, item.premask).value);
  }
  return out;
}

std::vector<Score> LmCandidateScorer::ScoreAll(std::span<const ScoreRequest> requests) {
  std::vector<Score> out(requests.size());
  std::vector<MaskedItem> batch;
  std::vector<std::pair<size_t, size_t>> slices(requests.size());  // masked only
  for (size_t i = 0; i < requests.size(); ++i) {
    const ScoreRequest& req = requests[i];
    if (req.mode == ScoreMode::kAutoregressive) {
      if (causal_ == nullptr) throw ScoringError("no autoregressive model configured");
      out[i] = ScoreAutoregressive(*causal_, req.tokens);
    } else {
      if (masked_ == nullptr) throw ScoringError("no masked scorer configured");
      std::vector<MaskedItem> variants = BuildMaskedVariants(req);
      slices[i] = {batch.size(), variants.size()};
      std::move(variants.begin(), variants.end(), std::back_inserter(batch));
    }
  }
  if (!batch.empty()) {
    const std::vector<double> scores = masked_->ScoreVariants(batch);
    if (scores.size() != batch.size()) {
      throw ScoringError("scorer returned the wrong number of scores", batch);
    }
    for (size_t i = 0; i < requests.size(); ++i) {
      if (requests[i].mode != ScoreMode::kMasked) continue;
      const auto [begin, count] = slices[i];
      double sum = 0.0;
      for (size_t k = begin; k < begin + count; ++k) sum += scores[k];
      out[i] = {sum / static_cast<double>(count)};
    }
  }
  return out;
}

ScoreRequest MakeScoreRequest(const Candidate& candidate, ScoreMode mode,
                              bool keep_punctuation) {
  ScoreRequest req;
  req.mode = mode;
  for (const SpanOutput& out : candidate.span_outputs) {
    if (!keep_punctuation && !out.semiotic && IsPunctuationToken(out.spoken)) continue;
    const size_t begin = req.tokens.size();
    for (std::string& tok : SplitWhitespace(out.spoken)) req.tokens.push_back(std::move(tok));
    if (out.semiotic && req.tokens.size() > begin) {
      req.semiotic_spans.push_back({begin, req.tokens.size()});
    }
  }
  return req;
}

Selection SelectBest(std::span<const Candidate> candidates, CandidateScorer& scorer,
                     ScoreMode mode, bool keep_punctuation) {
  if (candidates.empty()) throw std::invalid_argument("no candidates to select from");
  Selection sel;
  if (candidates.size() == 1) {
    sel.best = {candidates[0], Score{0.0}};
    sel.all = {sel.best};
    return sel;
  }
  std::vector<ScoreRequest> requests;
  requests.reserve(candidates.size());
  for (const Candidate& c : candidates) {
    requests.push_back(MakeScoreRequest(c, mode, keep_punctuation));
  }
  const std::vector<Score> scores = scorer.ScoreAll(requests);
  if (scores.size() != candidates.size()) {
    throw ScoringError("scorer returned the wrong number of scores");
  }
  for (size_t i = 0; i < candidates.size(); ++i) {
    sel.all.push_back({candidates[i], scores[i]});
  }
  sel.best = *std::min_element(
      sel.all.begin(), sel.all.end(),
      [](const ScoredCandidate& a, const ScoredCandidate& b) {
        if (a.score.value != b.score.value) return a.score.value < b.score.value;
        if (a.candidate.weight != b.candidate.weight) {
          return a.candidate.weight < b.candidate.weight;
        }
        return a.candidate.text < b.candidate.text;
      });
  return sel;
}

}  // namespace fusenorm
