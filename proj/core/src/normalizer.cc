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

#include "fusenorm/normalizer.h"

#include <spdlog/spdlog.h>

namespace fusenorm {

Normalizer::Normalizer(const GrammarSet& grammar, CandidateScorer* scorer,
                       NormalizerOptions options)
    : grammar_(grammar), scorer_(scorer), options_(options) {}

NormalizeResult Normalizer::Normalize(std::string_view sentence) const {
  const SentenceLattice lattice = BuildLattice(sentence, grammar_);
  NormalizeResult result;
  if (scorer_ == nullptr) {
    result.chosen = ShortestCandidate(lattice);
    result.text = result.chosen.text;
    return result;
  }
  std::vector<Candidate> candidates = Generate(lattice, options_.prune);
  if (candidates.size() == 1) {
    result.chosen = std::move(candidates.front());
    result.text = result.chosen.text;
    return result;
  }
  try {
    Selection sel = SelectBest(candidates, *scorer_, options_.mode, options_.keep_punctuation);
    result.chosen = std::move(sel.best.candidate);
    result.scored = std::move(sel.all);
  } catch (const ScoringError& e) {
    if (!options_.fallback) throw;
    result.warning = std::string("scorer failed, using shortest path: ") + e.what();
    spdlog::warn("{}", result.warning);
    result.chosen = ShortestCandidate(lattice);
    result.used_fallback = true;
  }
  result.text = result.chosen.text;
  return result;
}

}  // namespace fusenorm
