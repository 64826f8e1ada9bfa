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

#ifndef FUSENORM_CANDIDATES_H_
#define FUSENORM_CANDIDATES_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "fusenorm/grammar.h"
#include "fusenorm/transducer.h"
#include "fusenorm/weight.h"

namespace fusenorm {

inline constexpr Weight kDefaultDelta = Weight::FromTicks(2000);  // 0.2
inline constexpr size_t kDefaultMaxCandidates = 64;
// Per-span slack of the band [1.0, 1.01].
inline constexpr Weight kBandWidth = Weight::FromTicks(100);

struct PruneConfig {
  Weight delta = kDefaultDelta;
  size_t max_candidates = kDefaultMaxCandidates;
};

// Which reading a candidate chose for one span.
struct SpanOutput {
  std::string written;
  std::string spoken;
  SemioticClass cls = SemioticClass::kPlain;
  Weight weight;
  bool semiotic = false;
  bool normalized = true;
  size_t reading_index = 0;
};

struct Candidate {
  std::string text;
  Weight weight;
  std::vector<SpanOutput> span_outputs;
  bool fully_normalized = true;
};

// Concatenation of per-span reading lattices. Span j's readings leave state
// entry_states[j]; the i-th arc out of that state starts reading i.
struct SentenceLattice {
  Transducer transducer;
  std::vector<TokenSpan> spans;
  std::vector<std::vector<Reading>> readings;
  std::vector<StateId> entry_states;
  size_t semiotic_count = 0;
  // Total weight of the non-semiotic spans (C).
  Weight base_weight;
};

SentenceLattice BuildLattice(std::string_view sentence, const GrammarSet& g);

// Builds the lattice from already tagged spans and their readings.
SentenceLattice BuildLatticeFromReadings(std::vector<TokenSpan> spans,
                                         std::vector<std::vector<Reading>> readings);

// Maps an accepting lattice path back to per-span choices.
Candidate CandidateFromPath(const SentenceLattice& lattice, const Path& path);

// Candidates with W <= W_min + delta, ascending by weight, at most
// max_candidates. When delta is within the default bound, verifies that every
// kept candidate sits within k * 0.01 of the minimum and is fully normalized
// wherever each semiotic span had a normalized reading; throws
// std::logic_error if not.
std::vector<Candidate> Generate(const SentenceLattice& lattice, const PruneConfig& cfg);

// Deterministic baseline: the single shortest path.
Candidate DetNormalize(std::string_view sentence, const GrammarSet& g);
Candidate ShortestCandidate(const SentenceLattice& lattice);

// Joins span outputs, inserting a space wherever the source had one.
std::string RenderText(std::span<const TokenSpan> spans,
                       std::span<const SpanOutput> outputs);

}  // namespace fusenorm

#endif  // FUSENORM_CANDIDATES_H_
