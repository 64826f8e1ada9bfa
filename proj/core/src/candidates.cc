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

#include "fusenorm/candidates.h"

#include <stdexcept>

#include "fusenorm/tagger.h"
#include "fusenorm/text_util.h"
#include "fusenorm/verbalizers.h"

namespace fusenorm {

SentenceLattice BuildLattice(std::string_view sentence, const GrammarSet& g) {
  std::vector<TokenSpan> spans = Tag(sentence, g);
  std::vector<std::vector<Reading>> readings;
  readings.reserve(spans.size());
  for (const TokenSpan& span : spans) readings.push_back(Readings(span, g));
  return BuildLatticeFromReadings(std::move(spans), std::move(readings));
}

SentenceLattice BuildLatticeFromReadings(std::vector<TokenSpan> spans,
                                         std::vector<std::vector<Reading>> readings) {
  if (spans.size() != readings.size()) {
    throw std::invalid_argument("one reading set per span required");
  }
  SentenceLattice lat;
  Transducer& t = lat.transducer;
  StateId cur = t.AddState();
  t.SetStart(cur);
  for (size_t j = 0; j < spans.size(); ++j) {
    if (readings[j].empty()) {
      throw std::invalid_argument("span '" + spans[j].text + "' has no readings");
    }
    lat.entry_states.push_back(cur);
    const StateId exit = t.AddState();
    for (const Reading& r : readings[j]) {
      // Inline FromPair: weight on the first arc, epsilon padding.
      const std::vector<std::string>& in = spans[j].tokens;
      const size_t len = std::max<size_t>({in.size(), r.spoken.size(), 1});
      StateId from = cur;
      for (size_t i = 0; i < len; ++i) {
        const StateId to = (i + 1 == len) ? exit : t.AddState();
        t.AddArc({from, to, i < in.size() ? in[i] : kEpsilon,
                  i < r.spoken.size() ? r.spoken[i] : kEpsilon,
                  i == 0 ? r.weight : Weight::Zero()});
        from = to;
      }
    }
    if (spans[j].is_semiotic) {
      ++lat.semiotic_count;
    } else {
      lat.base_weight += readings[j].front().weight;
    }
    cur = exit;
  }
  t.AddFinal(cur);
  lat.spans = std::move(spans);
  lat.readings = std::move(readings);
  return lat;
}

std::string RenderText(std::span<const TokenSpan> spans,
                       std::span<const SpanOutput> outputs) {
  std::string text;
  for (size_t j = 0; j < outputs.size(); ++j) {
    if (outputs[j].spoken.empty()) continue;
    if (!text.empty() && spans[j].space_before) text += ' ';
    text += outputs[j].spoken;
  }
  return text;
}

Candidate CandidateFromPath(const SentenceLattice& lattice, const Path& path) {
  Candidate c;
  c.weight = path.weight;
  size_t next_span = 0;
  for (const ArcRef& ref : path.refs) {
    if (next_span < lattice.entry_states.size() &&
        ref.state == lattice.entry_states[next_span]) {
      const TokenSpan& span = lattice.spans[next_span];
      const Reading& r = lattice.readings[next_span].at(ref.index);
      SpanOutput out;
      out.written = span.text;
      out.spoken = r.Text();
      out.cls = r.cls;
      out.weight = r.weight;
      out.semiotic = span.is_semiotic;
      out.normalized = r.normalized;
      out.reading_index = ref.index;
      if (span.is_semiotic && !r.normalized) c.fully_normalized = false;
      c.span_outputs.push_back(std::move(out));
      ++next_span;
    }
  }
  if (c.span_outputs.size() != lattice.spans.size()) {
    throw std::logic_error("path does not cross every span of the lattice");
  }
  c.text = RenderText(lattice.spans, c.span_outputs);
  return c;
}

std::vector<Candidate> Generate(const SentenceLattice& lattice, const PruneConfig& cfg) {
  if (cfg.max_candidates < 1) throw std::invalid_argument("max_candidates < 1");
  const std::vector<Path> paths =
      EnumeratePaths(lattice.transducer, cfg.delta, cfg.max_candidates);
  std::vector<Candidate> out;
  out.reserve(paths.size());
  for (const Path& p : paths) out.push_back(CandidateFromPath(lattice, p));

  if (cfg.delta <= kDefaultDelta && !out.empty()) {
    const Weight w_min = out.front().weight;
    const Weight spread =
        kBandWidth * static_cast<int64_t>(lattice.semiotic_count);
    bool every_span_normalizable = true;
    for (size_t j = 0; j < lattice.spans.size(); ++j) {
      if (!lattice.spans[j].is_semiotic) continue;
      bool any = false;
      for (const Reading& r : lattice.readings[j]) any = any || r.normalized;
      every_span_normalizable = every_span_normalizable && any;
    }
    for (const Candidate& c : out) {
      if (!every_span_normalizable) break;
      if (!c.fully_normalized) {
        throw std::logic_error("unnormalized candidate survived pruning");
      }
      if (c.weight > w_min + spread || c.weight > w_min + kDefaultDelta) {
        throw std::logic_error("candidate weight outside the pruning bound");
      }
    }
  }
  return out;
}

Candidate ShortestCandidate(const SentenceLattice& lattice) {
  return CandidateFromPath(lattice, ShortestPath(lattice.transducer));
}

Candidate DetNormalize(std::string_view sentence, const GrammarSet& g) {
  return ShortestCandidate(BuildLattice(sentence, g));
}

}  // namespace fusenorm
