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

#include "oracles.h"

#include <algorithm>
#include <stdexcept>

#include <arpa/inet.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <unistd.h>

namespace fusenorm::testing {

std::vector<OraclePath> AllPathsDfs(const Transducer& t, size_t limit) {
  std::vector<OraclePath> out;
  OraclePath cur;
  auto dfs = [&](auto&& self, StateId s) -> void {
    if (out.size() > limit) return;
    if (t.IsFinal(s)) out.push_back(cur);
    for (const Arc& a : t.ArcsFrom(s)) {
      cur.ticks += a.weight.ticks();
      if (!a.output.empty()) cur.output.push_back(a.output);
      if (!a.input.empty()) cur.input.push_back(a.input);
      self(self, a.dst);
      if (!a.input.empty()) cur.input.pop_back();
      if (!a.output.empty()) cur.output.pop_back();
      cur.ticks -= a.weight.ticks();
    }
  };
  dfs(dfs, t.start());
  return out;
}

std::vector<OraclePath> FilterSort(std::vector<OraclePath> paths, int64_t delta_ticks,
                                   size_t cap) {
  if (paths.empty()) return paths;
  std::sort(paths.begin(), paths.end(), [](const OraclePath& a, const OraclePath& b) {
    if (a.ticks != b.ticks) return a.ticks < b.ticks;
    return a.output < b.output;
  });
  const int64_t bound = paths.front().ticks + delta_ticks;
  std::vector<OraclePath> kept;
  for (OraclePath& p : paths) {
    if (p.ticks > bound || kept.size() == cap) break;
    kept.push_back(std::move(p));
  }
  return kept;
}

Transducer RandomDag(std::mt19937_64& rng, int num_states, int max_out_degree,
                     int64_t max_ticks, const std::vector<std::string>& alphabet) {
  Transducer t;
  for (int i = 0; i < num_states; ++i) t.AddState();
  t.SetStart(0);
  std::uniform_int_distribution<int64_t> weight(0, max_ticks);
  std::uniform_int_distribution<size_t> label(0, alphabet.size());  // last = epsilon
  for (int s = 0; s + 1 < num_states; ++s) {
    std::uniform_int_distribution<int> degree(1, max_out_degree);
    std::uniform_int_distribution<int> target(s + 1, num_states - 1);
    const int n = degree(rng);
    for (int k = 0; k < n; ++k) {
      const size_t in = label(rng);
      const size_t out = label(rng);
      t.AddArc({s, target(rng), in < alphabet.size() ? alphabet[in] : kEpsilon,
                out < alphabet.size() ? alphabet[out] : kEpsilon,
                Weight::FromTicks(weight(rng))});
    }
  }
  t.AddFinal(num_states - 1);
  if (num_states > 2 && rng() % 2 == 0) t.AddFinal(num_states / 2);
  return t;
}

Transducer RandomSinglePath(std::mt19937_64& rng, int64_t max_ticks,
                            const std::vector<std::string>& alphabet,
                            OraclePath* expected) {
  std::uniform_int_distribution<size_t> pick(0, alphabet.size() - 1);
  std::uniform_int_distribution<size_t> len(1, 3);
  std::vector<std::string> written(len(rng));
  std::vector<std::string> spoken(len(rng));
  for (auto& w : written) w = alphabet[pick(rng)];
  for (auto& w : spoken) w = alphabet[pick(rng)];
  const int64_t ticks = std::uniform_int_distribution<int64_t>(0, max_ticks)(rng);
  *expected = OraclePath{ticks, spoken, written};
  return Transducer::FromPair(written, spoken, Weight::FromTicks(ticks));
}

RandomSentence RandomReadings(std::mt19937_64& rng, size_t max_semiotic,
                              size_t max_readings) {
  static const std::vector<std::string> kWords = {"alpha", "bravo", "charlie", "delta",
                                                  "echo",  "fox",   "golf",    "hotel"};
  RandomSentence s;
  const size_t k = std::uniform_int_distribution<size_t>(0, max_semiotic)(rng);
  const size_t plain = std::uniform_int_distribution<size_t>(0, 5)(rng);
  std::vector<int> kinds(k, 0);  // 0 semiotic, 1 plain, 2 punct
  for (size_t i = 0; i < plain; ++i) kinds.push_back(rng() % 4 == 0 ? 2 : 1);
  if (kinds.empty()) kinds.push_back(1);
  std::shuffle(kinds.begin(), kinds.end(), rng);
  std::uniform_int_distribution<size_t> word(0, kWords.size() - 1);
  std::uniform_int_distribution<int64_t> band(Weight::kTicksPerUnit,
                                              Weight::kTicksPerUnit + 100);
  for (size_t j = 0; j < kinds.size(); ++j) {
    TokenSpan span;
    span.space_before = true;
    std::vector<Reading> readings;
    if (kinds[j] == 0) {
      span.text = "<" + std::to_string(j) + ">";
      span.tokens = {span.text};
      span.classes = {SemioticClass::kCardinal};
      span.is_semiotic = true;
      const size_t n = std::uniform_int_distribution<size_t>(1, max_readings)(rng);
      for (size_t r = 0; r < n; ++r) {
        Reading reading{SemioticClass::kCardinal, {}, Weight::FromTicks(band(rng)), true};
        const size_t len = std::uniform_int_distribution<size_t>(1, 3)(rng);
        for (size_t i = 0; i < len; ++i) reading.spoken.push_back(kWords[word(rng)]);
        // Tag with the span and reading so surfaces never collide.
        reading.spoken.back() += std::to_string(j) + "_" + std::to_string(r);
        readings.push_back(std::move(reading));
      }
      readings.push_back({SemioticClass::kPlain, span.tokens, kPlainWeight, false});
      ++s.semiotic;
    } else if (kinds[j] == 1) {
      span.text = kWords[word(rng)];
      span.tokens = {span.text};
      span.classes = {SemioticClass::kPlain};
      readings.push_back({SemioticClass::kPlain, span.tokens, kPlainWeight, true});
    } else {
      span.text = ",";
      span.tokens = {span.text};
      span.classes = {SemioticClass::kPunct};
      span.space_before = false;
      readings.push_back({SemioticClass::kPunct, span.tokens, kPunctWeight, true});
    }
    s.spans.push_back(std::move(span));
    s.readings.push_back(std::move(readings));
  }
  return s;
}

std::vector<OraclePath> CrossProduct(const RandomSentence& s, size_t limit) {
  std::vector<OraclePath> out;
  OraclePath cur;
  auto rec = [&](auto&& self, size_t j) -> void {
    if (out.size() > limit) return;
    if (j == s.readings.size()) {
      out.push_back(cur);
      return;
    }
    for (const Reading& r : s.readings[j]) {
      const size_t mark = cur.output.size();
      cur.ticks += r.weight.ticks();
      cur.output.insert(cur.output.end(), r.spoken.begin(), r.spoken.end());
      self(self, j + 1);
      cur.output.resize(mark);
      cur.ticks -= r.weight.ticks();
    }
  };
  rec(rec, 0);
  return out;
}

int ClosedLocalPort() {
  const int fd = ::socket(AF_INET, SOCK_STREAM, 0);
  if (fd < 0) throw std::runtime_error("socket failed");
  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
  addr.sin_port = 0;
  socklen_t len = sizeof(addr);
  if (::bind(fd, reinterpret_cast<sockaddr*>(&addr), sizeof(addr)) != 0 ||
      ::getsockname(fd, reinterpret_cast<sockaddr*>(&addr), &len) != 0) {
    ::close(fd);
    throw std::runtime_error("bind failed");
  }
  ::close(fd);
  return ntohs(addr.sin_port);
}

}  // namespace fusenorm::testing
