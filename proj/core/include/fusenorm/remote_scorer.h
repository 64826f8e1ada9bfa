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

#ifndef FUSENORM_REMOTE_SCORER_H_
#define FUSENORM_REMOTE_SCORER_H_

#include <chrono>
#include <string>
#include <vector>

#include "fusenorm/scoring.h"

namespace fusenorm {

struct RemoteScorerOptions {
  // Base URL, e.g. "http://127.0.0.1:8080".
  std::string endpoint;
  size_t max_batch = 32;
  std::chrono::milliseconds timeout{30000};
  // One retry per entry, sleeping that long first.
  std::vector<std::chrono::milliseconds> backoff{std::chrono::milliseconds(100),
                                                 std::chrono::milliseconds(200)};
  size_t parallelism = 4;
};

// Client for POST /v1/score. Items are sent in batches of at most max_batch,
// with up to `parallelism` batches in flight. Transport failures and 5xx
// replies are retried; anything still failing, or a malformed reply, raises
// ScoringError carrying that batch.
class RemoteScorer : public VariantScorer {
 public:
  explicit RemoteScorer(RemoteScorerOptions options);
  std::vector<double> ScoreVariants(std::span<const MaskedItem> items) override;

  const RemoteScorerOptions& options() const { return options_; }

 private:
  std::vector<double> ScoreBatch(std::span<const MaskedItem> batch) const;

  RemoteScorerOptions options_;
};

// JSON body of one /v1/score request, and the parsed reply.
std::string EncodeScoreRequest(std::span<const MaskedItem> items);
// Throws ScoringError unless the body is {"scores": [...]} with `expected`
// finite numbers.
std::vector<double> DecodeScoreResponse(const std::string& body, size_t expected);

}  // namespace fusenorm

#endif  // FUSENORM_REMOTE_SCORER_H_
