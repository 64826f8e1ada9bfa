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

#include "fusenorm/remote_scorer.h"

#include <algorithm>
#include <cmath>
#include <future>
#include <optional>
#include <thread>

#include <httplib.h>
#include <spdlog/spdlog.h>

#include <json.hpp>

namespace fusenorm {
namespace {

using json = nlohmann::json;

constexpr char kScorePath[] = "/v1/score";

}  // namespace

std::string EncodeScoreRequest(std::span<const MaskedItem> items) {
  json body;
  body["mode"] = "masked";
  body["items"] = json::array();
  for (const MaskedItem& item : items) {
    json premask = json::array();
    for (const TokenRange& r : item.premask) premask.push_back({r.begin, r.end});
    body["items"].push_back({{"tokens", item.tokens}, {"premask", premask}});
  }
  return body.dump();
}

std::vector<double> DecodeScoreResponse(const std::string& body, size_t expected) {
  json parsed = json::parse(body, nullptr, /*allow_exceptions=*/false);
  if (parsed.is_discarded() || !parsed.is_object() || !parsed.contains("scores") ||
      !parsed["scores"].is_array()) {
    throw ScoringError("malformed scorer response");
  }
  const json& scores = parsed["scores"];
  if (scores.size() != expected) {
    throw ScoringError("scorer returned " + std::to_string(scores.size()) +
                       " scores for " + std::to_string(expected) + " items");
  }
  std::vector<double> out;
  out.reserve(expected);
  for (const json& s : scores) {
    if (!s.is_number() || !std::isfinite(s.get<double>())) {
      throw ScoringError("non-numeric score in scorer response");
    }
    out.push_back(s.get<double>());
  }
  return out;
}

RemoteScorer::RemoteScorer(RemoteScorerOptions options) : options_(std::move(options)) {
  if (options_.max_batch == 0) options_.max_batch = 1;
  if (options_.parallelism == 0) options_.parallelism = 1;
}

std::vector<double> RemoteScorer::ScoreBatch(std::span<const MaskedItem> batch) const {
  auto failed = [&](const std::string& what) {
    return ScoringError(what, std::vector<MaskedItem>(batch.begin(), batch.end()));
  };
  httplib::Client client(options_.endpoint);
  if (!client.is_valid()) throw failed("invalid scorer endpoint '" + options_.endpoint + "'");
  const auto secs = std::chrono::duration_cast<std::chrono::seconds>(options_.timeout);
  const auto usecs =
      std::chrono::duration_cast<std::chrono::microseconds>(options_.timeout - secs);
  client.set_connection_timeout(secs.count(), usecs.count());
  client.set_read_timeout(secs.count(), usecs.count());
  client.set_write_timeout(secs.count(), usecs.count());

  const std::string body = EncodeScoreRequest(batch);
  std::string last_error;
  for (size_t attempt = 0; attempt <= options_.backoff.size(); ++attempt) {
    if (attempt > 0) {
      spdlog::debug("retrying scorer request ({}), attempt {}", last_error, attempt + 1);
      std::this_thread::sleep_for(options_.backoff[attempt - 1]);
    }
    httplib::Result res = client.Post(kScorePath, body, "application/json");
    if (!res) {
      last_error = httplib::to_string(res.error());
      continue;
    }
    if (res->status >= 500) {
      last_error = "HTTP " + std::to_string(res->status);
      continue;
    }
    if (res->status != 200) {
      throw failed("scorer replied HTTP " + std::to_string(res->status) + ": " + res->body);
    }
    try {
      return DecodeScoreResponse(res->body, batch.size());
    } catch (const ScoringError& e) {
      throw failed(e.what());
    }
  }
  throw failed("scorer at " + options_.endpoint + " unreachable: " + last_error);
}

std::vector<double> RemoteScorer::ScoreVariants(std::span<const MaskedItem> items) {
  std::vector<double> out(items.size());
  std::vector<std::span<const MaskedItem>> batches;
  for (size_t i = 0; i < items.size(); i += options_.max_batch) {
    batches.push_back(items.subspan(i, std::min(options_.max_batch, items.size() - i)));
  }
  if (batches.size() == 1) return ScoreBatch(batches[0]);
  // Waves of at most `parallelism` concurrent batches.
  for (size_t wave = 0; wave < batches.size(); wave += options_.parallelism) {
    const size_t end = std::min(batches.size(), wave + options_.parallelism);
    std::vector<std::future<std::vector<double>>> inflight;
    for (size_t b = wave; b < end; ++b) {
      inflight.push_back(std::async(std::launch::async,
                                    [this, batch = batches[b]] { return ScoreBatch(batch); }));
    }
    std::optional<ScoringError> error;
    for (size_t b = wave; b < end; ++b) {
      try {
        std::vector<double> scores = inflight[b - wave].get();
        const size_t offset = static_cast<size_t>(batches[b].data() - items.data());
        std::copy(scores.begin(), scores.end(), out.begin() + static_cast<ptrdiff_t>(offset));
      } catch (const ScoringError& e) {
        if (!error) error = e;
      }
    }
    if (error) throw *error;
  }
  return out;
}

}  // namespace fusenorm
