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

#ifndef FUSENORM_NGRAM_MODEL_H_
#define FUSENORM_NGRAM_MODEL_H_

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "fusenorm/scoring.h"

namespace fusenorm {

inline constexpr int kMaxNgramOrder = 3;
inline constexpr double kUnknownFloor = 1e-7;
inline const std::string kBosToken = "<s>";
inline const std::string kEosToken = "</s>";
inline const std::string kUnknownToken = "<unk>";

// Lowercases and strips leading/trailing ASCII punctuation. Returns an empty
// string for tokens that are punctuation only; those are skipped by the model.
std::string NormalizeLmToken(std::string_view token);

// Word n-gram model with Witten-Bell interpolation down to a uniform
// distribution over the vocabulary, </s> and <unk>. The final distribution is
// mixed with that uniform so no token falls below kUnknownFloor.
//
// The on-disk format is described in docs/ngram_format.md.
class NgramModel : public CausalLm, public MaskedLm {
 public:
  // Throws DataError if no line contains a scorable token, or
  // std::invalid_argument if order is outside [1, kMaxNgramOrder].
  static NgramModel Train(std::span<const std::string> lines, int order = 3);
  static NgramModel Load(const std::string& path);
  static NgramModel Read(std::istream& in);
  void Save(const std::string& path) const;
  void Write(std::ostream& out) const;

  int order() const { return order_; }
  // Distinct training words, excluding <s> and </s>.
  size_t vocabulary_size() const { return words_.size() - kFirstWordId; }
  // Everything a context can predict: the words, </s> and <unk>.
  std::vector<std::string> PredictableTokens() const;

  // P(token | history) after normalization of both. `token` may be kEosToken
  // or kUnknownToken; out-of-vocabulary tokens map to <unk>.
  double Probability(std::span<const std::string> history, const std::string& token) const;
  double LogProb(std::span<const std::string> history, const std::string& token) const override;

  // Masked prediction from the trigram terms the target participates in,
  // normalized over the vocabulary and <unk>. Context stops at kMaskToken
  // entries.
  double LogProbAt(std::span<const std::string> tokens, size_t position) const override;

  // Maximum-likelihood unigram estimate count(w) / total.
  double UnigramRelativeFrequency(const std::string& token) const;

  bool operator==(const NgramModel& other) const;

 private:
  using Id = uint32_t;
  static constexpr Id kBos = 0;
  static constexpr Id kEos = 1;
  static constexpr Id kUnk = 2;
  static constexpr Id kFirstWordId = 3;

  struct ContextStats {
    uint64_t total = 0;
    uint64_t types = 0;
  };

  NgramModel() = default;
  Id Intern(const std::string& word);
  Id Lookup(const std::string& normalized) const;
  void AddNgram(std::span<const Id> ids, uint64_t count);
  void Finalize();
  // Interpolated probability; `history` may be shorter than order - 1.
  double Prob(std::span<const Id> history, Id w) const;
  double ProbOfOrder(std::span<const Id> history, Id w, size_t n) const;
  double UniformProb() const;
  std::vector<Id> HistoryIds(std::span<const std::string> history) const;

  static uint64_t Pack(std::span<const Id> ids);

  int order_ = 3;
  std::vector<std::string> words_;  // id -> word
  std::unordered_map<std::string, Id> ids_;
  // counts_[n - 1]: n-gram -> count.
  std::array<std::unordered_map<uint64_t, uint64_t>, kMaxNgramOrder> counts_;
  // contexts_[n - 1]: history of length n - 1 -> stats over its continuations.
  std::array<std::unordered_map<uint64_t, ContextStats>, kMaxNgramOrder> contexts_;
  uint64_t unigram_total_ = 0;
  double floor_mix_ = 0.0;
};

}  // namespace fusenorm

#endif  // FUSENORM_NGRAM_MODEL_H_
