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

#include "fusenorm/ngram_model.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <stdexcept>

#include "fusenorm/errors.h"
#include "fusenorm/text_util.h"

namespace fusenorm {
namespace {

constexpr char kMagic[5] = {'F', 'N', 'L', 'M', '1'};
constexpr int kIdBits = 21;
constexpr uint32_t kMaxIds = 1u << kIdBits;
constexpr uint32_t kMaskId = std::numeric_limits<uint32_t>::max();

template <typename T>
void WriteLe(std::ostream& out, T value) {
  unsigned char buf[sizeof(T)];
  for (size_t i = 0; i < sizeof(T); ++i) buf[i] = static_cast<unsigned char>(value >> (8 * i));
  out.write(reinterpret_cast<const char*>(buf), sizeof(T));
}

template <typename T>
T ReadLe(std::istream& in) {
  unsigned char buf[sizeof(T)];
  if (!in.read(reinterpret_cast<char*>(buf), sizeof(T))) {
    throw DataError("truncated language model file");
  }
  T value = 0;
  for (size_t i = 0; i < sizeof(T); ++i) value |= static_cast<T>(buf[i]) << (8 * i);
  return value;
}

double LogSumExp(const std::vector<double>& xs) {
  const double m = *std::max_element(xs.begin(), xs.end());
  double s = 0.0;
  for (double x : xs) s += std::exp(x - m);
  return m + std::log(s);
}

}  // namespace

std::string NormalizeLmToken(std::string_view token) {
  size_t b = 0;
  size_t e = token.size();
  while (b < e && IsPunctuationChar(token[b])) ++b;
  while (e > b && IsPunctuationChar(token[e - 1])) --e;
  return ToLowerAscii(token.substr(b, e - b));
}

uint64_t NgramModel::Pack(std::span<const Id> ids) {
  uint64_t key = 0;
  for (Id id : ids) key = (key << kIdBits) | id;
  return key;
}

NgramModel::Id NgramModel::Intern(const std::string& word) {
  auto [it, inserted] = ids_.try_emplace(word, static_cast<Id>(words_.size()));
  if (inserted) {
    if (words_.size() + 1 >= kMaxIds) throw DataError("vocabulary too large");
    words_.push_back(word);
  }
  return it->second;
}

NgramModel::Id NgramModel::Lookup(const std::string& normalized) const {
  auto it = ids_.find(normalized);
  if (it == ids_.end() || it->second == kBos) return kUnk;
  return it->second;
}

void NgramModel::AddNgram(std::span<const Id> ids, uint64_t count) {
  counts_[ids.size() - 1][Pack(ids)] += count;
}

void NgramModel::Finalize() {
  for (auto& ctx : contexts_) ctx.clear();
  unigram_total_ = 0;
  for (int n = 1; n <= order_; ++n) {
    const uint64_t mask = n == 1 ? 0 : (uint64_t{1} << (kIdBits * (n - 1))) - 1;
    for (const auto& [key, count] : counts_[n - 1]) {
      ContextStats& stats = contexts_[n - 1][(key >> kIdBits) & mask];
      stats.total += count;
      stats.types += 1;
    }
  }
  unigram_total_ = contexts_[0][0].total;
  floor_mix_ = std::min(1.0, kUnknownFloor / UniformProb());
}

NgramModel NgramModel::Train(std::span<const std::string> lines, int order) {
  if (order < 1 || order > kMaxNgramOrder) {
    throw std::invalid_argument("n-gram order must be between 1 and " +
                                std::to_string(kMaxNgramOrder));
  }
  NgramModel m;
  m.order_ = order;
  m.Intern(kBosToken);
  m.Intern(kEosToken);
  m.Intern(kUnknownToken);
  size_t sentences = 0;
  for (const std::string& line : lines) {
    std::vector<Id> seq(order - 1, kBos);
    for (const std::string& raw : SplitWhitespace(line)) {
      std::string tok = NormalizeLmToken(raw);
      if (tok.empty()) continue;
      seq.push_back(m.Intern(tok));
    }
    if (seq.size() == static_cast<size_t>(order - 1)) continue;
    seq.push_back(kEos);
    ++sentences;
    for (size_t i = order - 1; i < seq.size(); ++i) {
      for (int n = 1; n <= order; ++n) {
        m.AddNgram(std::span<const Id>(seq).subspan(i + 1 - n, n), 1);
      }
    }
  }
  if (sentences == 0) throw DataError("training corpus has no tokens");
  m.Finalize();
  return m;
}

double NgramModel::UniformProb() const {
  // Words, </s> and <unk>; <s> is never predicted.
  return 1.0 / static_cast<double>(words_.size() - 1);
}

double NgramModel::ProbOfOrder(std::span<const Id> history, Id w, size_t n) const {
  // n is the n-gram order; history holds its last n - 1 ids.
  const double lower = n == 1 ? UniformProb()
                              : ProbOfOrder(history.subspan(1), w, n - 1);
  const auto& contexts = contexts_[n - 1];
  auto ctx = contexts.find(Pack(history));
  if (ctx == contexts.end() || ctx->second.total == 0) return lower;
  uint64_t count = 0;
  if (w != kUnk) {
    std::vector<Id> gram(history.begin(), history.end());
    gram.push_back(w);
    auto it = counts_[n - 1].find(Pack(gram));
    if (it != counts_[n - 1].end()) count = it->second;
  }
  const double total = static_cast<double>(ctx->second.total);
  const double types = static_cast<double>(ctx->second.types);
  return (static_cast<double>(count) + types * lower) / (total + types);
}

double NgramModel::Prob(std::span<const Id> history, Id w) const {
  const size_t h = std::min(history.size(), static_cast<size_t>(order_ - 1));
  const double p = ProbOfOrder(history.last(h), w, h + 1);
  return (1.0 - floor_mix_) * p + floor_mix_ * UniformProb();
}

std::vector<NgramModel::Id> NgramModel::HistoryIds(std::span<const std::string> history) const {
  std::vector<Id> ids(order_ - 1, kBos);
  for (const std::string& raw : history) {
    std::string tok = NormalizeLmToken(raw);
    if (!tok.empty()) ids.push_back(Lookup(tok));
  }
  return ids;
}

double NgramModel::Probability(std::span<const std::string> history,
                               const std::string& token) const {
  Id w;
  if (token == kEosToken) {
    w = kEos;
  } else if (token == kUnknownToken) {
    w = kUnk;
  } else {
    const std::string tok = NormalizeLmToken(token);
    w = tok.empty() ? kUnk : Lookup(tok);
  }
  return Prob(HistoryIds(history), w);
}

double NgramModel::LogProb(std::span<const std::string> history,
                           const std::string& token) const {
  return std::log(Probability(history, token));
}

double NgramModel::LogProbAt(std::span<const std::string> tokens, size_t position) const {
  if (position >= tokens.size()) throw std::out_of_range("masked position out of range");
  std::vector<Id> seq(order_ - 1, kBos);
  size_t target = 0;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i == position) {
      target = seq.size();
      const std::string tok = NormalizeLmToken(tokens[i]);
      seq.push_back(tok.empty() ? kUnk : Lookup(tok));
      continue;
    }
    if (tokens[i] == kMaskToken) {
      seq.push_back(kMaskId);
      continue;
    }
    std::string tok = NormalizeLmToken(tokens[i]);
    if (!tok.empty()) seq.push_back(Lookup(tok));
  }
  seq.push_back(kEos);

  // History of position j, cut after the nearest mask on its left.
  auto history = [&](size_t j) {
    size_t begin = j >= static_cast<size_t>(order_ - 1) ? j - (order_ - 1) : 0;
    for (size_t k = j; k > begin; --k) {
      if (seq[k - 1] == kMaskId) {
        begin = k;
        break;
      }
    }
    return std::span<const Id>(seq).subspan(begin, j - begin);
  };
  size_t last = target;
  while (last + 1 < seq.size() && last + 1 < target + order_ && seq[last + 1] != kMaskId) {
    ++last;
  }

  const Id original = seq[target];
  std::vector<double> scores;
  scores.reserve(words_.size());
  double target_score = 0.0;
  for (Id v = kUnk; v < words_.size(); ++v) {
    seq[target] = v;
    double s = 0.0;
    for (size_t j = target; j <= last; ++j) s += std::log(Prob(history(j), seq[j]));
    scores.push_back(s);
    if (v == original) target_score = s;
  }
  seq[target] = original;
  return target_score - LogSumExp(scores);
}

std::vector<std::string> NgramModel::PredictableTokens() const {
  return {words_.begin() + kEos, words_.end()};
}

double NgramModel::UnigramRelativeFrequency(const std::string& token) const {
  const Id w = Lookup(NormalizeLmToken(token));
  if (w == kUnk) return 0.0;
  auto it = counts_[0].find(Pack(std::span<const Id>(&w, 1)));
  if (it == counts_[0].end()) return 0.0;
  return static_cast<double>(it->second) / static_cast<double>(unigram_total_);
}

bool NgramModel::operator==(const NgramModel& other) const {
  return order_ == other.order_ && words_ == other.words_ && counts_ == other.counts_;
}

void NgramModel::Write(std::ostream& out) const {
  out.write(kMagic, sizeof(kMagic));
  WriteLe<uint32_t>(out, static_cast<uint32_t>(order_));
  WriteLe<uint32_t>(out, static_cast<uint32_t>(words_.size()));
  for (const std::string& w : words_) {
    WriteLe<uint32_t>(out, static_cast<uint32_t>(w.size()));
    out.write(w.data(), static_cast<std::streamsize>(w.size()));
  }
  for (int n = 1; n <= order_; ++n) {
    // Sorted for byte-stable output.
    std::map<uint64_t, uint64_t> sorted(counts_[n - 1].begin(), counts_[n - 1].end());
    WriteLe<uint64_t>(out, sorted.size());
    for (const auto& [key, count] : sorted) {
      for (int k = n - 1; k >= 0; --k) {
        WriteLe<uint32_t>(out, static_cast<uint32_t>((key >> (kIdBits * k)) & (kMaxIds - 1)));
      }
      WriteLe<uint64_t>(out, count);
    }
  }
}

NgramModel NgramModel::Read(std::istream& in) {
  char magic[sizeof(kMagic)];
  if (!in.read(magic, sizeof(magic)) || !std::equal(magic, magic + sizeof(magic), kMagic)) {
    throw DataError("not a FNLM1 language model file");
  }
  NgramModel m;
  m.order_ = static_cast<int>(ReadLe<uint32_t>(in));
  if (m.order_ < 1 || m.order_ > kMaxNgramOrder) throw DataError("unsupported n-gram order");
  const uint32_t vocab = ReadLe<uint32_t>(in);
  if (vocab < kFirstWordId || vocab >= kMaxIds) throw DataError("bad vocabulary size");
  for (uint32_t i = 0; i < vocab; ++i) {
    const uint32_t len = ReadLe<uint32_t>(in);
    if (len > (1u << 20)) throw DataError("bad vocabulary entry");
    std::string w(len, '\0');
    if (!in.read(w.data(), len)) throw DataError("truncated language model file");
    if (m.Intern(w) != i) throw DataError("duplicate vocabulary entry '" + w + "'");
  }
  if (m.words_[kBos] != kBosToken || m.words_[kEos] != kEosToken ||
      m.words_[kUnk] != kUnknownToken) {
    throw DataError("language model is missing its reserved tokens");
  }
  for (int n = 1; n <= m.order_; ++n) {
    const uint64_t entries = ReadLe<uint64_t>(in);
    std::vector<Id> gram(n);
    for (uint64_t e = 0; e < entries; ++e) {
      for (Id& id : gram) {
        id = ReadLe<uint32_t>(in);
        if (id >= vocab) throw DataError("n-gram id out of range");
      }
      const uint64_t count = ReadLe<uint64_t>(in);
      if (count == 0) throw DataError("zero n-gram count");
      m.AddNgram(gram, count);
    }
  }
  if (m.counts_[0].empty()) throw DataError("language model has no unigrams");
  m.Finalize();
  return m;
}

void NgramModel::Save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path);
  Write(out);
  if (!out) throw DataError("failed writing " + path);
}

NgramModel NgramModel::Load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path);
  return Read(in);
}

}  // namespace fusenorm
