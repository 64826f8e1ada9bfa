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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.h"
#include "fusenorm/candidates.h"
#include "fusenorm/equivalence.h"
#include "fusenorm/evaluate.h"
#include "fusenorm/grammar.h"
#include "fusenorm/ngram_model.h"
#include "fusenorm/normalizer.h"
#include "fusenorm/scoring.h"
#include "fusenorm/text_util.h"
#include "fusenorm/transducer.h"
#include "oracles.h"

namespace fusenorm {
namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects the first failure message.
class Check {
 public:
  bool operator()(bool ok, const std::string& what) {
    if (!ok && outcome_.pass) {
      outcome_.pass = false;
      outcome_.detail = what;
    }
    return ok;
  }
  Outcome Done(std::string summary) {
    if (outcome_.pass) outcome_.detail = std::move(summary);
    return outcome_;
  }
  bool ok() const { return outcome_.pass; }

 private:
  Outcome outcome_;
};

struct SuitePair {
  std::string written;
  std::string spoken;
};

std::vector<SuitePair> LoadSuite() {
  std::ifstream in(std::string(FUSENORM_TEST_DATA_DIR) + "/ambiguous_suite.tsv");
  if (!in) throw std::runtime_error("cannot open ambiguous_suite.tsv");
  std::vector<SuitePair> out;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    const auto f = SplitOn(line, '\t');
    if (f.size() != 2) throw std::runtime_error("bad suite line: " + line);
    out.push_back({f[0], f[1]});
  }
  return out;
}

const NgramModel& SuiteModel() {
  static const NgramModel model = [] {
    std::ifstream in(GrammarSet::DefaultDataDir() / "lm_corpus.txt");
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    return NgramModel::Train(lines, 3);
  }();
  return model;
}

// Same configuration as `normalize --scorer ngram`.
struct NgramPipeline {
  NgramPipeline()
      : pll(SuiteModel()),
        scorer(&SuiteModel(), &pll),
        normalizer(GrammarSet::Default(), &scorer, Options()) {}
  static NormalizerOptions Options() {
    NormalizerOptions o;
    o.mode = ScoreMode::kAutoregressive;
    o.keep_punctuation = false;
    return o;
  }
  PllScorer pll;
  LmCandidateScorer scorer;
  Normalizer normalizer;
};

std::string Fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), f, v);
  return buf;
}

Outcome LatticeReadingsOfOneQuarter() {
  Check check;
  const SentenceLattice lat = BuildLattice("1/4", GrammarSet::Default());
  const auto all = EnumeratePaths(lat.transducer, Weight::Infinity(), 100);
  std::set<std::string> band;
  bool unchanged = false;
  for (const Path& p : all) {
    const Candidate c = CandidateFromPath(lat, p);
    if (c.text == "one/four") {
      unchanged = true;
      check(c.weight >= Weight::FromDouble(4.0) && c.weight < Weight::FromDouble(4.02),
            "one/four weighs " + c.weight.ToString());
      continue;
    }
    check(c.weight >= Weight::FromDouble(1.0) && c.weight <= Weight::FromDouble(1.01),
          c.text + " weighs " + c.weight.ToString());
    band.insert(c.text);
  }
  check(unchanged, "no one/four path");
  const std::set<std::string> want = {"January fourth", "one quarter", "one divided by four"};
  check(band == want, "normalized readings differ from the expected three");
  const auto kept = EnumeratePaths(lat.transducer, kDefaultDelta, 100);
  std::set<std::string> kept_text;
  for (const Path& p : kept) kept_text.insert(CandidateFromPath(lat, p).text);
  check(kept.size() == 3 && kept_text == want, "delta 0.2 keeps " + std::to_string(kept.size()));
  return check.Done("3 readings in [1.0, 1.01], one/four at 4.0128");
}

Outcome SentenceThreshold() {
  Check check;
  const SentenceLattice lat = BuildLattice("The train leaves on 1/4", GrammarSet::Default());
  const auto all = EnumeratePaths(lat.transducer, Weight::Infinity(), 100);
  const Weight w_min = all.front().weight;
  const Weight threshold = w_min + kDefaultDelta;
  check(w_min == Weight::FromDouble(401), "W_min = " + w_min.ToString());
  check(std::abs(threshold.value() - 401.2) <= 0.01, "threshold " + threshold.ToString());
  const auto kept = Generate(lat, PruneConfig{});
  Weight unchanged = Weight::Infinity();
  for (const Path& p : all) {
    const Candidate c = CandidateFromPath(lat, p);
    if (c.text.ends_with("one/four")) unchanged = c.weight;
  }
  check(std::abs(unchanged.value() - 404) < 0.1, "one/four path at " + unchanged.ToString());
  for (const Candidate& c : kept) check(!c.text.ends_with("one/four"), "one/four was kept");
  return check.Done("W_min 401, threshold " + threshold.ToString() + ", " +
                    std::to_string(kept.size()) + " kept, one/four at " + unchanged.ToString() +
                    " pruned");
}

Outcome RandomLatticeBounds() {
  Check check;
  std::mt19937_64 rng(20260101);
  size_t compared = 0;
  for (int trial = 0; trial < 1000 && check.ok(); ++trial) {
    const size_t max_semiotic = 1 + static_cast<size_t>(trial % 20);
    const testing::RandomSentence s = testing::RandomReadings(rng, max_semiotic, 4);
    const SentenceLattice lat = BuildLatticeFromReadings(s.spans, s.readings);
    const auto got = Generate(lat, PruneConfig{});
    if (!check(!got.empty(), "no candidates")) break;
    const Weight w_min = ShortestCandidate(lat).weight;
    const Weight k_bound = w_min + kBandWidth * static_cast<int64_t>(s.semiotic);
    for (const Candidate& c : got) {
      check(c.weight <= k_bound, "candidate above W_min + k*0.01");
      check(c.weight <= w_min + kDefaultDelta, "candidate above W_min + 0.2");
    }
    const auto paths = testing::CrossProduct(s, 501);
    if (paths.size() <= 500) {
      ++compared;
      const auto expected = testing::FilterSort(paths, kDefaultDelta.ticks(), kDefaultMaxCandidates);
      bool same = expected.size() == got.size();
      for (size_t i = 0; same && i < got.size(); ++i) {
        std::vector<std::string> tokens;
        for (const SpanOutput& o : got[i].span_outputs) {
          for (std::string& t : SplitWhitespace(o.spoken)) tokens.push_back(std::move(t));
        }
        same = expected[i].ticks == got[i].weight.ticks() && expected[i].output == tokens;
      }
      check(same, "trial " + std::to_string(trial) + " differs from brute force");
    }
  }
  return check.Done("1000 lattices within bounds, " + std::to_string(compared) +
                    " matched brute force");
}

class ProgrammedScorer : public VariantScorer {
 public:
  std::vector<double> ScoreVariants(std::span<const MaskedItem> items) override {
    std::vector<double> out;
    for (const MaskedItem& item : items) {
      // The unmasked span is the one missing from the premask list.
      size_t key = 0;
      while (key < item.premask.size() && item.premask[key].begin == spans[key].begin) ++key;
      out.push_back(values.at(key));
    }
    return out;
  }
  std::vector<TokenRange> spans;
  std::vector<double> values;
};

Outcome Aggregation() {
  Check check;
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> value(0.0, 10.0);
  for (int trial = 0; trial < 200; ++trial) {
    const size_t k = 1 + static_cast<size_t>(trial % 6);
    ScoreRequest req;
    ProgrammedScorer scorer;
    for (size_t i = 0; i < k; ++i) {
      req.tokens.push_back("w" + std::to_string(i));
      req.tokens.push_back("s" + std::to_string(i));
      req.semiotic_spans.push_back({2 * i + 1, 2 * i + 2});
      scorer.values.push_back(value(rng));
    }
    scorer.spans = req.semiotic_spans;
    double mean = 0.0;
    for (double v : scorer.values) mean += v;
    mean /= static_cast<double>(k);
    const double got = MlmAggregate(scorer, req).value;
    check(std::abs(got - mean) <= 1e-12, "aggregate " + Fmt("%.15g", got) + " vs mean " +
                                              Fmt("%.15g", mean));
    if (k == 1) check(got == scorer.values[0], "single span differs from its variant");
  }
  return check.Done("200 requests, mean to 1e-12, single span exact");
}

Outcome AmbiguitySuite() {
  Check check;
  const auto suite = LoadSuite();
  const EquivRuleSet rules = EquivRuleSet::LoadDefault();
  const Normalizer det(GrammarSet::Default(), nullptr);
  NgramPipeline lm;
  std::vector<std::string> refs, det_out, lm_out;
  for (const SuitePair& p : suite) {
    refs.push_back(p.spoken);
    det_out.push_back(det.Normalize(p.written).text);
    lm_out.push_back(lm.normalizer.Normalize(p.written).text);
  }
  const double det_acc = Evaluate(det_out, refs, rules).accuracy;
  const double lm_acc = Evaluate(lm_out, refs, rules).accuracy;
  check(suite.size() == 25, "suite has " + std::to_string(suite.size()) + " sentences");
  check(lm_acc > det_acc, "ngram " + Fmt("%.2f", lm_acc) + " <= det " + Fmt("%.2f", det_acc));
  check(lm.normalizer.Normalize("The train leaves on 1/4").text ==
            "The train leaves on January fourth",
        "1/4 sentence not resolved");
  check(lm.normalizer.Normalize("What's 1/2 cup plus 2/3 cup?").text ==
            "What's one half cup plus two thirds cup?",
        "cup sentence not resolved");
  return check.Done("ngram " + Fmt("%.2f%%", lm_acc) + " vs det " + Fmt("%.2f%%", det_acc) +
                    " on " + std::to_string(suite.size()) + " sentences");
}

std::string FuzzSentence(std::mt19937_64& rng) {
  static const std::vector<std::string> words = {
      "the", "meeting", "on", "at", "costs", "about", "visit", "king", "chapter",
      "we", "left", "add", "cup", "of", "and", "in", "page", "room", "call", "Henry"};
  auto pick = [&](size_t n) { return static_cast<size_t>(rng() % n); };
  auto num = [&](int lo, int hi) { return lo + static_cast<int>(rng() % (hi - lo + 1)); };
  static const std::vector<std::string> romans = {"II", "IV", "VIII", "XIV", "XXV", "IX"};
  static const std::vector<std::string> hosts = {"WeAreSC.com", "a.com", "www.google.com",
                                                 "john.smith@gmail.com", "nowhere.org"};
  std::string out;
  const size_t n = 2 + pick(9);
  for (size_t i = 0; i < n; ++i) {
    if (!out.empty()) out += ' ';
    switch (pick(12)) {
      case 0: out += std::to_string(num(1, 12)) + "/" + std::to_string(num(1, 28)); break;
      case 1: out += std::to_string(num(1, 9)) + "/" + std::to_string(num(2, 9)); break;
      case 2: out += std::to_string(num(1000, 2099)); break;
      case 3: out += romans[pick(romans.size())]; break;
      case 4: out += std::to_string(num(0, 100000)); break;
      case 5: out += "$" + std::to_string(num(1, 500)); break;
      case 6: out += std::to_string(num(1, 12)) + ":" + std::to_string(num(10, 59)); break;
      case 7: out += hosts[pick(hosts.size())]; break;
      case 8: out += std::to_string(num(1, 12)) + "/" + std::to_string(num(1, 28)) + "/" +
                     std::to_string(num(1900, 2030));
              break;
      default: out += words[pick(words.size())]; break;
    }
    if (pick(8) == 0) out += pick(2) ? "," : ".";
  }
  return out;
}

Outcome Provenance() {
  Check check;
  std::vector<std::string> sentences;
  for (const SuitePair& p : LoadSuite()) sentences.push_back(p.written);
  std::mt19937_64 rng(99);
  for (int i = 0; i < 500; ++i) sentences.push_back(FuzzSentence(rng));
  NgramPipeline lm;
  size_t spans_checked = 0;
  for (const std::string& s : sentences) {
    const SentenceLattice lat = BuildLattice(s, GrammarSet::Default());
    const NormalizeResult r = lm.normalizer.Normalize(s);
    const auto& outs = r.chosen.span_outputs;
    if (!check(outs.size() == lat.spans.size(), "span count changed: " + s)) break;
    std::vector<std::string> tokens;
    for (size_t j = 0; j < outs.size(); ++j) {
      const auto& readings = lat.readings[j];
      check(outs[j].written == lat.spans[j].text, "span text changed: " + s);
      const bool known = outs[j].reading_index < readings.size() &&
                         readings[outs[j].reading_index].Text() == outs[j].spoken;
      check(known, "output not a grammar reading: '" + outs[j].spoken + "' in " + s);
      const bool has_normalized =
          std::any_of(readings.begin(), readings.end(), [](const Reading& x) { return x.normalized; });
      check(!outs[j].semiotic || !has_normalized || outs[j].normalized,
            "semiotic span left unverbalized: " + outs[j].written);
      for (std::string& t : SplitWhitespace(outs[j].spoken)) tokens.push_back(std::move(t));
      ++spans_checked;
    }
    check(r.text == RenderText(lat.spans, outs), "rendered text differs: " + s);
    check(SplitWhitespace(r.text).size() >= 1 || s.find_first_not_of(' ') == std::string::npos,
          "empty output: " + s);
    std::string squashed;
    for (const std::string& t : tokens) squashed += t;
    std::string text_squashed;
    for (char c : r.text) {
      if (c != ' ') text_squashed += c;
    }
    check(squashed == text_squashed, "tokens outside span readings: " + s);
  }
  return check.Done(std::to_string(sentences.size()) + " sentences, " +
                    std::to_string(spans_checked) + " spans traced to readings");
}

Outcome Metric() {
  Check check;
  const EquivRuleSet rules = EquivRuleSet::LoadDefault();
  check(rules.Canonicalize("the fifth of November two thousand twenty") ==
            rules.Canonicalize("November fifth twenty twenty"),
        "date pair not equivalent");
  check(rules.Canonicalize("fourteen") != rules.Canonicalize("fourth"), "fourteen == fourth");
  std::vector<std::string> refs;
  for (const SuitePair& p : LoadSuite()) refs.push_back(p.spoken);
  const EvalReport r = Evaluate(refs, refs, rules);
  check(r.ToText().starts_with("accuracy: 100.00"), "identical files: " + r.ToText());
  return check.Done("date pair equal, fourteen != fourth, identical files 100.00");
}

Outcome DeadEndpointFallback() {
  Check check;
  std::string input;
  for (const SuitePair& p : LoadSuite()) input += p.written + "\n";
  auto run = [&](std::vector<std::string> args, std::string* err) {
    std::istringstream in(input);
    std::ostringstream out, errs;
    const int code = cli::Run(args, in, out, errs);
    if (err) *err = errs.str();
    return std::make_pair(code, out.str());
  };
  const auto det = run({"normalize", "--scorer", "det"}, nullptr);
  std::string warnings;
  const std::string endpoint = "http://127.0.0.1:" + std::to_string(testing::ClosedLocalPort());
  const auto remote = run({"normalize", "--scorer", "remote", "--endpoint", endpoint}, &warnings);
  check(det.first == 0, "det exit " + std::to_string(det.first));
  check(remote.first == 0, "remote exit " + std::to_string(remote.first));
  check(remote.second == det.second, "outputs differ from det");
  check(warnings.find("warn") != std::string::npos, "no warning printed");
  const size_t lines = static_cast<size_t>(std::count(det.second.begin(), det.second.end(), '\n'));
  return check.Done(std::to_string(lines) + " lines identical to det, exit 0 with warnings");
}

struct Criterion {
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace fusenorm

int main() {
  using namespace fusenorm;
  const Criterion criteria[] = {
      {"lattice-readings-1/4", LatticeReadingsOfOneQuarter},
      {"sentence-threshold", SentenceThreshold},
      {"random-lattice-bounds", RandomLatticeBounds},
      {"masked-aggregation", Aggregation},
      {"ambiguity-suite", AmbiguitySuite},
      {"span-provenance", Provenance},
      {"equivalence-metric", Metric},
      {"dead-endpoint-fallback", DeadEndpointFallback},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %-24s %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str(),
                secs);
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
