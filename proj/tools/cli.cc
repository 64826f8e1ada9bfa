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

#include "cli.h"

#include <atomic>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include "fusenorm/candidates.h"
#include "fusenorm/equivalence.h"
#include "fusenorm/errors.h"
#include "fusenorm/evaluate.h"
#include "fusenorm/google_tn.h"
#include "fusenorm/grammar.h"
#include "fusenorm/ngram_model.h"
#include "fusenorm/normalizer.h"
#include "fusenorm/remote_scorer.h"
#include "fusenorm/text_util.h"

namespace fusenorm::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr size_t kCandidateListingCap = 256;

struct GrammarFlags {
  std::string dir;
};

struct PipelineFlags {
  std::string scorer = "det";
  std::string lm_path;
  std::string endpoint;
  std::string mode = "auto";
  double delta = 0.2;
  size_t max_candidates = kDefaultMaxCandidates;
  int timeout_ms = 30000;
  bool no_fallback = false;
};

void AddGrammarFlags(CLI::App* cmd, GrammarFlags& g) {
  cmd->add_option("--grammar-dir", g.dir, "Directory of grammar data files");
}

void AddPipelineFlags(CLI::App* cmd, PipelineFlags& p) {
  cmd->add_option("--scorer", p.scorer, "Candidate scorer")
      ->check(CLI::IsMember({"det", "ngram", "remote"}));
  cmd->add_option("--lm-path", p.lm_path, "n-gram model written by train-lm");
  cmd->add_option("--endpoint", p.endpoint, "Scoring service base URL");
  cmd->add_option("--mode", p.mode, "Scoring mode (auto: autoregressive for ngram, masked for remote)")
      ->check(CLI::IsMember({"auto", "masked", "autoregressive"}));
  cmd->add_option("--delta", p.delta, "Pruning margin above the shortest path")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--max-candidates", p.max_candidates, "Candidate cap per sentence")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--timeout-ms", p.timeout_ms, "Remote request timeout")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--no-fallback", p.no_fallback,
                "Fail with exit code 3 instead of falling back when the scorer fails");
}

std::shared_ptr<const GrammarSet> LoadGrammar(const GrammarFlags& g) {
  if (g.dir.empty()) {
    return std::shared_ptr<const GrammarSet>(&GrammarSet::Default(), [](const GrammarSet*) {});
  }
  return std::make_shared<const GrammarSet>(GrammarSet::Load(g.dir));
}

// Owns whatever backs the chosen scorer.
struct Pipeline {
  std::shared_ptr<const GrammarSet> grammar;
  std::optional<NgramModel> model;
  std::unique_ptr<VariantScorer> variant_scorer;
  std::unique_ptr<CandidateScorer> scorer;
  std::unique_ptr<Normalizer> normalizer;
};

std::unique_ptr<Pipeline> BuildPipeline(const GrammarFlags& g, const PipelineFlags& p) {
  auto pipe = std::make_unique<Pipeline>();
  pipe->grammar = LoadGrammar(g);
  NormalizerOptions opts;
  opts.prune.delta = Weight::FromDouble(p.delta);
  opts.prune.max_candidates = p.max_candidates;
  opts.fallback = !p.no_fallback;
  if (p.scorer == "ngram") {
    if (p.lm_path.empty()) throw UsageError("--scorer ngram requires --lm-path");
    pipe->model = NgramModel::Load(p.lm_path);
    opts.mode = p.mode == "masked" ? ScoreMode::kMasked : ScoreMode::kAutoregressive;
    // The n-gram model ignores punctuation.
    opts.keep_punctuation = false;
    pipe->variant_scorer = std::make_unique<PllScorer>(*pipe->model);
    pipe->scorer =
        std::make_unique<LmCandidateScorer>(&*pipe->model, pipe->variant_scorer.get());
  } else if (p.scorer == "remote") {
    if (p.endpoint.empty()) throw UsageError("--scorer remote requires --endpoint");
    if (p.mode == "autoregressive") {
      throw UsageError("the remote scorer only supports --mode masked");
    }
    RemoteScorerOptions ro;
    ro.endpoint = p.endpoint;
    ro.timeout = std::chrono::milliseconds(p.timeout_ms);
    opts.mode = ScoreMode::kMasked;
    pipe->variant_scorer = std::make_unique<RemoteScorer>(ro);
    pipe->scorer = std::make_unique<LmCandidateScorer>(nullptr, pipe->variant_scorer.get());
  }
  pipe->normalizer = std::make_unique<Normalizer>(*pipe->grammar, pipe->scorer.get(), opts);
  return pipe;
}

std::vector<std::string> ReadLines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  return lines;
}

std::vector<std::string> ReadLinesFrom(const std::string& path, std::istream& stdin_stream) {
  if (path == "-") return ReadLines(stdin_stream);
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path);
  return ReadLines(in);
}

// Normalizes every line on `jobs` workers; output order follows input order.
std::vector<NormalizeResult> NormalizeAll(const Normalizer& normalizer,
                                          const std::vector<std::string>& lines, size_t jobs) {
  std::vector<NormalizeResult> results(lines.size());
  std::atomic<size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto work = [&] {
    for (size_t i = next++; i < lines.size(); i = next++) {
      try {
        results[i] = normalizer.Normalize(lines[i]);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next = lines.size();
      }
    }
  };
  jobs = std::max<size_t>(1, std::min(jobs, lines.size()));
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::jthread> workers;
    for (size_t j = 0; j < jobs; ++j) workers.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

size_t DefaultJobs() { return std::max(1u, std::thread::hardware_concurrency()); }

std::string Pad(std::string s, size_t width) {
  if (s.size() < width) s.resize(width, ' ');
  return s;
}

std::string ClassList(const Candidate& c) {
  std::string out;
  for (const SpanOutput& s : c.span_outputs) {
    if (!s.semiotic) continue;
    if (!out.empty()) out += ',';
    out += std::string(ClassName(s.cls));
    if (!s.normalized) out += "(unchanged)";
  }
  return out.empty() ? "-" : out;
}

int CmdCandidates(const GrammarFlags& g, const std::string& text, double delta_value,
                  size_t max_candidates, std::ostream& out) {
  const auto grammar = LoadGrammar(g);
  const SentenceLattice lattice = BuildLattice(text, *grammar);
  const Weight delta = Weight::FromDouble(delta_value);
  const std::vector<Path> all =
      EnumeratePaths(lattice.transducer, Weight::Infinity(), kCandidateListingCap);
  const Weight w_min = all.front().weight;
  out << Pad("#", 5) << Pad("W", 12) << Pad("status", 8) << Pad("classes", 32) << "text\n";
  for (size_t i = 0; i < all.size(); ++i) {
    const Candidate c = CandidateFromPath(lattice, all[i]);
    const bool kept = c.weight <= w_min + delta && i < max_candidates;
    out << Pad(std::to_string(i + 1), 5) << Pad(c.weight.ToString(), 12)
        << Pad(kept ? "kept" : "pruned", 8) << Pad(ClassList(c), 32) << c.text << '\n';
  }
  out << "W_min " << w_min << ", threshold " << (w_min + delta) << ", " << all.size()
      << (all.size() == kCandidateListingCap ? "+" : "") << " paths\n";
  return kExitOk;
}

int CmdDumpFst(const GrammarFlags& g, const std::string& text, std::ostream& out) {
  const auto grammar = LoadGrammar(g);
  BuildLattice(text, *grammar).transducer.Dump(out);
  return kExitOk;
}

int CmdTrainLm(const std::string& corpus, int order, const std::string& path,
               std::istream& in, std::ostream& err) {
  if (order < 1 || order > kMaxNgramOrder) {
    throw UsageError("--order must be between 1 and " + std::to_string(kMaxNgramOrder));
  }
  const std::vector<std::string> lines = ReadLinesFrom(corpus, in);
  const NgramModel model = NgramModel::Train(lines, order);
  model.Save(path);
  err << "trained order-" << order << " model on " << lines.size() << " lines, "
      << model.vocabulary_size() << " words -> " << path << '\n';
  return kExitOk;
}

struct EvalFlags {
  std::string hyp;
  std::string ref;
  std::string dataset;
  std::string path;
  std::string equiv_rules;
  bool json = false;
  size_t jobs = 0;
};

int CmdEval(const EvalFlags& e, const GrammarFlags& g, const PipelineFlags& p,
            std::istream& in, std::ostream& out) {
  std::vector<std::string> written;
  std::vector<std::string> refs;
  if (!e.dataset.empty()) {
    if (e.path.empty()) throw UsageError("--dataset requires --path");
    if (!e.ref.empty()) throw UsageError("use either --ref or --dataset, not both");
    if (e.dataset == "google-tn") {
      for (const ParallelExample& ex : LoadGoogleTn(e.path)) {
        written.push_back(ex.written);
        refs.push_back(ex.spoken);
      }
    } else {
      for (const std::string& line : ReadLinesFrom(e.path, in)) {
        if (TrimAscii(line).empty() || line.front() == '#') continue;
        const std::vector<std::string> f = SplitOn(line, '\t');
        if (f.size() != 2) throw DataError(e.path + ": expected written<TAB>spoken");
        written.push_back(f[0]);
        refs.push_back(f[1]);
      }
    }
  } else {
    if (e.ref.empty()) throw UsageError("eval needs --ref or --dataset");
    if (e.hyp.empty()) throw UsageError("eval with --ref needs --hyp");
    refs = ReadLinesFrom(e.ref, in);
  }

  std::vector<std::string> hyps;
  if (!e.hyp.empty()) {
    hyps = ReadLinesFrom(e.hyp, in);
  } else {
    const auto pipe = BuildPipeline(g, p);
    for (NormalizeResult& r : NormalizeAll(*pipe->normalizer, written,
                                           e.jobs ? e.jobs : DefaultJobs())) {
      hyps.push_back(std::move(r.text));
    }
  }
  if (hyps.size() != refs.size()) {
    throw DataError("hypothesis and reference line counts differ (" +
                    std::to_string(hyps.size()) + " vs " + std::to_string(refs.size()) + ")");
  }
  const EquivRuleSet rules =
      e.equiv_rules.empty() ? EquivRuleSet::LoadDefault() : EquivRuleSet::Load(e.equiv_rules);
  const EvalReport report = Evaluate(hyps, refs, rules, written);
  out << (e.json ? report.ToJson() + "\n" : report.ToText());
  return kExitOk;
}

int CmdNormalize(const GrammarFlags& g, const PipelineFlags& p, const std::string& input,
                 const std::string& output, const std::string& text, size_t jobs,
                 std::istream& in, std::ostream& out) {
  const auto pipe = BuildPipeline(g, p);
  std::vector<std::string> lines;
  if (!text.empty()) {
    lines.push_back(text);
  } else {
    lines = ReadLinesFrom(input, in);
  }
  const std::vector<NormalizeResult> results =
      NormalizeAll(*pipe->normalizer, lines, jobs ? jobs : DefaultJobs());
  std::ofstream file;
  std::ostream* sink = &out;
  if (!output.empty() && output != "-") {
    file.open(output);
    if (!file) throw DataError("cannot write " + output);
    sink = &file;
  }
  size_t fallbacks = 0;
  for (const NormalizeResult& r : results) {
    *sink << r.text << '\n';
    fallbacks += r.used_fallback ? 1 : 0;
  }
  if (fallbacks > 0) {
    spdlog::warn("{} of {} sentences used the shortest-path fallback", fallbacks,
                 results.size());
  }
  return kExitOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  auto sink = std::make_shared<spdlog::sinks::ostream_sink_mt>(err, /*force_flush=*/true);
  auto logger = std::make_shared<spdlog::logger>("fusenorm", sink);
  logger->set_pattern("%l: %v");
  logger->set_level(spdlog::level::warn);
  auto previous = spdlog::default_logger();
  spdlog::set_default_logger(logger);
  struct Restore {
    std::shared_ptr<spdlog::logger> logger;
    ~Restore() { spdlog::set_default_logger(logger); }
  } restore{previous};

  CLI::App app{"fusenorm: WFST text normalization with language-model rescoring"};
  app.require_subcommand(1);
  std::string log_level = "warn";
  app.add_option("--log-level", log_level, "trace, debug, info, warn, error or off")
      ->check(CLI::IsMember({"trace", "debug", "info", "warn", "error", "off"}));

  GrammarFlags grammar;
  PipelineFlags pipeline;

  auto* normalize = app.add_subcommand("normalize", "Normalize sentences, one per line");
  std::string input = "-";
  std::string output;
  std::string normalize_text;
  size_t jobs = 0;
  normalize->add_option("--input", input, "Input file, - for stdin");
  normalize->add_option("--output", output, "Output file (default stdout)");
  normalize->add_option("--text", normalize_text, "Normalize this sentence instead of --input");
  normalize->add_option("--jobs", jobs, "Worker threads (default: all cores)");
  AddGrammarFlags(normalize, grammar);
  AddPipelineFlags(normalize, pipeline);

  auto* candidates = app.add_subcommand("candidates", "List weighted candidate paths");
  std::string cand_text;
  double cand_delta = 0.2;
  size_t cand_max = kDefaultMaxCandidates;
  candidates->add_option("--text", cand_text, "Sentence")->required();
  candidates->add_option("--delta", cand_delta, "Pruning margin")->check(CLI::NonNegativeNumber);
  candidates->add_option("--max-candidates", cand_max, "Candidate cap")
      ->check(CLI::PositiveNumber);
  AddGrammarFlags(candidates, grammar);

  auto* train = app.add_subcommand("train-lm", "Train the n-gram scorer");
  std::string corpus;
  std::string lm_out;
  int order = 3;
  train->add_option("--corpus", corpus, "Normalized text, one sentence per line")->required();
  train->add_option("--order", order, "n-gram order");
  train->add_option("--out", lm_out, "Model file to write")->required();

  auto* eval = app.add_subcommand("eval", "Sentence accuracy under equivalence rules");
  EvalFlags eval_flags;
  eval->add_option("--hyp", eval_flags.hyp, "Hypotheses, one per line");
  eval->add_option("--ref", eval_flags.ref, "References, one per line");
  eval->add_option("--dataset", eval_flags.dataset, "Dataset format of --path")
      ->check(CLI::IsMember({"google-tn", "tsv"}));
  eval->add_option("--path", eval_flags.path, "Dataset file");
  eval->add_option("--equiv-rules", eval_flags.equiv_rules, "Equivalence rules file");
  eval->add_option("--jobs", eval_flags.jobs, "Worker threads when normalizing");
  eval->add_flag("--json", eval_flags.json, "Print the report as JSON");
  AddGrammarFlags(eval, grammar);
  AddPipelineFlags(eval, pipeline);

  auto* dump = app.add_subcommand("dump-fst", "Print the sentence lattice");
  std::string dump_text;
  dump->add_option("--text", dump_text, "Sentence")->required();
  AddGrammarFlags(dump, grammar);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  logger->set_level(spdlog::level::from_str(log_level));

  try {
    if (normalize->parsed()) {
      return CmdNormalize(grammar, pipeline, input, output, normalize_text, jobs, in, out);
    }
    if (candidates->parsed()) {
      return CmdCandidates(grammar, cand_text, cand_delta, cand_max, out);
    }
    if (train->parsed()) return CmdTrainLm(corpus, order, lm_out, in, err);
    if (eval->parsed()) return CmdEval(eval_flags, grammar, pipeline, in, out);
    if (dump->parsed()) return CmdDumpFst(grammar, dump_text, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ScoringError& e) {
    err << "error: " << e.what() << '\n';
    return kExitScorer;
  } catch (const DataError& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace fusenorm::cli
