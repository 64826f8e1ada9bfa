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

#ifndef FUSENORM_EQUIVALENCE_H_
#define FUSENORM_EQUIVALENCE_H_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace fusenorm {

// One `pattern<TAB>rewrite` line.
//
// Pattern tokens are literal words or a capture class:
//   <month>     a month name
//   <ordinal>   an ordinal word sequence ("twenty first")
//   <cardinal>  a maximal cardinal word sequence ("two thousand twenty")
//   <digit>     one of "zero" .. "nine"
// Rewrite tokens are literal words, `$N` (the N-th capture, 1-based) or
// `${year:N}`, which re-reads capture N as a pairwise year when its value is
// in [1100, 2099] and leaves it unchanged otherwise.
struct EquivRule {
  struct PatternToken {
    enum class Kind { kLiteral, kMonth, kOrdinal, kCardinal, kDigit } kind;
    std::string literal;
  };
  struct RewriteToken {
    enum class Kind { kLiteral, kCapture, kYear } kind;
    std::string literal;
    size_t capture = 0;  // 0-based
  };
  std::vector<PatternToken> pattern;
  std::vector<RewriteToken> rewrite;
  std::string text;  // original line, for diagnostics
};

class EquivRuleSet {
 public:
  EquivRuleSet() = default;
  explicit EquivRuleSet(std::vector<EquivRule> rules) : rules_(std::move(rules)) {}

  // `#` starts a comment line. Throws DataError with the line number on a
  // malformed rule.
  static EquivRuleSet Parse(std::istream& in, const std::string& source);
  static EquivRuleSet Load(const std::string& path);
  // equiv_rules.tsv from the grammar data directory.
  static EquivRuleSet LoadDefault();

  // Lowercase, ASCII punctuation removed (apostrophes dropped, other marks
  // become spaces), whitespace collapsed, then rules applied until nothing
  // changes.
  std::string Canonicalize(std::string_view text) const;

  const std::vector<EquivRule>& rules() const { return rules_; }

 private:
  std::vector<EquivRule> rules_;
};

// The normalization step of Canonicalize without any rewriting.
std::vector<std::string> CanonicalTokens(std::string_view text);

// True for month names.
bool IsMonthWord(std::string_view word);

}  // namespace fusenorm

#endif  // FUSENORM_EQUIVALENCE_H_
