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

#ifndef FUSENORM_GOOGLE_TN_H_
#define FUSENORM_GOOGLE_TN_H_

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace fusenorm {

// One `class<TAB>written<TAB>spoken` row, spoken kept as written in the file.
struct GoogleTnRow {
  std::string cls;
  std::string written;
  std::string spoken;
};

struct ParallelExample {
  std::string written;
  std::string spoken;
  std::string source;
  std::vector<GoogleTnRow> rows;
};

// Token-per-line GoogleTN files. Sentences end at `<eos><TAB><eos>`; a
// trailing sentence without one is kept. `<self>` copies the written token
// and `sil` stands for the written punctuation. Sentence text joins tokens
// with single spaces, except that PUNCT tokens attach to the previous token.
// Blank lines are ignored. Throws DataError with the line number on any other
// malformed row.
std::vector<ParallelExample> ParseGoogleTn(std::istream& in, const std::string& source);
std::vector<ParallelExample> LoadGoogleTn(const std::string& path);

// Writes rows back, one `<eos><TAB><eos>` after each example.
void WriteGoogleTn(std::ostream& out, std::span<const ParallelExample> examples);

}  // namespace fusenorm

#endif  // FUSENORM_GOOGLE_TN_H_
