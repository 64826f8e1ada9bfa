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

#include "fusenorm/google_tn.h"

#include <fstream>
#include <istream>
#include <ostream>

#include "fusenorm/errors.h"
#include "fusenorm/text_util.h"

namespace fusenorm {
namespace {

constexpr char kEos[] = "<eos>";

void Append(std::string& text, const std::string& token, bool attach) {
  if (token.empty()) return;
  if (!text.empty() && !attach) text += ' ';
  text += token;
}

ParallelExample Assemble(std::vector<GoogleTnRow> rows, const std::string& source) {
  ParallelExample ex;
  ex.source = source;
  for (const GoogleTnRow& row : rows) {
    const bool punct = row.cls == "PUNCT";
    std::string spoken = row.spoken;
    if (spoken == "<self>" || spoken == "sil") spoken = row.written;
    Append(ex.written, row.written, punct);
    Append(ex.spoken, spoken, punct);
  }
  ex.rows = std::move(rows);
  return ex;
}

}  // namespace

std::vector<ParallelExample> ParseGoogleTn(std::istream& in, const std::string& source) {
  std::vector<ParallelExample> out;
  std::vector<GoogleTnRow> rows;
  std::string line;
  size_t line_no = 0;
  auto flush = [&] {
    if (!rows.empty()) out.push_back(Assemble(std::move(rows), source));
    rows.clear();
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (TrimAscii(line).empty()) continue;
    const std::vector<std::string> fields = SplitOn(line, '\t');
    if (fields.size() == 2 && fields[0] == kEos && fields[1] == kEos) {
      flush();
      continue;
    }
    if (fields.size() != 3 || fields[0].empty() || fields[1].empty() || fields[2].empty()) {
      throw DataError(source + ":" + std::to_string(line_no) +
                      ": expected class<TAB>written<TAB>spoken");
    }
    rows.push_back({fields[0], fields[1], fields[2]});
  }
  flush();
  return out;
}

std::vector<ParallelExample> LoadGoogleTn(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path);
  return ParseGoogleTn(in, path);
}

void WriteGoogleTn(std::ostream& out, std::span<const ParallelExample> examples) {
  for (const ParallelExample& ex : examples) {
    for (const GoogleTnRow& row : ex.rows) {
      out << row.cls << '\t' << row.written << '\t' << row.spoken << '\n';
    }
    out << kEos << '\t' << kEos << '\n';
  }
}

}  // namespace fusenorm
