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

#ifndef FUSENORM_TOOLS_CLI_H_
#define FUSENORM_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace fusenorm::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitData = 2,
  kExitScorer = 3,
};

// Runs the fusenorm command line. `args` excludes the program name. Normal
// output goes to `out`, diagnostics to `err`; `in` backs `--input -`.
int Run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace fusenorm::cli

#endif  // FUSENORM_TOOLS_CLI_H_
