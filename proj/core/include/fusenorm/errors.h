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

#ifndef FUSENORM_ERRORS_H_
#define FUSENORM_ERRORS_H_

#include <stdexcept>
#include <string>

namespace fusenorm {

// Malformed or unusable transducer (cycle, no accepting path, bad state id).
class FstError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad input data: unreadable files, malformed lines, out-of-range values.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fusenorm

#endif  // FUSENORM_ERRORS_H_
