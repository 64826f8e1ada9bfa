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

#include "fusenorm/weight.h"

#include <cmath>
#include <cstdlib>

namespace fusenorm {

Weight Weight::FromDouble(double value) {
  if (std::isinf(value) && value > 0) return Infinity();
  return FromTicks(std::llround(value * kTicksPerUnit));
}

std::string Weight::ToString() const {
  if (is_infinite()) return "inf";
  const int64_t abs_ticks = std::llabs(ticks_);
  std::string out = ticks_ < 0 ? "-" : "";
  out += std::to_string(abs_ticks / kTicksPerUnit);
  int64_t frac = abs_ticks % kTicksPerUnit;
  if (frac != 0) {
    std::string digits = std::to_string(frac);
    digits.insert(0, 4 - digits.size(), '0');
    while (digits.back() == '0') digits.pop_back();
    out += "." + digits;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, Weight w) {
  return os << w.ToString();
}

}  // namespace fusenorm
