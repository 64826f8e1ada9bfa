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

#ifndef FUSENORM_WEIGHT_H_
#define FUSENORM_WEIGHT_H_

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

namespace fusenorm {

// Tropical-semiring weight stored as fixed point with a resolution of 1e-4.
//
// Grammar weights come from a small rational set (0, 1.0..1.01, 2, 100), so
// integer ticks make every path sum exact and pruning bounds reproducible.
// Path extension is operator+; choice between paths is std::min.
class Weight {
 public:
  static constexpr int64_t kTicksPerUnit = 10000;

  constexpr Weight() = default;

  static constexpr Weight FromTicks(int64_t ticks) { return Weight(ticks); }
  // Rounds to the nearest tick.
  static Weight FromDouble(double value);
  static constexpr Weight Zero() { return Weight(0); }
  static constexpr Weight One() { return Weight(kTicksPerUnit); }
  static constexpr Weight Infinity() {
    return Weight(std::numeric_limits<int64_t>::max());
  }

  constexpr int64_t ticks() const { return ticks_; }
  double value() const {
    return static_cast<double>(ticks_) / static_cast<double>(kTicksPerUnit);
  }
  constexpr bool is_infinite() const { return ticks_ == Infinity().ticks_; }

  // Saturates at Infinity().
  constexpr Weight operator+(Weight other) const {
    if (is_infinite() || other.is_infinite()) return Infinity();
    return Weight(ticks_ + other.ticks_);
  }
  constexpr Weight operator-(Weight other) const {
    return Weight(ticks_ - other.ticks_);
  }
  constexpr Weight& operator+=(Weight other) { return *this = *this + other; }
  constexpr Weight operator*(int64_t n) const { return Weight(ticks_ * n); }

  constexpr auto operator<=>(const Weight&) const = default;

  // Shortest decimal rendering, e.g. "401.2", "1.0045", "100".
  std::string ToString() const;

 private:
  constexpr explicit Weight(int64_t ticks) : ticks_(ticks) {}
  int64_t ticks_ = 0;
};

std::ostream& operator<<(std::ostream& os, Weight w);

}  // namespace fusenorm

#endif  // FUSENORM_WEIGHT_H_
