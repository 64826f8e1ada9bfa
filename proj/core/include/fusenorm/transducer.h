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

#ifndef FUSENORM_TRANSDUCER_H_
#define FUSENORM_TRANSDUCER_H_

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "fusenorm/weight.h"

namespace fusenorm {

using StateId = int32_t;

// Labels are whole tokens. The empty string is epsilon.
inline const std::string kEpsilon;

struct Arc {
  StateId src = 0;
  StateId dst = 0;
  std::string input;
  std::string output;
  Weight weight;
};

// Identifies an arc by its source state and position in that state's list.
struct ArcRef {
  StateId state = 0;
  size_t index = 0;
  auto operator<=>(const ArcRef&) const = default;
};

struct Path {
  std::vector<Arc> arcs;
  std::vector<ArcRef> refs;
  Weight weight;
  // Non-epsilon output labels in order.
  std::vector<std::string> output;

  std::vector<std::string> Input() const;
  // Output tokens joined by single spaces.
  std::string OutputString() const;
};

// Weighted transducer over the tropical semiring with a single start state.
//
// Machines are built once through the mutators and then treated as immutable;
// the const interface is safe to share between threads. Every machine the
// grammar layer builds is acyclic, and path enumeration rejects cycles.
class Transducer {
 public:
  Transducer() = default;

  // One state that is both start and final: accepts only the empty pair.
  static Transducer Epsilon();

  // Linear machine mapping `written` to `spoken`. The whole weight sits on the
  // first arc; shorter sides are padded with epsilon. Throws FstError when
  // `weight` is negative.
  static Transducer FromPair(std::span<const std::string> written,
                             std::span<const std::string> spoken,
                             Weight weight);

  StateId AddState();
  void SetStart(StateId s);
  void AddFinal(StateId s);
  // Throws FstError on an unknown state or a negative weight.
  void AddArc(Arc arc);

  int32_t num_states() const { return static_cast<int32_t>(arcs_.size()); }
  size_t num_arcs() const;
  StateId start() const { return start_; }
  const std::set<StateId>& finals() const { return finals_; }
  bool IsFinal(StateId s) const { return finals_.count(s) > 0; }
  std::span<const Arc> ArcsFrom(StateId s) const { return arcs_.at(s); }
  const Arc& ArcAt(ArcRef ref) const { return arcs_.at(ref.state).at(ref.index); }

  // Kahn ordering of all states; throws FstError if the machine has a cycle.
  std::vector<StateId> TopologicalOrder() const;

  // Text dump, one arc per line as `src dst input output weight` with
  // epsilon written as <eps>, followed by one line per final state id.
  void Dump(std::ostream& os) const;

 private:
  void CheckState(StateId s) const;

  std::vector<std::vector<Arc>> arcs_;
  std::set<StateId> finals_;
  StateId start_ = -1;
};

// Accepts the union of both path sets; path weights are unchanged.
Transducer Union(const Transducer& a, const Transducer& b);

// Path set is the cross product; weights add.
Transducer Concat(const Transducer& a, const Transducer& b);

// Exact single-source distance from every state to the nearest final state.
std::vector<Weight> DistanceToFinal(const Transducer& t);

// All accepting paths with weight <= W_min + delta, ascending by weight and
// then lexicographically by output tokens, truncated at `cap`.
// Throws FstError on a cyclic machine or when nothing is accepted.
std::vector<Path> EnumeratePaths(const Transducer& t, Weight delta, size_t cap);

// Minimum-weight path; ties go to the lexicographically smallest output.
Path ShortestPath(const Transducer& t);

}  // namespace fusenorm

#endif  // FUSENORM_TRANSDUCER_H_
