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

#include "fusenorm/transducer.h"

#include <algorithm>
#include <deque>
#include <queue>
#include <string_view>

#include "fusenorm/errors.h"

namespace fusenorm {
namespace {

std::string_view Printable(const std::string& label) {
  return label.empty() ? std::string_view("<eps>") : std::string_view(label);
}

// Copies `src` into `dst` with state ids shifted by `offset`; returns the
// shifted start state.
StateId AppendStates(const Transducer& src, Transducer* dst) {
  const StateId offset = dst->num_states();
  for (StateId s = 0; s < src.num_states(); ++s) dst->AddState();
  for (StateId s = 0; s < src.num_states(); ++s) {
    for (const Arc& arc : src.ArcsFrom(s)) {
      Arc copy = arc;
      copy.src += offset;
      copy.dst += offset;
      dst->AddArc(std::move(copy));
    }
  }
  return src.start() + offset;
}

}  // namespace

std::vector<std::string> Path::Input() const {
  std::vector<std::string> in;
  for (const Arc& arc : arcs) {
    if (!arc.input.empty()) in.push_back(arc.input);
  }
  return in;
}

std::string Path::OutputString() const {
  std::string out;
  for (const std::string& tok : output) {
    if (!out.empty()) out += ' ';
    out += tok;
  }
  return out;
}

Transducer Transducer::Epsilon() {
  Transducer t;
  t.SetStart(t.AddState());
  t.AddFinal(t.start());
  return t;
}

Transducer Transducer::FromPair(std::span<const std::string> written,
                                std::span<const std::string> spoken,
                                Weight weight) {
  if (weight < Weight::Zero()) {
    throw FstError("FromPair: negative weight " + weight.ToString());
  }
  Transducer t;
  StateId cur = t.AddState();
  t.SetStart(cur);
  // An empty pair still needs one arc to carry the weight.
  const size_t len = std::max<size_t>({written.size(), spoken.size(), 1});
  for (size_t i = 0; i < len; ++i) {
    const StateId next = t.AddState();
    t.AddArc({cur, next, i < written.size() ? written[i] : kEpsilon,
              i < spoken.size() ? spoken[i] : kEpsilon,
              i == 0 ? weight : Weight::Zero()});
    cur = next;
  }
  t.AddFinal(cur);
  return t;
}

StateId Transducer::AddState() {
  arcs_.emplace_back();
  return num_states() - 1;
}

void Transducer::CheckState(StateId s) const {
  if (s < 0 || s >= num_states()) {
    throw FstError("invalid state id " + std::to_string(s));
  }
}

void Transducer::SetStart(StateId s) {
  CheckState(s);
  start_ = s;
}

void Transducer::AddFinal(StateId s) {
  CheckState(s);
  finals_.insert(s);
}

void Transducer::AddArc(Arc arc) {
  CheckState(arc.src);
  CheckState(arc.dst);
  if (arc.weight < Weight::Zero()) {
    throw FstError("negative arc weight " + arc.weight.ToString());
  }
  arcs_[arc.src].push_back(std::move(arc));
}

size_t Transducer::num_arcs() const {
  size_t n = 0;
  for (const auto& out : arcs_) n += out.size();
  return n;
}

std::vector<StateId> Transducer::TopologicalOrder() const {
  std::vector<int> indegree(num_states(), 0);
  for (const auto& out : arcs_) {
    for (const Arc& arc : out) ++indegree[arc.dst];
  }
  std::deque<StateId> ready;
  for (StateId s = 0; s < num_states(); ++s) {
    if (indegree[s] == 0) ready.push_back(s);
  }
  std::vector<StateId> order;
  order.reserve(num_states());
  while (!ready.empty()) {
    const StateId s = ready.front();
    ready.pop_front();
    order.push_back(s);
    for (const Arc& arc : arcs_[s]) {
      if (--indegree[arc.dst] == 0) ready.push_back(arc.dst);
    }
  }
  if (order.size() != arcs_.size()) {
    throw FstError("transducer has a cycle; path enumeration needs a DAG");
  }
  return order;
}

void Transducer::Dump(std::ostream& os) const {
  for (StateId s = 0; s < num_states(); ++s) {
    for (const Arc& arc : arcs_[s]) {
      os << arc.src << ' ' << arc.dst << ' ' << Printable(arc.input) << ' '
         << Printable(arc.output) << ' ' << arc.weight << '\n';
    }
  }
  for (StateId f : finals_) os << f << '\n';
}

Transducer Union(const Transducer& a, const Transducer& b) {
  if (a.num_states() == 0) return b;
  if (b.num_states() == 0) return a;
  Transducer t;
  const StateId start = t.AddState();
  t.SetStart(start);
  for (const Transducer* part : {&a, &b}) {
    const StateId offset = t.num_states();
    const StateId sub_start = AppendStates(*part, &t);
    t.AddArc({start, sub_start, kEpsilon, kEpsilon, Weight::Zero()});
    for (StateId f : part->finals()) t.AddFinal(f + offset);
  }
  return t;
}

Transducer Concat(const Transducer& a, const Transducer& b) {
  if (a.num_states() == 0) return a;
  if (b.num_states() == 0) return b;
  Transducer t;
  AppendStates(a, &t);
  t.SetStart(a.start());
  const StateId offset = t.num_states();
  const StateId b_start = AppendStates(b, &t);
  for (StateId f : a.finals()) {
    t.AddArc({f, b_start, kEpsilon, kEpsilon, Weight::Zero()});
  }
  for (StateId f : b.finals()) t.AddFinal(f + offset);
  return t;
}

std::vector<Weight> DistanceToFinal(const Transducer& t) {
  const std::vector<StateId> order = t.TopologicalOrder();
  std::vector<Weight> dist(t.num_states(), Weight::Infinity());
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const StateId s = *it;
    Weight best = t.IsFinal(s) ? Weight::Zero() : Weight::Infinity();
    for (const Arc& arc : t.ArcsFrom(s)) {
      best = std::min(best, arc.weight + dist[arc.dst]);
    }
    dist[s] = best;
  }
  return dist;
}

namespace {

struct SearchNode {
  int parent = -1;
  ArcRef ref;
  StateId state = 0;
  Weight prefix;     // weight accumulated so far
  Weight estimate;   // prefix + exact distance to a final state
  bool complete = false;
  uint64_t seq = 0;
  std::vector<const std::string*> output;
};

// Orders nodes by (estimate, output tokens, complete first, insertion).
// The heuristic is exact, so a complete node popped first is the next path
// in (weight, output) order: any pending partial path with the same estimate
// carries an output prefix that already compares greater.
bool Before(const SearchNode& a, const SearchNode& b) {
  if (a.estimate != b.estimate) return a.estimate < b.estimate;
  const int cmp = [&] {
    const size_t n = std::min(a.output.size(), b.output.size());
    for (size_t i = 0; i < n; ++i) {
      if (int c = a.output[i]->compare(*b.output[i]); c != 0) return c;
    }
    if (a.output.size() == b.output.size()) return 0;
    return a.output.size() < b.output.size() ? -1 : 1;
  }();
  if (cmp != 0) return cmp < 0;
  if (a.complete != b.complete) return a.complete;
  return a.seq < b.seq;
}

}  // namespace

std::vector<Path> EnumeratePaths(const Transducer& t, Weight delta,
                                 size_t cap) {
  if (t.num_states() == 0) throw FstError("empty transducer");
  if (delta < Weight::Zero()) throw FstError("negative pruning delta");
  const std::vector<Weight> dist = DistanceToFinal(t);
  const Weight best = dist[t.start()];
  if (best.is_infinite()) throw FstError("transducer accepts no path");
  const Weight bound = best + delta;

  std::vector<SearchNode> nodes;
  auto cmp = [&nodes](int a, int b) { return Before(nodes[b], nodes[a]); };
  std::priority_queue<int, std::vector<int>, decltype(cmp)> queue(cmp);
  uint64_t seq = 0;

  SearchNode root;
  root.state = t.start();
  root.estimate = best;
  root.seq = seq++;
  nodes.push_back(std::move(root));
  queue.push(0);

  std::vector<Path> paths;
  while (!queue.empty() && paths.size() < cap) {
    const int id = queue.top();
    queue.pop();
    if (nodes[id].complete) {
      Path path;
      path.weight = nodes[id].prefix;
      for (const std::string* label : nodes[id].output) {
        path.output.push_back(*label);
      }
      for (int n = id; nodes[n].parent >= 0; n = nodes[n].parent) {
        path.refs.push_back(nodes[n].ref);
      }
      std::reverse(path.refs.begin(), path.refs.end());
      for (const ArcRef& ref : path.refs) path.arcs.push_back(t.ArcAt(ref));
      paths.push_back(std::move(path));
      continue;
    }
    const StateId state = nodes[id].state;
    if (t.IsFinal(state)) {
      SearchNode done = nodes[id];
      done.complete = true;
      done.estimate = done.prefix;
      done.parent = nodes[id].parent;
      done.seq = seq++;
      nodes.push_back(std::move(done));
      queue.push(static_cast<int>(nodes.size()) - 1);
    }
    const auto arcs = t.ArcsFrom(state);
    for (size_t i = 0; i < arcs.size(); ++i) {
      const Arc& arc = arcs[i];
      const Weight prefix = nodes[id].prefix + arc.weight;
      const Weight estimate = prefix + dist[arc.dst];
      if (estimate > bound) continue;
      SearchNode child;
      child.parent = id;
      child.ref = {state, i};
      child.state = arc.dst;
      child.prefix = prefix;
      child.estimate = estimate;
      child.seq = seq++;
      child.output = nodes[id].output;
      if (!arc.output.empty()) child.output.push_back(&arc.output);
      nodes.push_back(std::move(child));
      queue.push(static_cast<int>(nodes.size()) - 1);
    }
  }
  return paths;
}

Path ShortestPath(const Transducer& t) {
  std::vector<Path> paths = EnumeratePaths(t, Weight::Zero(), 1);
  return std::move(paths.front());
}

}  // namespace fusenorm
