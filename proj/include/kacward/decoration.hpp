// Copyright 2026 The kacward Authors.
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

#pragma once

#include <map>
#include <vector>

#include "kacward/embedded_graph.hpp"
#include "kacward/loops.hpp"

namespace kacward {

/// G -> G-dagger: each vertex v of degree k > 3 is replaced by a fan of k
/// vertices v^1..v^k (clockwise in the order of v's neighbours) joined by the
/// path v^1 - v^2 - ... - v^k of weight-1 edges. Edge {u^i, v} becomes
/// {u^i, v^i} and keeps its weight and its index.
///
/// Index layout of the decorated graph: original edge k is decorated edge k;
/// unit edges follow in fan order. v^1 reuses the index of v, v^2..v^k are
/// appended.
struct Decoration {
  EmbeddedGraph decorated;
  std::vector<int> edge_map;    // original edge -> decorated edge
  std::vector<int> unit_edges;  // decorated indices of the added weight-1 edges
  std::map<int, std::vector<int>> vertex_fan;  // original vertex -> (v^1, ..., v^k)
  double epsilon_min = 0.0;  // smallest fan radius used, 0 if nothing was decorated

  /// For a decorated original vertex v and an incident original edge k, the
  /// position i (0-based) of v^i serving edge k.
  std::map<std::pair<int, int>, int> fan_position;
  /// Decorated index of the unit edge (v^i, v^{i+1}) of vertex v's fan.
  std::map<std::pair<int, int>, int> fan_edge;
};

/// Throws InvalidGraph if g is not a valid embedding and std::logic_error if
/// the decorated drawing fails validation (never expected).
Decoration decorate(const EmbeddedGraph& g);

/// Lifts a loop (or any walk) of G to G-dagger: every pass (u^i, v) -> (v, u^j)
/// through a decorated vertex is routed along the fan path v^i .. v^j.
Walk lift_walk(const Decoration& d, const EmbeddedGraph& original, const Walk& w);

inline Loop lift_loop(const Decoration& d, const EmbeddedGraph& original, const Loop& l) {
  return lift_walk(d, original, l);
}

}  // namespace kacward
