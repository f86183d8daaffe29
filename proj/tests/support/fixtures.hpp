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

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "kacward/embedded_graph.hpp"

namespace kacward::testing {

inline EmbeddedGraph single_edge(double w = 0.5) {
  return EmbeddedGraph({{0, 0}, {1, 0}}, {{0, 1, w}});
}

inline EmbeddedGraph path3(double w = 0.5) {
  return EmbeddedGraph({{0, 0}, {1, 0}, {1, 1}}, {{0, 1, w}, {1, 2, w}});
}

inline EmbeddedGraph triangle(double a = 0.5, double b = 0.5, double c = 0.5) {
  return EmbeddedGraph({{0, 0}, {1, 0}, {0, 1}}, {{0, 1, a}, {1, 2, b}, {2, 0, c}});
}

inline EmbeddedGraph four_cycle(double w = 0.5) {
  return EmbeddedGraph({{0, 0}, {1, 0}, {1, 1}, {0, 1}},
                       {{0, 1, w}, {1, 2, w}, {2, 3, w}, {3, 0, w}});
}

// Two triangles sharing vertex 0, which has degree 4.
inline EmbeddedGraph bowtie(double w = 0.5) {
  return EmbeddedGraph({{0, 0}, {-1, 1}, {-1, -1}, {1, 1}, {1, -1}},
                       {{0, 1, w}, {1, 2, w}, {2, 0, w}, {0, 3, w}, {3, 4, w}, {4, 0, w}});
}

// Hub of degree `spokes` joined to a rim cycle.
inline EmbeddedGraph wheel(int spokes, double w = 0.5) {
  std::vector<Point> pts{{0, 0}};
  std::vector<Edge> edges;
  for (int i = 0; i < spokes; ++i) {
    const double t = 2 * std::numbers::pi * i / spokes;
    pts.emplace_back(std::cos(t), std::sin(t));
    edges.push_back({0, i + 1, w});
  }
  for (int i = 0; i < spokes; ++i) edges.push_back({i + 1, (i + 1) % spokes + 1, w});
  return EmbeddedGraph(std::move(pts), std::move(edges));
}

// Degree-5 star whose first two leaves are joined, closing one triangle.
inline EmbeddedGraph star5_with_cycle(double w = 0.5) {
  std::vector<Point> pts{{0, 0}};
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    const double t = 2 * std::numbers::pi * i / 5;
    pts.emplace_back(2 * std::cos(t), 2 * std::sin(t));
    edges.push_back({0, i + 1, w});
  }
  edges.push_back({1, 2, w});
  return EmbeddedGraph(std::move(pts), std::move(edges));
}

/// Random straight-line planar graph: greedy (shortest-first) triangulation of
/// random points, then random edge deletion down to at most max_edges.
EmbeddedGraph random_planar_graph(std::mt19937_64& rng, int min_points, int max_points,
                                  int max_edges);

/// Uniform random weights in [lo, hi).
EmbeddedGraph with_random_weights(const EmbeddedGraph& g, std::mt19937_64& rng, double lo,
                                  double hi);

/// The random corpus used across property and acceptance tests.
std::vector<EmbeddedGraph> random_corpus(std::uint64_t seed, int count);

}  // namespace kacward::testing
