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

#include "fixtures.hpp"

#include <algorithm>
#include <utility>

namespace kacward::testing {

EmbeddedGraph random_planar_graph(std::mt19937_64& rng, int min_points, int max_points,
                                  int max_edges) {
  std::uniform_int_distribution<int> count(min_points, max_points);
  std::uniform_real_distribution<double> coord(0.0, 1.0);
  const int n = count(rng);
  std::vector<Point> pts;
  for (int i = 0; i < n; ++i) pts.emplace_back(coord(rng), coord(rng));

  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  }
  std::sort(pairs.begin(), pairs.end(), [&](const auto& p, const auto& q) {
    return (pts[p.first] - pts[p.second]).squaredNorm() <
           (pts[q.first] - pts[q.second]).squaredNorm();
  });

  std::vector<Edge> edges;
  for (auto [a, b] : pairs) {
    edges.push_back({a, b, 1.0});
    if (!validate_embedding(EmbeddedGraph(pts, edges)).ok) edges.pop_back();
  }

  std::bernoulli_distribution drop(0.25);
  std::vector<Edge> kept;
  for (const Edge& e : edges) {
    if (!drop(rng)) kept.push_back(e);
  }
  std::shuffle(kept.begin(), kept.end(), rng);
  if (static_cast<int>(kept.size()) > max_edges) kept.resize(max_edges);
  return EmbeddedGraph(std::move(pts), std::move(kept));
}

EmbeddedGraph with_random_weights(const EmbeddedGraph& g, std::mt19937_64& rng, double lo,
                                  double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> w(g.num_edges());
  for (double& x : w) x = u(rng);
  return g.with_weights(w);
}

std::vector<EmbeddedGraph> random_corpus(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<EmbeddedGraph> out;
  for (int i = 0; i < count; ++i) {
    out.push_back(with_random_weights(random_planar_graph(rng, 4, 10, 20), rng, 0.0, 1.0));
  }
  return out;
}

}  // namespace kacward::testing
