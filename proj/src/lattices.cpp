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

#include "kacward/lattices.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace kacward {

EmbeddedGraph gen_square(int width, int height, double weight) {
  if (width < 1 || height < 1) throw std::invalid_argument("gen_square: dimensions must be >= 1");
  std::vector<Point> vertices;
  for (int j = 0; j <= height; ++j) {
    for (int i = 0; i <= width; ++i) vertices.emplace_back(i, j);
  }
  auto id = [&](int i, int j) { return j * (width + 1) + i; };
  std::vector<Edge> edges;
  for (int j = 0; j <= height; ++j) {
    for (int i = 0; i < width; ++i) edges.push_back({id(i, j), id(i + 1, j), weight});
  }
  for (int j = 0; j < height; ++j) {
    for (int i = 0; i <= width; ++i) edges.push_back({id(i, j), id(i, j + 1), weight});
  }
  return EmbeddedGraph(std::move(vertices), std::move(edges));
}

EmbeddedGraph gen_hex(int rows, int cols, double weight) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("gen_hex: dimensions must be >= 1");
  std::vector<Point> vertices;
  std::map<std::pair<int, int>, int> index;
  auto vertex = [&](int x, int y) {
    auto [it, inserted] = index.try_emplace({x, y}, static_cast<int>(vertices.size()));
    if (inserted) vertices.emplace_back(x, y);
    return it->second;
  };
  std::vector<Edge> edges;
  std::set<std::pair<int, int>> seen;
  auto edge = [&](int a, int b) {
    if (seen.emplace(std::min(a, b), std::max(a, b)).second) edges.push_back({a, b, weight});
  };

  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const int x0 = 2 * c + (r % 2);
      const int corners[6] = {vertex(x0, r),         vertex(x0 + 1, r),     vertex(x0 + 2, r),
                              vertex(x0 + 2, r + 1), vertex(x0 + 1, r + 1), vertex(x0, r + 1)};
      for (int i = 0; i < 6; ++i) edge(corners[i], corners[(i + 1) % 6]);
    }
  }
  return EmbeddedGraph(std::move(vertices), std::move(edges));
}

}  // namespace kacward
