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

#include "kacward/kac_ward.hpp"

namespace kacward {

double max_abs_weight(const EmbeddedGraph& g) {
  double m = 0.0;
  for (const Edge& e : g.edges()) m = std::max(m, std::abs(e.weight));
  return m;
}

double loop_series_ratio(const EmbeddedGraph& g) {
  const int delta = max_degree(g);
  if (delta <= 1) return 0.0;
  return (delta - 1) * max_abs_weight(g);
}

bool check_convergence_radius(const EmbeddedGraph& g) {
  const int delta = max_degree(g);
  if (delta <= 1) return true;
  return max_abs_weight(g) < 1.0 / (delta - 1);
}

}  // namespace kacward
