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

#include "kacward/decoration.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "kacward/errors.hpp"

namespace kacward {

namespace {

double point_segment_distance(const Point& p, const Point& a, const Point& b) {
  const Eigen::Vector2d ab = b - a;
  const double t = std::clamp((p - a).dot(ab) / ab.squaredNorm(), 0.0, 1.0);
  return (a + t * ab - p).norm();
}

// Largest admissible fan radius around v, before the 1/4 safety factor.
double clearance(const EmbeddedGraph& g, int v) {
  double best = std::numeric_limits<double>::infinity();
  const Point& p = g.vertex(v);
  for (int k = 0; k < g.num_edges(); ++k) {
    const Edge& e = g.edge(k);
    if (e.u == v || e.v == v) {
      best = std::min(best, (g.vertex(e.u) - g.vertex(e.v)).norm());
    } else {
      best = std::min(best, point_segment_distance(p, g.vertex(e.u), g.vertex(e.v)));
    }
  }
  for (int w = 0; w < g.num_vertices(); ++w) {
    if (w != v) best = std::min(best, (g.vertex(w) - p).norm());
  }
  return best;
}

// Clockwise sweep starting just counter-clockwise of the positive x axis.
double clockwise_key(const Eigen::Vector2d& dir) {
  const double theta = std::atan2(dir.y(), dir.x());
  return theta <= 0.0 ? theta + 2.0 * std::numbers::pi : theta;
}

}  // namespace

Decoration decorate(const EmbeddedGraph& g) {
  require_valid_embedding(g);
  Decoration d;
  std::vector<Point> vertices = g.vertices();
  std::vector<Edge> edges = g.edges();
  d.edge_map.resize(g.num_edges());
  for (int k = 0; k < g.num_edges(); ++k) d.edge_map[k] = k;

  struct Fan {
    int center;
    std::vector<int> members;
  };
  std::vector<Fan> fans;

  for (int v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) <= 3) continue;
    const double eps = clearance(g, v) / 4.0;
    d.epsilon_min = fans.empty() ? eps : std::min(d.epsilon_min, eps);

    std::vector<DirectedEdgeId> spokes(g.out_edges(v).begin(), g.out_edges(v).end());
    std::sort(spokes.begin(), spokes.end(), [&](DirectedEdgeId a, DirectedEdgeId b) {
      return clockwise_key(g.direction(a)) > clockwise_key(g.direction(b));
    });

    Fan fan{v, {}};
    for (std::size_t i = 0; i < spokes.size(); ++i) {
      const Eigen::Vector2d dir = g.direction(spokes[i]).normalized();
      const Point pos = g.vertex(v) + eps * dir;
      int index = v;
      if (i == 0) {
        vertices[v] = pos;
      } else {
        index = static_cast<int>(vertices.size());
        vertices.push_back(pos);
      }
      fan.members.push_back(index);
      const int k = spokes[i].undirected();
      d.fan_position[{v, k}] = static_cast<int>(i);
      Edge& e = edges[k];
      (e.u == v ? e.u : e.v) = index;
    }
    fans.push_back(std::move(fan));
  }

  for (const Fan& fan : fans) {
    for (std::size_t i = 0; i + 1 < fan.members.size(); ++i) {
      const int k = static_cast<int>(edges.size());
      edges.push_back({fan.members[i], fan.members[i + 1], 1.0});
      d.unit_edges.push_back(k);
      d.fan_edge[{fan.center, static_cast<int>(i)}] = k;
    }
    d.vertex_fan[fan.center] = fan.members;
  }

  d.decorated = EmbeddedGraph(std::move(vertices), std::move(edges));
  if (!validate_embedding(d.decorated).ok) {
    throw std::logic_error("decorate: decorated drawing is not a valid embedding");
  }
  return d;
}

Walk lift_walk(const Decoration& d, const EmbeddedGraph& original, const Walk& w) {
  if (!is_walk(original, w)) throw std::invalid_argument("lift_walk: not a walk");
  // Original directed edge 2k / 2k+1 keeps its id: edge k keeps its endpoint order.
  Walk out{{w.steps.front()}};
  for (std::size_t i = 0; i + 1 < w.steps.size(); ++i) {
    const DirectedEdgeId in = w.steps[i];
    const DirectedEdgeId next = w.steps[i + 1];
    const int v = original.head(in);
    if (d.vertex_fan.contains(v)) {
      const int a = d.fan_position.at({v, in.undirected()});
      const int b = d.fan_position.at({v, next.undirected()});
      for (int j = a; j < b; ++j) out.steps.emplace_back(2 * d.fan_edge.at({v, j}));
      for (int j = a; j > b; --j) out.steps.emplace_back(2 * d.fan_edge.at({v, j - 1}) + 1);
    }
    out.steps.push_back(next);
  }
  return out;
}

}  // namespace kacward
