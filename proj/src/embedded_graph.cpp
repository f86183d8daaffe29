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

#include "kacward/embedded_graph.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

#include "kacward/errors.hpp"

namespace kacward {

namespace {

double cross(const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
  return a.x() * b.y() - a.y() * b.x();
}

// Sign of the turn a -> b -> c, with near-collinear configurations snapped to 0.
int orientation(const Point& a, const Point& b, const Point& c) {
  const Eigen::Vector2d ab = b - a;
  const Eigen::Vector2d ac = c - a;
  const double scale = ab.norm() * ac.norm();
  if (scale == 0.0) return 0;
  const double s = cross(ab, ac) / scale;
  if (std::abs(s) <= kGeometryEpsilon) return 0;
  return s > 0 ? 1 : -1;
}

// c is collinear with a, b; is it inside the closed segment [a, b]?
bool within_segment(const Point& a, const Point& b, const Point& c) {
  const Eigen::Vector2d ab = b - a;
  const double t = (c - a).dot(ab);
  return t >= 0.0 && t <= ab.squaredNorm();
}

bool closed_segments_intersect(const Point& p1, const Point& p2, const Point& q1,
                               const Point& q2) {
  const int o1 = orientation(p1, p2, q1);
  const int o2 = orientation(p1, p2, q2);
  const int o3 = orientation(q1, q2, p1);
  const int o4 = orientation(q1, q2, p2);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  if (o1 == 0 && within_segment(p1, p2, q1)) return true;
  if (o2 == 0 && within_segment(p1, p2, q2)) return true;
  if (o3 == 0 && within_segment(q1, q2, p1)) return true;
  if (o4 == 0 && within_segment(q1, q2, p2)) return true;
  return false;
}

}  // namespace

EmbeddedGraph::EmbeddedGraph(std::vector<Point> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  const int n = num_vertices();
  for (int v = 0; v < n; ++v) {
    if (!vertices_[v].allFinite()) {
      throw InvalidGraph("vertex " + std::to_string(v) + " has a non-finite coordinate");
    }
  }
  std::set<std::pair<int, int>> seen;
  out_.assign(n, {});
  for (int k = 0; k < num_edges(); ++k) {
    const Edge& e = edges_[k];
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw InvalidGraph("edge " + std::to_string(k) + " references a missing vertex");
    }
    if (e.u == e.v) {
      throw InvalidGraph("edge " + std::to_string(k) + " is a self-loop");
    }
    if (!std::isfinite(e.weight)) {
      throw InvalidGraph("edge " + std::to_string(k) + " has a non-finite weight");
    }
    if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second) {
      throw InvalidGraph("edge " + std::to_string(k) + " duplicates an earlier edge");
    }
    out_[e.u].emplace_back(2 * k);
    out_[e.v].emplace_back(2 * k + 1);
  }
}

std::vector<double> EmbeddedGraph::weights() const {
  std::vector<double> w(edges_.size());
  std::transform(edges_.begin(), edges_.end(), w.begin(),
                 [](const Edge& e) { return e.weight; });
  return w;
}

int EmbeddedGraph::tail(DirectedEdgeId d) const {
  const Edge& e = edges_[d.undirected()];
  return (d.id() & 1) ? e.v : e.u;
}

int EmbeddedGraph::head(DirectedEdgeId d) const {
  const Edge& e = edges_[d.undirected()];
  return (d.id() & 1) ? e.u : e.v;
}

Eigen::Vector2d EmbeddedGraph::direction(DirectedEdgeId d) const {
  return vertices_[head(d)] - vertices_[tail(d)];
}

EmbeddedGraph EmbeddedGraph::with_weights(std::span<const double> weights) const {
  if (weights.size() != edges_.size()) {
    throw std::invalid_argument("with_weights: expected one weight per edge");
  }
  std::vector<Edge> edges = edges_;
  for (std::size_t k = 0; k < edges.size(); ++k) edges[k].weight = weights[k];
  return EmbeddedGraph(vertices_, std::move(edges));
}

EmbeddedGraph EmbeddedGraph::with_uniform_weight(double weight) const {
  const std::vector<double> w(edges_.size(), weight);
  return with_weights(w);
}

EmbeddedGraph disjoint_union(const EmbeddedGraph& a, const EmbeddedGraph& b,
                             const Eigen::Vector2d& offset) {
  std::vector<Point> vertices = a.vertices();
  for (const Point& p : b.vertices()) vertices.push_back(p + offset);
  std::vector<Edge> edges = a.edges();
  const int shift = a.num_vertices();
  for (Edge e : b.edges()) {
    e.u += shift;
    e.v += shift;
    edges.push_back(e);
  }
  return EmbeddedGraph(std::move(vertices), std::move(edges));
}

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kZeroLength:
      return "zero-length edge";
    case ViolationKind::kCrossing:
      return "crossing edges";
    case ViolationKind::kVertexOnEdge:
      return "vertex on edge";
  }
  return "unknown";
}

ValidationReport validate_embedding(const EmbeddedGraph& g) {
  ValidationReport report;
  const auto& pts = g.vertices();
  const auto& edges = g.edges();
  const int m = g.num_edges();

  std::vector<bool> degenerate(m, false);
  for (int k = 0; k < m; ++k) {
    if (pts[edges[k].u] == pts[edges[k].v]) {
      degenerate[k] = true;
      report.violations.push_back({ViolationKind::kZeroLength, k, -1});
    }
  }

  for (int i = 0; i < m; ++i) {
    if (degenerate[i]) continue;
    const Edge& a = edges[i];
    for (int j = i + 1; j < m; ++j) {
      if (degenerate[j]) continue;
      const Edge& b = edges[j];
      int shared = -1;
      int a_other = -1;
      int b_other = -1;
      if (a.u == b.u || a.u == b.v) {
        shared = a.u;
        a_other = a.v;
        b_other = (a.u == b.u) ? b.v : b.u;
      } else if (a.v == b.u || a.v == b.v) {
        shared = a.v;
        a_other = a.u;
        b_other = (a.v == b.u) ? b.v : b.u;
      }
      bool bad = false;
      if (shared >= 0) {
        // Two segments from a common endpoint meet again only if they overlap.
        const Point& s = pts[shared];
        bad = orientation(s, pts[a_other], pts[b_other]) == 0 &&
              (pts[a_other] - s).dot(pts[b_other] - s) > 0.0;
      } else {
        bad = closed_segments_intersect(pts[a.u], pts[a.v], pts[b.u], pts[b.v]);
      }
      if (bad) report.violations.push_back({ViolationKind::kCrossing, i, j});
    }
  }

  for (int k = 0; k < m; ++k) {
    if (degenerate[k]) continue;
    const Point& p = pts[edges[k].u];
    const Point& q = pts[edges[k].v];
    for (int w = 0; w < g.num_vertices(); ++w) {
      if (w == edges[k].u || w == edges[k].v) continue;
      if (orientation(p, q, pts[w]) == 0 && within_segment(p, q, pts[w])) {
        report.violations.push_back({ViolationKind::kVertexOnEdge, k, w});
      }
    }
  }

  report.ok = report.violations.empty();
  return report;
}

void require_valid_embedding(const EmbeddedGraph& g) {
  const ValidationReport report = validate_embedding(g);
  if (report.ok) return;
  const Violation& v = report.violations.front();
  std::ostringstream msg;
  msg << to_string(v.kind) << " (edge " << v.first;
  if (v.kind == ViolationKind::kCrossing) msg << " and edge " << v.second;
  if (v.kind == ViolationKind::kVertexOnEdge) msg << ", vertex " << v.second;
  msg << ")";
  if (report.violations.size() > 1) {
    msg << " and " << report.violations.size() - 1 << " more";
  }
  throw InvalidGraph(msg.str());
}

double turning_angle(const EmbeddedGraph& g, DirectedEdgeId e, DirectedEdgeId f) {
  const Eigen::Vector2d a = g.direction(e);
  const Eigen::Vector2d b = g.direction(f);
  if (a.isZero(0.0) || b.isZero(0.0)) {
    throw InvalidGraph("turning angle of a zero-length edge");
  }
  const double angle = std::atan2(cross(a, b), a.dot(b));
  return angle == -std::numbers::pi ? std::numbers::pi : angle;
}

int max_degree(const EmbeddedGraph& g) {
  int d = 0;
  for (int v = 0; v < g.num_vertices(); ++v) d = std::max(d, g.degree(v));
  return d;
}

int num_connected_components(const EmbeddedGraph& g) {
  std::vector<int> parent(g.num_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  int components = g.num_vertices();
  for (const Edge& e : g.edges()) {
    const int a = find(e.u);
    const int b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components;
}

}  // namespace kacward
