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

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace kacward {

using Point = Eigen::Vector2d;

struct Edge {
  int u = 0;
  int v = 0;
  double weight = 0.0;
};

/// Directed edge handle. Undirected edge k owns ids 2k (u -> v) and 2k+1 (v -> u).
class DirectedEdgeId {
 public:
  constexpr DirectedEdgeId() = default;
  constexpr explicit DirectedEdgeId(int id) : id_(id) {}

  constexpr int id() const { return id_; }
  constexpr int undirected() const { return id_ >> 1; }
  constexpr DirectedEdgeId reversed() const { return DirectedEdgeId(id_ ^ 1); }
  constexpr DirectedEdgeId operator-() const { return reversed(); }

  friend constexpr auto operator<=>(DirectedEdgeId, DirectedEdgeId) = default;

 private:
  int id_ = 0;
};

/// A finite graph drawn in the plane with straight-line edges and one real
/// weight per undirected edge.
///
/// Construction rejects structurally impossible drawings (indices out of
/// range, self-loops, repeated undirected edges, non-finite coordinates or
/// weights) by throwing InvalidGraph. Geometric planarity is a separate
/// question answered by validate_embedding(). Instances are immutable.
class EmbeddedGraph {
 public:
  EmbeddedGraph() = default;
  EmbeddedGraph(std::vector<Point> vertices, std::vector<Edge> edges);

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_directed_edges() const { return 2 * num_edges(); }

  const std::vector<Point>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Point& vertex(int v) const { return vertices_[v]; }
  const Edge& edge(int k) const { return edges_[k]; }
  double weight(int k) const { return edges_[k].weight; }
  std::vector<double> weights() const;

  int tail(DirectedEdgeId d) const;
  int head(DirectedEdgeId d) const;
  double weight(DirectedEdgeId d) const { return edges_[d.undirected()].weight; }
  /// h_d - t_d as a plane vector.
  Eigen::Vector2d direction(DirectedEdgeId d) const;

  /// Directed edges leaving vertex v, in increasing id order.
  std::span<const DirectedEdgeId> out_edges(int v) const { return out_[v]; }
  int degree(int v) const { return static_cast<int>(out_[v].size()); }

  /// Same drawing, new weights (one per undirected edge).
  EmbeddedGraph with_weights(std::span<const double> weights) const;
  EmbeddedGraph with_uniform_weight(double weight) const;

 private:
  std::vector<Point> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<DirectedEdgeId>> out_;
};

/// Disjoint union; the second graph's vertex and edge indices are shifted.
EmbeddedGraph disjoint_union(const EmbeddedGraph& a, const EmbeddedGraph& b,
                             const Eigen::Vector2d& offset);

enum class ViolationKind {
  kZeroLength,
  kCrossing,
  kVertexOnEdge,
};

std::string to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  int first = -1;   // edge index
  int second = -1;  // second edge (crossing) or vertex (vertex-on-edge); -1 otherwise

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;
};

/// Relative tolerance on normalized cross products in the geometric tests.
inline constexpr double kGeometryEpsilon = 1e-12;

/// Lists every zero-length edge, every pair of edges whose closed segments
/// meet anywhere other than a shared endpoint, and every edge whose closed
/// segment contains a vertex other than its own endpoints.
ValidationReport validate_embedding(const EmbeddedGraph& g);

/// Throws InvalidGraph with the first violation if g is not a valid embedding.
void require_valid_embedding(const EmbeddedGraph& g);

/// Arg((h_f - t_f) / (h_e - t_e)) in (-pi, pi].
double turning_angle(const EmbeddedGraph& g, DirectedEdgeId e, DirectedEdgeId f);

int max_degree(const EmbeddedGraph& g);

int num_connected_components(const EmbeddedGraph& g);

}  // namespace kacward
