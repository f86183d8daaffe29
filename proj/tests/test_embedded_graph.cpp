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

#include <doctest.h>

#include <algorithm>
#include <numbers>
#include <random>

#include "kacward/embedded_graph.hpp"
#include "kacward/errors.hpp"
#include "support/fixtures.hpp"

using namespace kacward;
using kacward::testing::bowtie;
using kacward::testing::random_corpus;
using kacward::testing::triangle;

TEST_CASE("directed edge ids pair up with their reversal") {
  for (int id = 0; id < 64; ++id) {
    const DirectedEdgeId d(id);
    CHECK(d.reversed().id() == (id ^ 1));
    CHECK(-(-d) == d);
    CHECK(d.undirected() == id / 2);
  }
  const EmbeddedGraph g = triangle();
  CHECK(g.tail(DirectedEdgeId(2)) == 1);
  CHECK(g.head(DirectedEdgeId(2)) == 2);
  CHECK(g.tail(DirectedEdgeId(3)) == 2);
  CHECK(g.head(DirectedEdgeId(3)) == 1);
}

TEST_CASE("construction rejects impossible drawings") {
  CHECK_THROWS_AS(EmbeddedGraph({{0, 0}, {1, 0}}, {{0, 0, 1.0}}), InvalidGraph);
  CHECK_THROWS_AS(EmbeddedGraph({{0, 0}, {1, 0}}, {{0, 1, 1.0}, {1, 0, 2.0}}), InvalidGraph);
  CHECK_THROWS_AS(EmbeddedGraph({{0, 0}, {1, 0}}, {{0, 2, 1.0}}), InvalidGraph);
  CHECK_THROWS_AS(EmbeddedGraph({{0, 0}, {1, 0}}, {{0, 1, std::nan("")}}), InvalidGraph);
}

TEST_CASE("validate_embedding") {
  SUBCASE("triangle embeds") { CHECK(validate_embedding(triangle()).ok); }

  SUBCASE("proper crossing") {
    const EmbeddedGraph g({{0, 0}, {2, 0}, {1, -1}, {1, 1}}, {{0, 1, 1.0}, {2, 3, 1.0}});
    const ValidationReport r = validate_embedding(g);
    CHECK_FALSE(r.ok);
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0] == Violation{ViolationKind::kCrossing, 0, 1});
  }

  SUBCASE("touching at a shared endpoint is fine") {
    const EmbeddedGraph g({{0, 0}, {1, 0}, {2, 0}}, {{0, 1, 1.0}, {1, 2, 1.0}});
    CHECK(validate_embedding(g).ok);
  }

  SUBCASE("collinear overlap from a shared endpoint") {
    const EmbeddedGraph g({{0, 0}, {2, 0}, {1, 0}}, {{0, 1, 1.0}, {0, 2, 1.0}});
    const ValidationReport r = validate_embedding(g);
    CHECK_FALSE(r.ok);
    CHECK(std::count(r.violations.begin(), r.violations.end(),
                     Violation{ViolationKind::kCrossing, 0, 1}) == 1);
    CHECK(std::count(r.violations.begin(), r.violations.end(),
                     Violation{ViolationKind::kVertexOnEdge, 0, 2}) == 1);
  }

  SUBCASE("T-junction: endpoint touching the interior of another edge") {
    const EmbeddedGraph g({{0, 0}, {2, 0}, {1, 0}, {1, 1}}, {{0, 1, 1.0}, {2, 3, 1.0}});
    const ValidationReport r = validate_embedding(g);
    CHECK_FALSE(r.ok);
    CHECK(r.violations.size() == 2);
  }

  SUBCASE("zero-length edge") {
    const EmbeddedGraph g({{0, 0}, {0, 0}}, {{0, 1, 1.0}});
    const ValidationReport r = validate_embedding(g);
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0].kind == ViolationKind::kZeroLength);
    CHECK_THROWS_AS(require_valid_embedding(g), InvalidGraph);
  }

  SUBCASE("isolated vertex lying on an edge") {
    const EmbeddedGraph g({{0, 0}, {2, 0}, {1, 0}}, {{0, 1, 1.0}});
    const ValidationReport r = validate_embedding(g);
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0] == Violation{ViolationKind::kVertexOnEdge, 0, 2});
  }

  SUBCASE("ok iff no violations, order independent") {
    std::mt19937_64 rng(7);
    for (const EmbeddedGraph& g : random_corpus(11, 30)) {
      CHECK(validate_embedding(g).ok);
      std::vector<Edge> edges = g.edges();
      std::shuffle(edges.begin(), edges.end(), rng);
      CHECK(validate_embedding(EmbeddedGraph(g.vertices(), edges)).ok);
    }
    // A crossing survives any edge permutation.
    const std::vector<Edge> edges{{0, 1, 1.0}, {2, 3, 1.0}, {0, 2, 1.0}};
    const std::vector<Point> pts{{0, 0}, {2, 0}, {1, -1}, {1, 1}};
    std::vector<int> order{0, 1, 2};
    do {
      std::vector<Edge> permuted;
      for (int i : order) permuted.push_back(edges[i]);
      CHECK(validate_embedding(EmbeddedGraph(pts, permuted)).violations.size() == 1);
    } while (std::next_permutation(order.begin(), order.end()));
  }
}

TEST_CASE("turning_angle") {
  const EmbeddedGraph g({{0, 0}, {1, 0}, {2, 0}, {1, 1}}, {{0, 1, 1}, {1, 2, 1}, {1, 3, 1}});
  const DirectedEdgeId e(0);  // (0,0) -> (1,0)
  CHECK(turning_angle(g, e, DirectedEdgeId(2)) == 0.0);
  CHECK(turning_angle(g, e, DirectedEdgeId(4)) == doctest::Approx(std::numbers::pi / 2));
  CHECK(turning_angle(g, e, DirectedEdgeId(1)) == std::numbers::pi);
  CHECK(turning_angle(g, DirectedEdgeId(4), DirectedEdgeId(2))  // straight up then right
        == doctest::Approx(-std::numbers::pi / 2));

  SUBCASE("antisymmetric under joint reversal, strictly inside (-pi, pi) without backtracking") {
    for (const EmbeddedGraph& h : random_corpus(3, 40)) {
      for (int a = 0; a < h.num_directed_edges(); ++a) {
        const DirectedEdgeId d(a);
        for (DirectedEdgeId f : h.out_edges(h.head(d))) {
          const double forward = turning_angle(h, d, f);
          if (f == -d) {
            CHECK(forward == std::numbers::pi);
            continue;
          }
          CHECK(forward == doctest::Approx(-turning_angle(h, -f, -d)).epsilon(1e-14));
          CHECK(std::abs(forward) < std::numbers::pi);
        }
      }
    }
  }

  SUBCASE("exact -pi maps to +pi") {
    // (-1, 0) followed by (1, 0): the cross product is -0 and atan2 gives -pi.
    const EmbeddedGraph h({{0, 0}, {1, 0}, {2, 0}}, {{0, 1, 1}, {1, 2, 1}});
    CHECK(turning_angle(h, DirectedEdgeId(3), DirectedEdgeId(2)) == std::numbers::pi);
  }
}

TEST_CASE("max_degree and components") {
  CHECK(max_degree(triangle()) == 2);
  CHECK(max_degree(kacward::testing::single_edge()) == 1);
  CHECK(max_degree(bowtie()) == 4);
  CHECK(max_degree(EmbeddedGraph({{0, 0}}, {})) == 0);
  CHECK(num_connected_components(bowtie()) == 1);
  CHECK(num_connected_components(disjoint_union(triangle(), bowtie(), {5, 0})) == 2);
}
