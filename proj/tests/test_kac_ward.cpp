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

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "kacward/kac_ward.hpp"
#include "kacward/lattices.hpp"
#include "kacward/oracle.hpp"
#include "support/fixtures.hpp"

using namespace kacward;
namespace fx = kacward::testing;

TEST_CASE("transition matrix entries") {
  SUBCASE("single edge: the only candidate transition is the reversal") {
    const TransitionMatrix m = build_transition_matrix(fx::single_edge(0.7));
    CHECK(m.rows() == 2);
    CHECK(m.isZero(0.0));
  }

  SUBCASE("left turn carries exp(i pi / 4)") {
    const TransitionMatrix m = build_transition_matrix(fx::path3(1.0));
    const std::complex<double> entry = m(0, 2);
    CHECK(entry.real() == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
    CHECK(entry.imag() == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
    // The reverse traversal turns right.
    CHECK(std::abs(m(3, 1) - std::polar(1.0, -std::numbers::pi / 4)) < 1e-15);
  }

  SUBCASE("support and modulus") {
    for (const EmbeddedGraph& g : fx::random_corpus(21, 25)) {
      const TransitionMatrix m = build_transition_matrix(g);
      long expected = 0;
      for (int v = 0; v < g.num_vertices(); ++v) expected += g.degree(v) * (g.degree(v) - 1);
      long nonzero = 0;
      for (int a = 0; a < m.rows(); ++a) {
        int row = 0;
        for (int b = 0; b < m.cols(); ++b) {
          if (m(a, b) == 0.0) continue;
          ++nonzero;
          ++row;
          const DirectedEdgeId e(a), f(b);
          CHECK(g.head(e) == g.tail(f));
          CHECK(f != -e);
          CHECK(std::abs(m(a, b)) == doctest::Approx(std::abs(g.weight(e))).epsilon(1e-15));
        }
        CHECK(row <= g.degree(g.head(DirectedEdgeId(a))) - 1);
      }
      CHECK(nonzero == expected);
    }
  }

  SUBCASE("invalid embedding is refused") {
    const EmbeddedGraph g({{0, 0}, {2, 0}, {1, -1}, {1, 1}}, {{0, 1, 1.0}, {2, 3, 1.0}});
    CHECK_THROWS_AS(build_transition_matrix(g), InvalidGraph);
  }
}

TEST_CASE("kac_ward_determinant on small graphs") {
  CHECK(kac_ward_determinant(fx::single_edge(3.0)).det == std::complex<double>(1.0, 0.0));
  // Z = 1 + abc = 1.125 by enumeration.
  CHECK(std::abs(kac_ward_determinant(fx::triangle()).det - 1.265625) < 1e-12);
  // Z = 1 + t^4 = 1.0625.
  CHECK(std::abs(kac_ward_determinant(fx::four_cycle()).det - 1.12890625) < 1e-12);

  const DetResult<double> d = kac_ward_determinant(fx::triangle());
  CHECK(d.log_abs_det == doctest::Approx(0.235566071312766909).epsilon(1e-14));
  CHECK(std::abs(std::polar(std::exp(d.log_abs_det), d.phase) - d.det) <= 1e-12 * std::abs(d.det));
}

TEST_CASE("zero weights give det exactly 1") {
  for (const EmbeddedGraph& g : fx::random_corpus(4, 10)) {
    CHECK(kac_ward_determinant(g.with_uniform_weight(0.0)).det == std::complex<double>(1.0, 0.0));
  }
}

TEST_CASE("partition_function_kw") {
  CHECK(partition_function_kw(fx::path3(0.9)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(partition_function_kw(fx::triangle()) == doctest::Approx(1.125).epsilon(1e-13));
  CHECK(partition_function_kw(fx::bowtie()) == doctest::Approx(1.265625).epsilon(1e-13));
  CHECK(partition_function_kw(fx::triangle(0.2, 0.3, 0.5)) == doctest::Approx(1.03).epsilon(1e-13));
}

TEST_CASE("partition_function_from_det rejects non-real determinants") {
  CHECK_THROWS_AS(partition_function_from_det(DetResult<double>{{1.0, 0.1}, 0.0, 0.1}),
                  NumericalError);
  CHECK_THROWS_AS(partition_function_from_det(DetResult<double>{{-0.5, 0.0}, std::log(0.5),
                                                                std::numbers::pi}),
                  NumericalError);
  CHECK(partition_function_from_det(DetResult<double>{{-1e-12, 0.0}, 0.0, 0.0}) == 0.0);
}

TEST_CASE("singular factorization reports a zero determinant") {
  // Id - m = 0 exactly.
  const TransitionMatrix m = TransitionMatrix::Identity(3, 3);
  CHECK_THROWS_WITH_AS(determinant_of_identity_minus(m), "determinant is zero", NumericalError);
}

TEST_CASE("determinant properties on the random corpus") {
  std::mt19937_64 rng(99);
  for (const EmbeddedGraph& base : fx::random_corpus(17, 60)) {
    const EmbeddedGraph g = fx::with_random_weights(base, rng, -1.0, 1.0);
    const DetResult<double> d = kac_ward_determinant(g);
    const double scale = std::max(1.0, std::abs(d.det));
    CHECK(std::abs(d.det.imag()) <= 1e-10 * scale);
    CHECK(d.det.real() >= -1e-10 * scale);
    const double z = partition_function_oracle(g);
    CHECK(std::abs(d.det - z * z) <= 1e-9 * std::max(1.0, z * z));
  }
}

TEST_CASE("square root of det is affine in each weight") {
  for (const EmbeddedGraph& g : fx::random_corpus(23, 15)) {
    std::vector<double> w = g.weights();
    for (int k = 0; k < g.num_edges(); ++k) {
      auto at = [&](double t) {
        std::vector<double> v = w;
        v[k] = t;
        return partition_function_kw(g.with_weights(v));
      };
      CHECK(std::abs(at(0.5) - 0.5 * (at(0.0) + at(1.0))) <= 1e-9);
    }
  }
}

TEST_CASE("disjoint union multiplies determinants") {
  const EmbeddedGraph a = fx::bowtie(0.4);
  const EmbeddedGraph b = gen_square(2, 2, 0.3);
  const auto da = kac_ward_determinant(a).det;
  const auto db = kac_ward_determinant(b).det;
  const auto dab = kac_ward_determinant(disjoint_union(a, b, {10, 0})).det;
  CHECK(std::abs(dab - da * db) <= 1e-10 * std::abs(da * db));
}

TEST_CASE("long double instantiation agrees with double") {
  const EmbeddedGraph g = gen_square(3, 2, 0.45);
  const auto d = kac_ward_determinant<double>(g);
  const auto q = kac_ward_determinant<long double>(g);
  CHECK(std::abs(static_cast<double>(q.det.real()) - d.det.real()) <= 1e-13 * std::abs(d.det));
  CHECK(static_cast<double>(q.log_abs_det) == doctest::Approx(d.log_abs_det).epsilon(1e-13));
}

TEST_CASE("log-magnitude survives determinant overflow") {
  const TransitionMatrix m = TransitionMatrix::Identity(4, 4) * std::complex<double>(-1e200, 0.0);
  const DetResult<double> d = determinant_of_identity_minus(m);
  CHECK(std::isinf(std::abs(d.det)));
  CHECK(d.log_abs_det == doctest::Approx(4 * std::log(1e200)).epsilon(1e-14));
  CHECK(d.phase == 0.0);
  CHECK(std::isinf(partition_function_from_det(d)));
}

TEST_CASE("check_convergence_radius") {
  CHECK(check_convergence_radius(gen_hex(2, 2, 0.4)));
  CHECK_FALSE(check_convergence_radius(gen_hex(2, 2, 0.6)));
  CHECK(check_convergence_radius(fx::single_edge(100.0)));
  CHECK_FALSE(check_convergence_radius(fx::bowtie(1.0 / 3.0)));
}
