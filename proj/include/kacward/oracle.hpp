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
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "kacward/embedded_graph.hpp"

namespace kacward {

// Brute-force references for the even-subgraph generating function and the
// Ising partition function. Every routine here has a hard size cap and throws
// CapacityError instead of running away.

inline constexpr int kMaxNaiveEdges = 24;
inline constexpr int kMaxCycleSpaceDim = 30;
inline constexpr int kMaxSpins = 20;

using EdgeSet = boost::dynamic_bitset<>;

/// A set of edges in which every vertex has even degree.
struct EvenSubgraph {
  EdgeSet edges;

  friend bool operator==(const EvenSubgraph&, const EvenSubgraph&) = default;
};

bool is_even_subgraph(const EmbeddedGraph& g, const EdgeSet& edges);

/// prod_{e in H} x_e, multiplied in increasing edge order.
double monomial(const EmbeddedGraph& g, const EdgeSet& edges);

/// Scans all 2^|E| edge subsets. Result is sorted by subset bit pattern.
std::vector<EvenSubgraph> enumerate_even_subgraphs_naive(const EmbeddedGraph& g);

/// Fundamental cycles of the spanning forest that takes edges greedily in
/// index order.
struct CycleBasis {
  std::vector<EvenSubgraph> basis;
  std::vector<int> forest_edges;
};

CycleBasis cycle_space_basis(const EmbeddedGraph& g);

int cycle_space_dimension(const EmbeddedGraph& g);

/// Every even subgraph, as the 2^d XOR-combinations of the cycle basis in
/// Gray-code order.
std::vector<EvenSubgraph> enumerate_even_subgraphs(const EmbeddedGraph& g);

/// Monomials of Z (one per even subgraph), sorted ascending.
std::vector<double> even_subgraph_monomials(const EmbeddedGraph& g);

/// Z = sum over even subgraphs H of prod_{e in H} x_e, by cycle-space scan.
double partition_function_oracle(const EmbeddedGraph& g);

/// Z computed from enumerate_even_subgraphs_naive.
double partition_function_naive(const EmbeddedGraph& g);

/// sum over sigma in {-1,+1}^V of exp(beta * sum_e J_e sigma_u sigma_v).
double ising_partition_spin_sum(const EmbeddedGraph& g, double beta,
                                std::span<const double> couplings);

}  // namespace kacward
