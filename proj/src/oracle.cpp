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

#include "kacward/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <queue>
#include <string>

#include "kacward/errors.hpp"

namespace kacward {

namespace {

std::uint64_t to_mask(const EdgeSet& s) {
  std::uint64_t mask = 0;
  for (auto k = s.find_first(); k != EdgeSet::npos; k = s.find_next(k)) {
    mask |= std::uint64_t{1} << k;
  }
  return mask;
}

}  // namespace

bool is_even_subgraph(const EmbeddedGraph& g, const EdgeSet& edges) {
  boost::dynamic_bitset<> parity(g.num_vertices());
  for (auto k = edges.find_first(); k != EdgeSet::npos; k = edges.find_next(k)) {
    parity.flip(g.edge(static_cast<int>(k)).u);
    parity.flip(g.edge(static_cast<int>(k)).v);
  }
  return parity.none();
}

double monomial(const EmbeddedGraph& g, const EdgeSet& edges) {
  double p = 1.0;
  for (auto k = edges.find_first(); k != EdgeSet::npos; k = edges.find_next(k)) {
    p *= g.weight(static_cast<int>(k));
  }
  return p;
}

std::vector<EvenSubgraph> enumerate_even_subgraphs_naive(const EmbeddedGraph& g) {
  const int m = g.num_edges();
  if (m > kMaxNaiveEdges) {
    throw CapacityError("too large for naive enumeration (" + std::to_string(m) +
                        " edges, cap " + std::to_string(kMaxNaiveEdges) + ")");
  }
  // Gray-code walk over all subsets, tracking vertex degree parities.
  std::vector<EvenSubgraph> out;
  boost::dynamic_bitset<> parity(g.num_vertices());
  EdgeSet current(m);
  const std::uint64_t total = std::uint64_t{1} << m;
  for (std::uint64_t step = 0; step < total; ++step) {
    if (step > 0) {
      const int k = std::countr_zero(step);
      current.flip(k);
      parity.flip(g.edge(k).u);
      parity.flip(g.edge(k).v);
    }
    if (parity.none()) out.push_back({current});
  }
  std::sort(out.begin(), out.end(), [](const EvenSubgraph& a, const EvenSubgraph& b) {
    return to_mask(a.edges) < to_mask(b.edges);
  });
  return out;
}

CycleBasis cycle_space_basis(const EmbeddedGraph& g) {
  const int n = g.num_vertices();
  const int m = g.num_edges();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };

  CycleBasis result;
  std::vector<int> chords;
  std::vector<std::vector<std::pair<int, int>>> forest(n);  // (neighbor, edge)
  for (int k = 0; k < m; ++k) {
    const Edge& e = g.edge(k);
    const int a = find(e.u);
    const int b = find(e.v);
    if (a == b) {
      chords.push_back(k);
      continue;
    }
    parent[a] = b;
    result.forest_edges.push_back(k);
    forest[e.u].emplace_back(e.v, k);
    forest[e.v].emplace_back(e.u, k);
  }

  for (int k : chords) {
    const Edge& e = g.edge(k);
    // Breadth-first search in the forest for the unique path e.u -> e.v.
    std::vector<int> via(n, -1);
    std::vector<bool> seen(n, false);
    std::queue<int> frontier;
    frontier.push(e.u);
    seen[e.u] = true;
    while (!frontier.empty() && !seen[e.v]) {
      const int v = frontier.front();
      frontier.pop();
      for (auto [w, edge] : forest[v]) {
        if (seen[w]) continue;
        seen[w] = true;
        via[w] = edge;
        frontier.push(w);
      }
    }
    EdgeSet cycle(m);
    cycle.set(k);
    for (int v = e.v; v != e.u;) {
      const int edge = via[v];
      cycle.set(edge);
      v = g.edge(edge).u == v ? g.edge(edge).v : g.edge(edge).u;
    }
    result.basis.push_back({cycle});
  }
  return result;
}

int cycle_space_dimension(const EmbeddedGraph& g) {
  return g.num_edges() - g.num_vertices() + num_connected_components(g);
}

namespace {

template <typename Visit>
void for_each_cycle_combination(const EmbeddedGraph& g, Visit&& visit) {
  const CycleBasis cb = cycle_space_basis(g);
  const int d = static_cast<int>(cb.basis.size());
  if (d > kMaxCycleSpaceDim) {
    throw CapacityError("cycle space too large (dimension " + std::to_string(d) + ", cap " +
                        std::to_string(kMaxCycleSpaceDim) + ")");
  }
  EdgeSet current(g.num_edges());
  const std::uint64_t total = std::uint64_t{1} << d;
  for (std::uint64_t step = 0; step < total; ++step) {
    if (step > 0) current ^= cb.basis[std::countr_zero(step)].edges;
    visit(current);
  }
}

}  // namespace

std::vector<EvenSubgraph> enumerate_even_subgraphs(const EmbeddedGraph& g) {
  std::vector<EvenSubgraph> out;
  for_each_cycle_combination(g, [&](const EdgeSet& h) { out.push_back({h}); });
  return out;
}

std::vector<double> even_subgraph_monomials(const EmbeddedGraph& g) {
  std::vector<double> out;
  for_each_cycle_combination(g, [&](const EdgeSet& h) { out.push_back(monomial(g, h)); });
  std::sort(out.begin(), out.end());
  return out;
}

double partition_function_oracle(const EmbeddedGraph& g) {
  double z = 0.0;
  for_each_cycle_combination(g, [&](const EdgeSet& h) { z += monomial(g, h); });
  return z;
}

double partition_function_naive(const EmbeddedGraph& g) {
  double z = 0.0;
  for (const EvenSubgraph& h : enumerate_even_subgraphs_naive(g)) z += monomial(g, h.edges);
  return z;
}

double ising_partition_spin_sum(const EmbeddedGraph& g, double beta,
                                std::span<const double> couplings) {
  const int n = g.num_vertices();
  if (n > kMaxSpins) {
    throw CapacityError("too many vertices for the spin sum (" + std::to_string(n) + ", cap " +
                        std::to_string(kMaxSpins) + ")");
  }
  if (couplings.size() != static_cast<std::size_t>(g.num_edges())) {
    throw std::invalid_argument("ising_partition_spin_sum: expected one coupling per edge");
  }
  double z = 0.0;
  const std::uint32_t total = std::uint32_t{1} << n;
  for (std::uint32_t config = 0; config < total; ++config) {
    double energy = 0.0;
    for (int k = 0; k < g.num_edges(); ++k) {
      const Edge& e = g.edge(k);
      const bool aligned = ((config >> e.u) & 1U) == ((config >> e.v) & 1U);
      energy += aligned ? couplings[k] : -couplings[k];
    }
    z += std::exp(beta * energy);
  }
  return z;
}

}  // namespace kacward
