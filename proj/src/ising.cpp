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

#include "kacward/ising.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "kacward/kac_ward.hpp"

namespace kacward {

IsingInstance IsingInstance::uniform(EmbeddedGraph graph, double beta, double coupling) {
  std::vector<double> j(graph.num_edges(), coupling);
  return {std::move(graph), beta, std::move(j)};
}

double log_cosh(double a) {
  const double t = std::abs(a);
  return t + std::log1p(std::exp(-2.0 * t)) - std::numbers::ln2;
}

EvenWeights ising_to_even_weights(const IsingInstance& inst) {
  const EmbeddedGraph& g = inst.graph;
  if (!std::isfinite(inst.beta)) throw std::invalid_argument("beta must be finite");
  if (inst.couplings.size() != static_cast<std::size_t>(g.num_edges())) {
    throw std::invalid_argument("expected one coupling per edge");
  }
  // tanh saturates to +-1 in double precision once |beta J| > ~19; clamp to
  // the largest double below 1 so that |x| < 1 still holds.
  const double below_one = std::nextafter(1.0, 0.0);
  std::vector<double> x(g.num_edges());
  double log_pre = g.num_vertices() * std::numbers::ln2;
  for (int k = 0; k < g.num_edges(); ++k) {
    const double bj = inst.beta * inst.couplings[k];
    if (!std::isfinite(bj)) throw std::invalid_argument("coupling must be finite");
    x[k] = std::clamp(std::tanh(bj), -below_one, below_one);
    log_pre += log_cosh(bj);
  }
  return {g.with_weights(x), std::exp(log_pre), log_pre};
}

IsingResult ising_partition_kw(const IsingInstance& inst) {
  const EvenWeights ew = ising_to_even_weights(inst);
  const DetResult<double> det = kac_ward_determinant(ew.graph);
  const double z_even = partition_function_from_det(det);
  return {ew.prefactor * z_even, ew.log_prefactor + 0.5 * det.log_abs_det};
}

}  // namespace kacward
