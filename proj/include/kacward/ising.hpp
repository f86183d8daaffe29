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

#include <vector>

#include "kacward/embedded_graph.hpp"

namespace kacward {

/// Zero-field Ising model on the vertices of a drawn graph. The graph's own
/// weights are ignored; couplings holds J per edge.
struct IsingInstance {
  EmbeddedGraph graph;
  double beta = 0.0;
  std::vector<double> couplings;

  static IsingInstance uniform(EmbeddedGraph graph, double beta, double coupling);
};

/// High-temperature expansion: Z_Ising = prefactor * Z(x = tanh(beta J)) with
/// prefactor = 2^|V| prod_e cosh(beta J_e).
struct EvenWeights {
  EmbeddedGraph graph;
  double prefactor = 1.0;
  double log_prefactor = 0.0;
};

EvenWeights ising_to_even_weights(const IsingInstance& inst);

struct IsingResult {
  double z = 0.0;      // may be +inf for large lattices
  double log_z = 0.0;  // always finite
};

IsingResult ising_partition_kw(const IsingInstance& inst);

/// log(cosh(a)) without overflow.
double log_cosh(double a);

}  // namespace kacward
