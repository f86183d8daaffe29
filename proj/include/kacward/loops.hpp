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

#include <complex>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "kacward/embedded_graph.hpp"
#include "kacward/kac_ward.hpp"

namespace kacward {

/// Non-backtracking walk (w_1, ..., w_{n+1}) of length n: consecutive directed
/// edges meet head-to-tail and never reverse. A loop is a walk of length > 1
/// whose first and last directed edges coincide.
struct Walk {
  std::vector<DirectedEdgeId> steps;

  int length() const { return steps.empty() ? 0 : static_cast<int>(steps.size()) - 1; }
  DirectedEdgeId first() const { return steps.front(); }
  DirectedEdgeId last() const { return steps.back(); }

  /// w_{k, l}, 1-based and inclusive.
  Walk slice(int k, int l) const;

  friend auto operator<=>(const Walk&, const Walk&) = default;
};

using Loop = Walk;

bool is_walk(const EmbeddedGraph& g, const Walk& w);
bool is_loop(const EmbeddedGraph& g, const Walk& w);

/// lambda = exp(i alpha / 2) * xweight. alpha is the summed turning angle and
/// xweight the product of x over w_1..w_n (the last edge is not weighted).
struct WalkWeight {
  std::complex<double> lambda{1.0, 0.0};
  double alpha = 0.0;
  double xweight = 1.0;
};

/// Throws std::invalid_argument if w is not a walk in g.
WalkWeight walk_weight(const EmbeddedGraph& g, const Walk& w);

/// w1 + w2 sharing the seam edge once. Throws std::invalid_argument on an
/// endpoint mismatch.
Walk concat(const Walk& w1, const Walk& w2);

/// (-w_{n+1}, ..., -w_1).
Walk reverse_walk(const Walk& w);

/// Largest m such that the loop is an m-fold concatenation of one loop.
int multiplicity(const Loop& l);

/// Number of appearances of each directed edge among l_1..l_n.
std::map<DirectedEdgeId, int> visit_counts(const Loop& l);
int visits(const Loop& l, DirectedEdgeId e);

/// Every vertex touched by l_1..l_n lies on exactly two of those edges.
bool is_self_avoiding(const EmbeddedGraph& g, const Loop& l);

inline constexpr int kMaxLoopLength = 16;

/// Depth-first, lexicographic enumeration of non-backtracking walks starting
/// at `start` with 0..max_len steps. Returns early if visit returns false.
void for_each_walk(const EmbeddedGraph& g, DirectedEdgeId start, int max_len,
                   const std::function<bool(const Walk&)>& visit);

/// Rooted loops of length 2..max_len, at `root` or at every directed edge in
/// increasing id order, each root's loops in lexicographic order.
void for_each_rooted_loop(const EmbeddedGraph& g, int max_len,
                          std::optional<DirectedEdgeId> root,
                          const std::function<void(const Loop&)>& visit);

std::vector<Loop> enumerate_rooted_loops(const EmbeddedGraph& g, int max_len,
                                         std::optional<DirectedEdgeId> root = std::nullopt);

/// sum_{n=1}^{max_n} tr(m^n) / n.
std::complex<double> truncated_trace_log_series(const TransitionMatrix& m, int max_n);

/// The loop series for g; throws std::domain_error outside the radius.
std::complex<double> truncated_loop_sum(const EmbeddedGraph& g, int max_n);

/// 2|E| max(1, |x|_inf) rho^(max_n+1) / (1 - rho), rho = (max_degree - 1) |x|_inf.
/// Infinite when rho >= 1.
double loop_tail_bound(const EmbeddedGraph& g, int max_n);

/// The weight-negating involution on loops visiting both e and -e: reverse
/// the stretch between the first visit of {e, -e} and the last visit of the
/// opposite orientation.
Loop specific_cancellation_involution(const EmbeddedGraph& g, const Loop& l, DirectedEdgeId e);

/// Splits a loop rooted at e that never visits -e into its excursions from e.
std::vector<Loop> decompose_at_root(const Loop& l, DirectedEdgeId e);

struct GenericCancellationReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;
  double bound = 0.0;
};

/// Compares exp(-w{loops visiting e, not -e}) with 1 - lambda(L^1_e), both
/// truncated at length max_n.
GenericCancellationReport verify_generic_cancellation(const EmbeddedGraph& g, DirectedEdgeId e,
                                                      int max_n);

}  // namespace kacward
