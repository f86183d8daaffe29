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

#include "kacward/loops.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "kacward/errors.hpp"

namespace kacward {

Walk Walk::slice(int k, int l) const {
  if (k < 1 || l < k || l > static_cast<int>(steps.size())) {
    throw std::out_of_range("Walk::slice: bad range");
  }
  return Walk{{steps.begin() + (k - 1), steps.begin() + l}};
}

bool is_walk(const EmbeddedGraph& g, const Walk& w) {
  if (w.steps.empty()) return false;
  for (DirectedEdgeId d : w.steps) {
    if (d.id() < 0 || d.id() >= g.num_directed_edges()) return false;
  }
  for (std::size_t i = 0; i + 1 < w.steps.size(); ++i) {
    const DirectedEdgeId a = w.steps[i];
    const DirectedEdgeId b = w.steps[i + 1];
    if (g.head(a) != g.tail(b) || b == -a) return false;
  }
  return true;
}

bool is_loop(const EmbeddedGraph& g, const Walk& w) {
  return is_walk(g, w) && w.length() > 1 && w.first() == w.last();
}

WalkWeight walk_weight(const EmbeddedGraph& g, const Walk& w) {
  if (!is_walk(g, w)) throw std::invalid_argument("walk_weight: not a non-backtracking walk");
  WalkWeight out;
  for (std::size_t i = 0; i + 1 < w.steps.size(); ++i) {
    out.alpha += turning_angle(g, w.steps[i], w.steps[i + 1]);
    out.xweight *= g.weight(w.steps[i]);
  }
  out.lambda = std::polar(1.0, out.alpha / 2) * out.xweight;
  return out;
}

Walk concat(const Walk& w1, const Walk& w2) {
  if (w1.steps.empty() || w2.steps.empty() || w1.last() != w2.first()) {
    throw std::invalid_argument("concat: last edge of the first walk must start the second");
  }
  Walk out = w1;
  out.steps.insert(out.steps.end(), w2.steps.begin() + 1, w2.steps.end());
  return out;
}

Walk reverse_walk(const Walk& w) {
  Walk out;
  out.steps.reserve(w.steps.size());
  for (auto it = w.steps.rbegin(); it != w.steps.rend(); ++it) out.steps.push_back(-*it);
  return out;
}

int multiplicity(const Loop& l) {
  const int n = l.length();
  for (int period = 1; period <= n; ++period) {
    if (n % period != 0) continue;
    bool repeats = true;
    for (int i = period; i < n && repeats; ++i) repeats = l.steps[i] == l.steps[i - period];
    if (repeats) return n / period;
  }
  return 1;
}

std::map<DirectedEdgeId, int> visit_counts(const Loop& l) {
  std::map<DirectedEdgeId, int> counts;
  for (int i = 0; i < l.length(); ++i) ++counts[l.steps[i]];
  return counts;
}

int visits(const Loop& l, DirectedEdgeId e) {
  return static_cast<int>(std::count(l.steps.begin(), l.steps.begin() + l.length(), e));
}

bool is_self_avoiding(const EmbeddedGraph& g, const Loop& l) {
  std::map<int, int> touches;
  for (int i = 0; i < l.length(); ++i) {
    ++touches[g.tail(l.steps[i])];
    ++touches[g.head(l.steps[i])];
  }
  return std::all_of(touches.begin(), touches.end(), [](const auto& kv) { return kv.second == 2; });
}

namespace {

void require_length_cap(int max_len) {
  if (max_len > kMaxLoopLength) {
    throw CapacityError("loop length " + std::to_string(max_len) + " exceeds the cap of " +
                        std::to_string(kMaxLoopLength));
  }
}

// Returns false to abort the whole enumeration.
bool extend(const EmbeddedGraph& g, Walk& w, int max_len,
            const std::function<bool(const Walk&)>& visit) {
  if (!visit(w)) return false;
  if (w.length() >= max_len) return true;
  const DirectedEdgeId last = w.last();
  for (DirectedEdgeId next : g.out_edges(g.head(last))) {
    if (next == -last) continue;
    w.steps.push_back(next);
    const bool go_on = extend(g, w, max_len, visit);
    w.steps.pop_back();
    if (!go_on) return false;
  }
  return true;
}

}  // namespace

void for_each_walk(const EmbeddedGraph& g, DirectedEdgeId start, int max_len,
                   const std::function<bool(const Walk&)>& visit) {
  require_length_cap(max_len);
  Walk w{{start}};
  extend(g, w, max_len, visit);
}

void for_each_rooted_loop(const EmbeddedGraph& g, int max_len,
                          std::optional<DirectedEdgeId> root,
                          const std::function<void(const Loop&)>& visit) {
  require_length_cap(max_len);
  auto scan = [&](DirectedEdgeId r) {
    Walk w{{r}};
    extend(g, w, max_len, [&](const Walk& walk) {
      if (walk.length() > 1 && walk.last() == r) visit(walk);
      return true;
    });
  };
  if (root) {
    scan(*root);
    return;
  }
  for (int id = 0; id < g.num_directed_edges(); ++id) scan(DirectedEdgeId(id));
}

std::vector<Loop> enumerate_rooted_loops(const EmbeddedGraph& g, int max_len,
                                         std::optional<DirectedEdgeId> root) {
  std::vector<Loop> out;
  for_each_rooted_loop(g, max_len, root, [&](const Loop& l) { out.push_back(l); });
  return out;
}

std::complex<double> truncated_trace_log_series(const TransitionMatrix& m, int max_n) {
  std::complex<double> sum = 0.0;
  if (m.rows() == 0) return sum;
  TransitionMatrix power = m;
  for (int n = 1; n <= max_n; ++n) {
    if (n > 1) power = (power * m).eval();
    sum += power.trace() / static_cast<double>(n);
  }
  return sum;
}

std::complex<double> truncated_loop_sum(const EmbeddedGraph& g, int max_n) {
  if (!check_convergence_radius(g)) {
    throw std::domain_error("loop series: weights outside the convergence radius");
  }
  return truncated_trace_log_series(build_transition_matrix(g), max_n);
}

double loop_tail_bound(const EmbeddedGraph& g, int max_n) {
  const double rho = loop_series_ratio(g);
  if (rho >= 1.0) return std::numeric_limits<double>::infinity();
  const double c = 2.0 * g.num_edges() * std::max(1.0, max_abs_weight(g));
  return c * std::pow(rho, max_n + 1) / (1.0 - rho);
}

Loop specific_cancellation_involution(const EmbeddedGraph& g, const Loop& l, DirectedEdgeId e) {
  if (!is_loop(g, l) || visits(l, e) == 0 || visits(l, -e) == 0) {
    throw std::invalid_argument("involution: loop must visit both e and -e");
  }
  const auto& s = l.steps;
  const int n = l.length();
  int first = 0;
  while (s[first] != e && s[first] != -e) ++first;
  const DirectedEdgeId opposite = -s[first];
  int last = n;
  while (s[last] != opposite) --last;

  Loop out;
  out.steps.assign(s.begin(), s.begin() + first);
  for (int i = last; i >= first; --i) out.steps.push_back(-s[i]);
  out.steps.insert(out.steps.end(), s.begin() + last + 1, s.end());
  if (!is_loop(g, out) || out.length() != n) {
    throw std::logic_error("involution produced an invalid loop");
  }
  return out;
}

std::vector<Loop> decompose_at_root(const Loop& l, DirectedEdgeId e) {
  const int n = l.length();
  if (n < 2 || l.first() != e || l.last() != e || visits(l, -e) != 0) {
    throw std::invalid_argument("decompose_at_root: loop must be rooted at e and avoid -e");
  }
  std::vector<Loop> factors;
  int start = 0;
  for (int i = 1; i <= n; ++i) {
    if (l.steps[i] != e) continue;
    factors.push_back(Loop{{l.steps.begin() + start, l.steps.begin() + i + 1}});
    start = i;
  }
  return factors;
}

GenericCancellationReport verify_generic_cancellation(const EmbeddedGraph& g, DirectedEdgeId e,
                                                      int max_n) {
  if (loop_series_ratio(g) >= 1.0) {
    throw std::domain_error("generic cancellation: weights outside the convergence radius");
  }
  std::complex<double> measure = 0.0;
  for_each_rooted_loop(g, max_n, std::nullopt, [&](const Loop& l) {
    if (visits(l, e) > 0 && visits(l, -e) == 0) {
      measure += walk_weight(g, l).lambda / static_cast<double>(l.length());
    }
  });
  std::complex<double> first_returns = 0.0;
  for_each_rooted_loop(g, max_n, e, [&](const Loop& l) {
    if (visits(l, e) == 1 && visits(l, -e) == 0) first_returns += walk_weight(g, l).lambda;
  });

  GenericCancellationReport r;
  r.lhs = std::exp(-measure).real();
  r.rhs = (1.0 - first_returns).real();
  r.gap = std::abs(std::exp(-measure) - (1.0 - first_returns));
  r.bound = loop_tail_bound(g, max_n);
  return r;
}

}  // namespace kacward
