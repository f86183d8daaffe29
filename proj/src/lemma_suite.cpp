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

#include "kacward/lemma_suite.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <map>
#include <numbers>
#include <sstream>

#include "kacward/decoration.hpp"
#include "kacward/errors.hpp"
#include "kacward/kac_ward.hpp"
#include "kacward/loops.hpp"
#include "kacward/oracle.hpp"

namespace kacward {

namespace {

constexpr double kWeightTol = 1e-12;
constexpr double kTraceTol = 1e-11;
constexpr double kOracleTol = 1e-9;
constexpr double kRealityTol = 1e-10;
constexpr double kLoopExpansionTol = 1e-10;
constexpr int kLoopExpansionTerms = 20;
constexpr int kTraceMaxLength = 8;
constexpr int kLiftMaxLength = 8;

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

// Accumulates the worst residual of a check and remembers its first failure.
class Check {
 public:
  explicit Check(std::string name) { result_.name = std::move(name); }

  void observe(double residual, double tolerance, const std::string& where) {
    worst_ = std::max(worst_, residual);
    if (!(residual <= tolerance)) fail(where + " residual=" + sci(residual));
  }

  void require(bool ok, const std::string& where) {
    if (!ok) fail(where);
  }

  void note(std::string detail) { extra_ = std::move(detail); }

  CheckResult finish() {
    if (result_.detail.empty()) {
      result_.detail = extra_.empty() ? "max residual " + sci(worst_) : extra_;
    }
    return result_;
  }

  static CheckResult skipped(std::string name, std::string why) {
    return {std::move(name), CheckStatus::kSkipped, std::move(why), {}};
  }

 private:
  void fail(const std::string& where) {
    if (result_.status == CheckStatus::kFail) return;
    result_.status = CheckStatus::kFail;
    result_.counterexample = where;
  }

  CheckResult result_;
  double worst_ = 0.0;
  std::string extra_;
};

std::string at(DirectedEdgeId e, int length) {
  return "edge=" + std::to_string(e.id()) + " length=" + std::to_string(length);
}

double relative_gap(std::complex<double> a, std::complex<double> b) {
  return std::abs(a - b) / std::max(1.0, std::abs(b));
}

TransitionMatrix suite_matrix(const EmbeddedGraph& g, bool corrupt) {
  TransitionMatrix m = build_transition_matrix(g);
  if (corrupt) {
    for (Eigen::Index i = 0; i < m.size(); ++i) {
      if (m.data()[i] != 0.0) {
        m.data()[i] *= 2.0;
        break;
      }
    }
  }
  return m;
}

CheckResult check_kac_ward_vs_oracle(const EmbeddedGraph& g, const DetResult<double>& det) {
  if (cycle_space_dimension(g) > kMaxCycleSpaceDim) {
    return Check::skipped("kac_ward_vs_oracle", "cycle space too large for the oracle");
  }
  Check c("kac_ward_vs_oracle");
  const double z = partition_function_oracle(g);
  c.observe(relative_gap(det.det, z * z), kOracleTol, "whole graph");
  return c.finish();
}

CheckResult check_reality(const DetResult<double>& det) {
  Check c("determinant_real_nonnegative");
  const double scale = std::max(1.0, std::abs(det.det));
  c.observe(std::abs(det.det.imag()) / scale, kRealityTol, "Im det");
  c.observe(std::max(0.0, -det.det.real()) / scale, kRealityTol, "Re det < 0");
  return c.finish();
}

// Properties (i) and (ii) over every walk of length <= max_len.
std::vector<CheckResult> check_walk_properties(const EmbeddedGraph& g, int max_len) {
  Check mult("multiplicativity");
  Check reversal("reversal_walk_e_to_minus_e");
  for (int id = 0; id < g.num_directed_edges(); ++id) {
    for_each_walk(g, DirectedEdgeId(id), max_len, [&](const Walk& w) {
      const int n = w.length();
      if (n == 0) return true;
      const WalkWeight full = walk_weight(g, w);
      for (int k = 2; k <= n; ++k) {
        const std::complex<double> split =
            walk_weight(g, w.slice(1, k)).lambda * walk_weight(g, w.slice(k, n + 1)).lambda;
        mult.observe(std::abs(split - full.lambda), kWeightTol, at(w.first(), n));
      }
      if (w.last() == -w.first()) {
        const WalkWeight rev = walk_weight(g, reverse_walk(w));
        reversal.observe(std::abs(full.lambda.real()), kWeightTol, at(w.first(), n) + " Re");
        reversal.observe(std::abs(full.lambda + rev.lambda), kWeightTol,
                         at(w.first(), n) + " inverse");
        reversal.observe(std::abs(std::abs(full.lambda) - std::abs(full.xweight)), kWeightTol,
                         at(w.first(), n) + " modulus");
      }
      return true;
    });
  }
  return {mult.finish(), reversal.finish()};
}

struct EnumeratedLoop {
  Loop loop;
  WalkWeight weight;
};

std::vector<CheckResult> check_loop_properties(const EmbeddedGraph& g,
                                               const std::vector<EnumeratedLoop>& loops) {
  Check real("loop_weight_real");
  Check sa("self_avoiding_weight");
  Check mult("multiplicity_divides_visits");
  int self_avoiding = 0;
  for (const auto& [l, w] : loops) {
    const std::string where = at(l.first(), l.length());
    real.observe(std::abs(w.lambda.imag()), kWeightTol, where + " Im");
    real.observe(std::abs(std::abs(w.lambda) - std::abs(w.xweight)), kWeightTol,
                 where + " modulus");
    real.observe(std::abs(walk_weight(g, reverse_walk(l)).lambda - w.lambda), kWeightTol,
                 where + " inverse");
    if (is_self_avoiding(g, l)) {
      ++self_avoiding;
      sa.observe(std::abs(w.lambda + w.xweight), kWeightTol, where);
      sa.observe(std::abs(std::abs(w.alpha) - 2 * std::numbers::pi), 1e-9, where + " alpha");
    }
    const int m = multiplicity(l);
    for (const auto& [edge, count] : visit_counts(l)) {
      mult.require(count % m == 0, where + " visits of " + std::to_string(edge.id()));
    }
  }
  sa.note(std::to_string(self_avoiding) + " self-avoiding loops");
  return {real.finish(), sa.finish(), mult.finish()};
}

CheckResult check_trace_identity(const TransitionMatrix& m, const std::vector<EnumeratedLoop>& loops,
                                 int max_len) {
  Check c("trace_loop_identity");
  const int top = std::min(max_len, kTraceMaxLength);
  std::vector<std::complex<double>> by_length(top + 1, 0.0);
  for (const auto& [l, w] : loops) {
    if (l.length() <= top) by_length[l.length()] += w.lambda;
  }
  TransitionMatrix power = TransitionMatrix::Identity(m.rows(), m.cols());
  for (int n = 1; n <= top; ++n) {
    power = (power * m).eval();
    c.observe(std::abs(power.trace() - by_length[n]), kTraceTol, "length=" + std::to_string(n));
  }
  return c.finish();
}

CheckResult check_loop_expansion(const EmbeddedGraph& g, const TransitionMatrix& m,
                                 const DetResult<double>& det) {
  if (!check_convergence_radius(g)) {
    return Check::skipped("loop_expansion", "weights outside the convergence radius");
  }
  Check c("loop_expansion");
  const std::complex<double> series = truncated_trace_log_series(m, kLoopExpansionTerms);
  const std::complex<double> log_det(det.log_abs_det, det.phase);
  const double tol = std::max(kLoopExpansionTol, loop_tail_bound(g, kLoopExpansionTerms));
  c.observe(std::abs(series + log_det), tol, "terms=" + std::to_string(kLoopExpansionTerms));
  return c.finish();
}

std::vector<CheckResult> check_specific_cancellations(const EmbeddedGraph& g,
                                                      const std::vector<EnumeratedLoop>& loops,
                                                      int max_len) {
  Check sum("specific_cancellation");
  Check inv("specific_involution");
  int pairs = 0;
  const int m = g.num_directed_edges();
  std::vector<std::complex<double>> total(m * (max_len + 1), 0.0);
  std::vector<double> mass(m * (max_len + 1), 0.0);
  for (const auto& [l, w] : loops) {
    const auto counts = visit_counts(l);
    for (const auto& [e, k] : counts) {
      if (!counts.contains(-e)) continue;
      const int slot = e.id() * (max_len + 1) + l.length();
      total[slot] += w.lambda;
      mass[slot] += std::abs(w.lambda);

      ++pairs;
      const std::string where = at(e, l.length());
      const Loop image = specific_cancellation_involution(g, l, e);
      const WalkWeight iw = walk_weight(g, image);
      inv.require(image != l, where + " fixed point");
      inv.require(image.length() == l.length(), where + " length changed");
      inv.require(visits(image, e) > 0 && visits(image, -e) > 0, where + " left the set");
      inv.require(specific_cancellation_involution(g, image, e) == l, where + " not an involution");
      inv.observe(std::abs(iw.lambda + w.lambda), kWeightTol, where + " weight");
      inv.observe(std::abs(iw.xweight - w.xweight), kWeightTol, where + " x");
    }
  }
  for (int id = 0; id < m; ++id) {
    for (int n = 2; n <= max_len; ++n) {
      const int slot = id * (max_len + 1) + n;
      sum.observe(std::abs(total[slot]) / std::max(1.0, mass[slot]), kWeightTol,
                  at(DirectedEdgeId(id), n));
    }
  }
  inv.note(std::to_string(pairs) + " (loop, edge) pairs");
  return {sum.finish(), inv.finish()};
}

CheckResult check_root_decomposition(const EmbeddedGraph& g,
                                     const std::vector<EnumeratedLoop>& loops) {
  Check c("root_decomposition");
  for (const auto& [l, w] : loops) {
    const DirectedEdgeId e = l.first();
    if (visits(l, -e) > 0) continue;
    const std::string where = at(e, l.length());
    const std::vector<Loop> parts = decompose_at_root(l, e);
    c.require(static_cast<int>(parts.size()) == visits(l, e), where + " factor count");
    Loop rebuilt = parts.front();
    std::complex<double> product = 1.0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      c.require(is_loop(g, parts[i]) && visits(parts[i], e) == 1 && visits(parts[i], -e) == 0,
                where + " factor outside the first-return set");
      if (i > 0) rebuilt = concat(rebuilt, parts[i]);
      product *= walk_weight(g, parts[i]).lambda;
    }
    c.require(rebuilt == l, where + " factors do not reassemble");
    c.observe(std::abs(product - w.lambda), kWeightTol, where);
  }
  return c.finish();
}

CheckResult check_generic_cancellations(const EmbeddedGraph& g, int max_len) {
  if (loop_series_ratio(g) >= 1.0) {
    return Check::skipped("generic_cancellation", "(max_degree - 1) * |x|_inf >= 1");
  }
  Check c("generic_cancellation");
  for (int id = 0; id < g.num_directed_edges(); ++id) {
    const GenericCancellationReport r = verify_generic_cancellation(g, DirectedEdgeId(id), max_len);
    c.observe(r.gap, r.bound, at(DirectedEdgeId(id), max_len));
  }
  return c.finish();
}

CheckResult check_decoration(const EmbeddedGraph& g, const DetResult<double>& det, int max_len) {
  if (max_degree(g) <= 3) return Check::skipped("decoration", "graph is already trivalent");
  Check c("decoration");
  const Decoration d = decorate(g);
  c.require(validate_embedding(d.decorated).ok, "decorated embedding invalid");
  c.require(max_degree(d.decorated) <= 3, "decorated graph not trivalent");
  if (cycle_space_dimension(d.decorated) <= kMaxCycleSpaceDim) {
    c.require(even_subgraph_monomials(g) == even_subgraph_monomials(d.decorated),
              "monomial multisets differ");
    const double z = partition_function_oracle(g);
    const double zd = partition_function_oracle(d.decorated);
    c.observe(std::abs(z - zd) / std::max(1.0, std::abs(z)), 1e-12, "oracle Z");
  }
  const DetResult<double> det_d = kac_ward_determinant(d.decorated);
  c.observe(relative_gap(det_d.det, det.det), kOracleTol, "determinant");
  for_each_rooted_loop(g, std::min(max_len, kLiftMaxLength), std::nullopt, [&](const Loop& l) {
    const Loop lifted = lift_loop(d, g, l);
    c.require(is_loop(d.decorated, lifted), at(l.first(), l.length()) + " lift invalid");
    const WalkWeight a = walk_weight(g, l);
    const WalkWeight b = walk_weight(d.decorated, lifted);
    c.observe(std::abs(a.lambda - b.lambda), kTraceTol, at(l.first(), l.length()) + " lift");
  });
  return c.finish();
}

}  // namespace

std::vector<CheckResult> run_lemma_suite(const EmbeddedGraph& g, const SuiteOptions& options) {
  require_valid_embedding(g);
  const int max_len = options.max_loop_len;
  if (max_len < 2 || max_len > kMaxLoopLength) {
    throw CapacityError("max loop length must lie in [2, " + std::to_string(kMaxLoopLength) + "]");
  }

  const TransitionMatrix m = suite_matrix(g, options.corrupt_transition_matrix);
  const DetResult<double> det = determinant_of_identity_minus(m);

  std::vector<EnumeratedLoop> loops;
  for_each_rooted_loop(g, max_len, std::nullopt,
                       [&](const Loop& l) { loops.push_back({l, walk_weight(g, l)}); });

  std::vector<CheckResult> out;
  auto append = [&](std::vector<CheckResult> more) {
    out.insert(out.end(), more.begin(), more.end());
  };
  out.push_back(check_kac_ward_vs_oracle(g, det));
  out.push_back(check_reality(det));
  append(check_walk_properties(g, max_len));
  append(check_loop_properties(g, loops));
  out.push_back(check_trace_identity(m, loops, max_len));
  out.push_back(check_loop_expansion(g, m, det));
  append(check_specific_cancellations(g, loops, max_len));
  out.push_back(check_root_decomposition(g, loops));
  out.push_back(check_generic_cancellations(g, max_len));
  out.push_back(check_decoration(g, kac_ward_determinant(g), max_len));
  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::none_of(results.begin(), results.end(),
                      [](const CheckResult& r) { return r.status == CheckStatus::kFail; });
}

std::string format_suite_table(const std::vector<CheckResult>& results) {
  std::size_t width = 5;
  for (const auto& r : results) width = std::max(width, r.name.size());
  std::ostringstream out;
  for (const auto& r : results) {
    const char* status = r.status == CheckStatus::kPass   ? "PASS"
                         : r.status == CheckStatus::kFail ? "FAIL"
                                                          : "SKIP";
    out << r.name << std::string(width - r.name.size() + 2, ' ') << status << "  " << r.detail;
    if (r.status == CheckStatus::kFail) out << "  [" << r.counterexample << "]";
    out << "\n";
  }
  return out.str();
}

}  // namespace kacward
