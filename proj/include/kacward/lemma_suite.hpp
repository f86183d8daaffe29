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

#include <string>
#include <vector>

#include "kacward/embedded_graph.hpp"

namespace kacward {

struct SuiteOptions {
  int max_loop_len = 12;
  /// Fault injection: double one nonzero entry of the transition matrix
  /// before it is used by the determinant and trace checks.
  bool corrupt_transition_matrix = false;
};

enum class CheckStatus { kPass, kFail, kSkipped };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::kPass;
  std::string detail;          // worst residual, or why the check was skipped
  std::string counterexample;  // first failure: "edge=<id> length=<n> ..."
};

/// Runs every identity the Kac-Ward machinery rests on against g:
/// determinant vs. brute-force Z, weight properties of walks and loops, the
/// trace/loop identity, the loop expansion of log det, specific and generic
/// cancellations at every directed edge, the excursion decomposition, and
/// (when some vertex has degree > 3) the vertex decoration.
std::vector<CheckResult> run_lemma_suite(const EmbeddedGraph& g, const SuiteOptions& options);

bool all_passed(const std::vector<CheckResult>& results);

std::string format_suite_table(const std::vector<CheckResult>& results);

}  // namespace kacward
