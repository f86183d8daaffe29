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

#include "cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "kacward/decoration.hpp"
#include "kacward/errors.hpp"
#include "kacward/graph_io.hpp"
#include "kacward/ising.hpp"
#include "kacward/kac_ward.hpp"
#include "kacward/lattices.hpp"
#include "kacward/lemma_suite.hpp"

namespace kacward::cli {

namespace {

constexpr int kDefaultMaxLoopLen = 12;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// 15 significant digits, scientific notation.
std::string num(double x) {
  if (x == 0.0) x = 0.0;  // drop the sign of -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.14e", x);
  return buf;
}

int default_max_loop_len() {
  const char* env = std::getenv("KACWARD_MAX_LOOP_LEN");
  if (env == nullptr || *env == '\0') return kDefaultMaxLoopLen;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 2 || v > kMaxLoopLength) {
    throw UsageError(std::string("KACWARD_MAX_LOOP_LEN must be an integer in [2, ") +
                     std::to_string(kMaxLoopLength) + "], got \"" + env + "\"");
  }
  return static_cast<int>(v);
}

void write_text(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write " + path);
  file << text;
}

int cmd_z(const std::string& file, std::ostream& out) {
  const EmbeddedGraph g = read_graph(file);
  const DetResult<double> det = kac_ward_determinant(g);
  const double z = partition_function_from_det(det);
  out << "Z = " << num(z) << "\n";
  out << "log Z = " << num(0.5 * det.log_abs_det) << "\n";
  return kExitOk;
}

int cmd_det(const std::string& file, std::ostream& out) {
  const EmbeddedGraph g = read_graph(file);
  const DetResult<double> det = kac_ward_determinant(g);
  out << "det.re = " << num(det.det.real()) << "\n";
  out << "det.im = " << num(det.det.imag()) << "\n";
  out << "log|det| = " << num(det.log_abs_det) << "\n";
  out << "phase = " << num(det.phase) << "\n";
  return kExitOk;
}

int cmd_ising(const std::string& file, double beta, std::optional<double> coupling,
              std::ostream& out) {
  EmbeddedGraph g = read_graph(file);
  std::vector<double> j = coupling ? std::vector<double>(g.num_edges(), *coupling) : g.weights();
  const IsingResult r = ising_partition_kw({std::move(g), beta, std::move(j)});
  out << "Z_Ising = " << num(r.z) << "\n";
  out << "log Z_Ising = " << num(r.log_z) << "\n";
  return kExitOk;
}

int cmd_gen(const std::string& kind, int width, int height, double weight,
            const std::string& output, std::ostream& out) {
  if (width < 1 || height < 1) throw UsageError("--width and --height must be >= 1");
  const EmbeddedGraph g =
      kind == "square" ? gen_square(width, height, weight) : gen_hex(height, width, weight);
  write_text(format_graph(g), output, out);
  return kExitOk;
}

int cmd_decorate(const std::string& file, const std::string& output, std::string map_path,
                 std::ostream& out) {
  const EmbeddedGraph g = read_graph(file);
  const Decoration d = decorate(g);
  write_text(format_graph(d.decorated), output, out);
  if (map_path.empty() && !output.empty()) map_path = output + ".map.json";
  if (!map_path.empty()) {
    nlohmann::ordered_json sidecar;
    sidecar["edge_map"] = d.edge_map;
    sidecar["unit_edges"] = d.unit_edges;
    nlohmann::ordered_json fans = nlohmann::ordered_json::object();
    for (const auto& [v, members] : d.vertex_fan) fans[std::to_string(v)] = members;
    sidecar["vertex_fans"] = fans;
    write_text(sidecar.dump(2) + "\n", map_path, out);
  }
  return kExitOk;
}

int cmd_verify(const std::string& file, int max_loop_len, bool corrupt, std::ostream& out,
               std::ostream& err) {
  const EmbeddedGraph g = read_graph(file);
  const SuiteOptions options{max_loop_len, corrupt};
  const std::vector<CheckResult> results = run_lemma_suite(g, options);
  out << format_suite_table(results);
  for (const CheckResult& r : results) {
    if (r.status != CheckStatus::kFail) continue;
    err << "kacward: verify failed: " << r.name << " graph=" << file << " " << r.counterexample
        << "\n";
    return kExitVerify;
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact even-subgraph and Ising partition functions of planar straight-line graphs"};
  app.name("kacward");
  app.require_subcommand(1, 1);

  std::string file;
  std::string output;

  auto* z = app.add_subcommand("z", "Print Z (even-subgraph generating function) and log Z");
  z->add_option("file", file, "Graph file")->required();

  auto* det = app.add_subcommand("det", "Print det(Id - Lambda), its log-magnitude and phase");
  det->add_option("file", file, "Graph file")->required();

  double beta = 0.0;
  std::optional<double> coupling;
  auto* ising = app.add_subcommand("ising", "Print the zero-field Ising partition function");
  ising->add_option("file", file, "Graph file")->required();
  ising->add_option("--beta", beta, "Inverse temperature")->required();
  ising->add_option("--coupling", coupling,
                    "Uniform coupling J (default: per-edge J from the file's weights)");

  std::string kind;
  int width = 0;
  int height = 0;
  double weight = 0.0;
  auto* gen = app.add_subcommand("gen", "Write a square or brick-wall honeycomb lattice patch");
  gen->add_option("kind", kind, "square or hex")
      ->required()
      ->check(CLI::IsMember({"square", "hex"}));
  gen->add_option("--width", width, "Columns of squares / hexagons")->required();
  gen->add_option("--height", height, "Rows of squares / hexagons")->required();
  gen->add_option("--weight", weight, "Uniform edge weight")->required();
  gen->add_option("-o,--output", output, "Output file (default: stdout)");

  std::string map_path;
  auto* dec = app.add_subcommand("decorate", "Replace vertices of degree > 3 by trivalent fans");
  dec->add_option("file", file, "Graph file")->required();
  dec->add_option("-o,--output", output, "Output graph file (default: stdout)");
  dec->add_option("--map", map_path, "Edge-map sidecar (default: <output>.map.json)");

  std::optional<int> max_loop_len;
  bool corrupt = false;
  auto* verify = app.add_subcommand("verify", "Run the loop-calculus verification suite");
  verify->add_option("file", file, "Graph file")->required();
  verify->add_option("--max-loop-len", max_loop_len,
                     "Longest loop enumerated (default: $KACWARD_MAX_LOOP_LEN or 12)")
      ->check(CLI::Range(2, kMaxLoopLength));
  verify->add_flag("--corrupt-lambda", corrupt, "Test hook: perturb the transition matrix");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (z->parsed()) return cmd_z(file, out);
    if (det->parsed()) return cmd_det(file, out);
    if (ising->parsed()) return cmd_ising(file, beta, coupling, out);
    if (gen->parsed()) return cmd_gen(kind, width, height, weight, output, out);
    if (dec->parsed()) return cmd_decorate(file, output, map_path, out);
    if (verify->parsed()) {
      const int n = max_loop_len ? *max_loop_len : default_max_loop_len();
      return cmd_verify(file, n, corrupt, out, err);
    }
  } catch (const UsageError& e) {
    err << "kacward: usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "kacward: parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapacityError& e) {
    err << "kacward: usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "kacward: usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidGraph& e) {
    err << "kacward: invalid embedding: " << e.what() << "\n";
    return kExitEmbedding;
  } catch (const std::exception& e) {
    err << "kacward: numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitUsage;
}

}  // namespace kacward::cli
