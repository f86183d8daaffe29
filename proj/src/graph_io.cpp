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

#include "kacward/graph_io.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "kacward/errors.hpp"

namespace kacward {

namespace {

using nlohmann::json;

double as_real(const json& j, const std::string& where) {
  if (!j.is_number()) throw ParseError(where + ": expected a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) throw ParseError(where + ": number is not finite");
  return x;
}

int as_index(const json& j, int bound, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where + ": expected an integer vertex index");
  const auto v = j.get<std::int64_t>();
  if (v < 0 || v >= bound) {
    throw ParseError(where + ": vertex index " + std::to_string(v) + " out of range");
  }
  return static_cast<int>(v);
}

std::string number(double x) { return json(x).dump(); }

}  // namespace

EmbeddedGraph parse_graph(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("graph file must contain a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "vertices" && key != "edges") throw ParseError("unknown field \"" + key + "\"");
  }
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw ParseError("missing \"vertices\" array");
  }
  if (!doc.contains("edges") || !doc["edges"].is_array()) {
    throw ParseError("missing \"edges\" array");
  }

  std::vector<Point> vertices;
  for (std::size_t i = 0; i < doc["vertices"].size(); ++i) {
    const json& p = doc["vertices"][i];
    const std::string where = "vertices[" + std::to_string(i) + "]";
    if (!p.is_array() || p.size() != 2) throw ParseError(where + ": expected [x, y]");
    vertices.emplace_back(as_real(p[0], where), as_real(p[1], where));
  }

  const int n = static_cast<int>(vertices.size());
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < doc["edges"].size(); ++i) {
    const json& e = doc["edges"][i];
    const std::string where = "edges[" + std::to_string(i) + "]";
    if (!e.is_array() || e.size() != 3) throw ParseError(where + ": expected [u, v, weight]");
    edges.push_back({as_index(e[0], n, where), as_index(e[1], n, where), as_real(e[2], where)});
  }
  return EmbeddedGraph(std::move(vertices), std::move(edges));
}

EmbeddedGraph read_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string format_graph(const EmbeddedGraph& g) {
  std::ostringstream out;
  out << "{\n  \"vertices\": [";
  for (int v = 0; v < g.num_vertices(); ++v) {
    out << (v ? ",\n" : "\n") << "    [" << number(g.vertex(v).x()) << ", "
        << number(g.vertex(v).y()) << "]";
  }
  out << (g.num_vertices() ? "\n  ],\n" : "],\n");
  out << "  \"edges\": [";
  for (int k = 0; k < g.num_edges(); ++k) {
    const Edge& e = g.edge(k);
    out << (k ? ",\n" : "\n") << "    [" << e.u << ", " << e.v << ", " << number(e.weight) << "]";
  }
  out << (g.num_edges() ? "\n  ]\n" : "]\n");
  out << "}\n";
  return out.str();
}

void write_graph(const EmbeddedGraph& g, std::ostream& out) { out << format_graph(g); }

void write_graph(const EmbeddedGraph& g, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path.string());
  write_graph(g, out);
}

}  // namespace kacward
