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

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "kacward/embedded_graph.hpp"

namespace kacward {

// Graph files are JSON objects with exactly two members:
//
//   { "vertices": [[x, y], ...], "edges": [[u, v, weight], ...] }
//
// Vertex indices are 0-based. Anything else is a ParseError; structural
// problems detected by EmbeddedGraph's constructor surface as InvalidGraph.

EmbeddedGraph parse_graph(std::string_view text);
EmbeddedGraph read_graph(const std::filesystem::path& path);

/// Deterministic text form: one vertex or edge per line, shortest round-trip
/// number formatting.
std::string format_graph(const EmbeddedGraph& g);
void write_graph(const EmbeddedGraph& g, std::ostream& out);
void write_graph(const EmbeddedGraph& g, const std::filesystem::path& path);

}  // namespace kacward
