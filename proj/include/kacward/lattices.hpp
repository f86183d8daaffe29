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

#include "kacward/embedded_graph.hpp"

namespace kacward {

/// width x height unit squares with free boundary, integer coordinates.
/// Vertex (i, j) has index j * (width + 1) + i; horizontal edges come first.
EmbeddedGraph gen_square(int width, int height, double weight);

/// Honeycomb patch of rows x cols hexagons drawn as a brick wall: each
/// hexagon is a 2 x 1 rectangle with midpoints on its long sides, odd rows
/// shifted right by one. Integer coordinates, maximum degree 3.
EmbeddedGraph gen_hex(int rows, int cols, double weight);

}  // namespace kacward
