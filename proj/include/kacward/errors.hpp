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

#include <stdexcept>
#include <string>

namespace kacward {

// Malformed input: unreadable file, bad JSON, unknown fields, indices out of range.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The graph is not a valid straight-line embedding (self-loop, multi-edge,
// crossing edges, zero-length edge, ...).
class InvalidGraph : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A numerical routine could not produce a trustworthy result.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A brute-force routine was asked to exceed its hard enumeration cap, or a
// precondition on its input was violated.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kacward
