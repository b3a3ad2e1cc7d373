// Copyright 2026 The dvt Authors
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

#ifndef DVT_COHOMOLOGY_HPP_
#define DVT_COHOMOLOGY_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "dvt/topology.hpp"

namespace dvt {

// The 2-skeleton of the order complex: vertices are cells, edges are pairs
// x < y, triangles are chains x < y < z.
class OrderComplex {
 public:
  explicit OrderComplex(const FiniteSpace& space);

  std::size_t vertex_count() const { return vertices_; }
  const std::vector<std::array<Cell, 2>>& edges() const { return edges_; }
  const std::vector<std::array<Cell, 3>>& triangles() const { return triangles_; }

  // Ranks of the boundary maps over the rationals.
  std::size_t rank_d1() const;
  std::size_t rank_d2() const;

  std::size_t betti0() const { return vertices_ - rank_d1(); }
  std::size_t betti1() const { return edges_.size() - rank_d1() - rank_d2(); }

  // d1 o d2 == 0, evaluated entrywise.
  bool boundary_squares_to_zero() const;

  // Position of the edge a < b in edges(); throws kInternalInvariant.
  std::size_t edge_index(Cell a, Cell b) const;

 private:

  std::size_t vertices_ = 0;
  std::vector<std::array<Cell, 2>> edges_;
  std::vector<std::array<Cell, 3>> triangles_;
  mutable std::optional<std::size_t> rank1_;
  mutable std::optional<std::size_t> rank2_;
};

std::size_t betti1(const FiniteSpace& space);

// Every open A with A and X \ A nonempty and connected has a connected
// boundary.
struct GateReport {
  bool holds = true;
  std::optional<PointSet> counterexample;
  std::size_t open_sets_visited = 0;
};

inline constexpr std::size_t kDefaultGateCap = 24;

// Enumerates the open sets of the space in increasing order of their
// membership bitmask; the counterexample is the first one found. Throws
// kTooLarge above `max_cells` (clamped to 64).
GateReport gate_boundary_connectedness(const FiniteSpace& space,
                                       std::size_t max_cells = kDefaultGateCap);

// Every open set of the space, in the same order. Throws kTooLarge above
// `max_cells`.
std::vector<PointSet> enumerate_open_sets(const FiniteSpace& space,
                                          std::size_t max_cells = 16);

}  // namespace dvt

#endif  // DVT_COHOMOLOGY_HPP_
