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

#include "dvt/cohomology.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <utility>

#include "dvt/error.hpp"

namespace dvt {

namespace {

using SparseRow = std::vector<std::pair<std::size_t, mpq_class>>;  // sorted by column

// row -= factor * pivot
void axpy(SparseRow& row, const mpq_class& factor, const SparseRow& pivot) {
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.push_back(std::move(row[i++]));
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, -factor * pivot[j].second);
      ++j;
    } else {
      mpq_class v = row[i].second - factor * pivot[j].second;
      if (v != 0) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  row = std::move(out);
}

// Rank by incremental echelon form over Q, pivoting on the last nonzero
// column of each row (the low-pivot reduction of persistent homology, which
// keeps fill-in small on boundary matrices).
std::size_t rank(std::vector<SparseRow> rows) {
  std::map<std::size_t, SparseRow> pivots;  // last column -> row
  for (SparseRow& row : rows) {
    while (!row.empty()) {
      auto it = pivots.find(row.back().first);
      if (it == pivots.end()) {
        const std::size_t low = row.back().first;
        pivots.emplace(low, std::move(row));
        break;
      }
      const mpq_class factor = row.back().second / it->second.back().second;
      axpy(row, factor, it->second);
    }
  }
  return pivots.size();
}

}  // namespace

OrderComplex::OrderComplex(const FiniteSpace& space) : vertices_(space.size()) {
  for (Cell y = 0; y < space.size(); ++y) {
    space.down(y).for_each([&](Cell x) {
      if (x != y) edges_.push_back({x, y});
    });
  }
  std::sort(edges_.begin(), edges_.end());
  for (const auto& [x, y] : edges_) {
    space.up(y).for_each([&](Cell z) {
      if (z != y) triangles_.push_back({x, y, z});
    });
  }
  std::sort(triangles_.begin(), triangles_.end());
}

std::size_t OrderComplex::edge_index(Cell a, Cell b) const {
  const std::array<Cell, 2> key{a, b};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) {
    throw Error(ErrorCode::kInternalInvariant, "edge missing from order complex");
  }
  return static_cast<std::size_t>(it - edges_.begin());
}

namespace {

SparseRow d1_row(const OrderComplex& k, std::size_t e) {
  // d[x,y] = y - x
  const auto& [x, y] = k.edges()[e];
  if (x < y) return {{x, mpq_class(-1)}, {y, mpq_class(1)}};
  return {{y, mpq_class(1)}, {x, mpq_class(-1)}};
}

SparseRow d2_row(const OrderComplex& k, std::size_t t) {
  // d[x,y,z] = [y,z] - [x,z] + [x,y]
  const auto& [x, y, z] = k.triangles()[t];
  std::vector<std::pair<std::size_t, int>> terms{
      {k.edge_index(y, z), 1}, {k.edge_index(x, z), -1}, {k.edge_index(x, y), 1}};
  std::sort(terms.begin(), terms.end());
  SparseRow row;
  for (const auto& [col, v] : terms) row.emplace_back(col, mpq_class(v));
  return row;
}

}  // namespace

std::size_t OrderComplex::rank_d1() const {
  if (!rank1_) {
    std::vector<SparseRow> rows;
    for (std::size_t e = 0; e < edges_.size(); ++e) rows.push_back(d1_row(*this, e));
    rank1_ = rank(std::move(rows));
  }
  return *rank1_;
}

std::size_t OrderComplex::rank_d2() const {
  if (!rank2_) {
    std::vector<SparseRow> rows;
    for (std::size_t t = 0; t < triangles_.size(); ++t) rows.push_back(d2_row(*this, t));
    rank2_ = rank(std::move(rows));
  }
  return *rank2_;
}

bool OrderComplex::boundary_squares_to_zero() const {
  for (std::size_t t = 0; t < triangles_.size(); ++t) {
    SparseRow acc;
    for (const auto& [e, coeff] : d2_row(*this, t)) axpy(acc, -coeff, d1_row(*this, e));
    if (!acc.empty()) return false;
  }
  return true;
}

std::size_t betti1(const FiniteSpace& space) { return OrderComplex(space).betti1(); }

namespace {

// Walks all up-sets with bitmasks: cells are decided from the highest index
// down, "out" before "in", so sets appear in increasing numeric order.
void for_each_up_set(const FiniteSpace& space,
                     const std::function<bool(std::uint64_t)>& visit) {
  const std::size_t n = space.size();
  std::vector<std::uint64_t> up(n), down(n);
  for (Cell c = 0; c < n; ++c) {
    space.up(c).for_each([&](Cell y) { up[c] |= std::uint64_t{1} << y; });
    space.down(c).for_each([&](Cell y) { down[c] |= std::uint64_t{1} << y; });
  }
  bool stop = false;
  std::function<void(std::size_t, std::uint64_t, std::uint64_t)> rec =
      [&](std::size_t i, std::uint64_t in, std::uint64_t out) {
        if (stop) return;
        if (i == 0) {
          stop = !visit(in);
          return;
        }
        const std::size_t c = i - 1;
        const std::uint64_t bit = std::uint64_t{1} << c;
        if ((in | out) & bit) {
          rec(c, in, out);
          return;
        }
        rec(c, in, out | down[c]);
        rec(c, in | up[c], out);
      };
  rec(n, 0, 0);
}

PointSet from_mask(std::size_t universe, std::uint64_t mask) {
  PointSet s(universe);
  for (Cell c = 0; c < universe; ++c) {
    if ((mask >> c) & 1U) s.insert(c);
  }
  return s;
}

void check_cap(const FiniteSpace& space, std::size_t max_cells) {
  if (space.size() > std::min<std::size_t>(max_cells, 64)) {
    throw Error(ErrorCode::kTooLarge, std::to_string(space.size()) +
                                          " cells exceed the enumeration cap of " +
                                          std::to_string(std::min<std::size_t>(max_cells, 64)));
  }
}

}  // namespace

GateReport gate_boundary_connectedness(const FiniteSpace& space, std::size_t max_cells) {
  check_cap(space, max_cells);
  GateReport report;
  const std::size_t n = space.size();
  const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  for_each_up_set(space, [&](std::uint64_t mask) {
    ++report.open_sets_visited;
    if (mask == 0 || mask == full) return true;
    const PointSet a = from_mask(n, mask);
    if (!space.is_connected(a) || !space.is_connected(a.complement())) return true;
    if (space.is_connected(space.boundary(a))) return true;
    report.holds = false;
    report.counterexample = a;
    return false;
  });
  return report;
}

std::vector<PointSet> enumerate_open_sets(const FiniteSpace& space, std::size_t max_cells) {
  check_cap(space, max_cells);
  std::vector<PointSet> out;
  for_each_up_set(space, [&](std::uint64_t mask) {
    out.push_back(from_mask(space.size(), mask));
    return true;
  });
  return out;
}

}  // namespace dvt
