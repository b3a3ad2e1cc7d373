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

#include <gtest/gtest.h>

#include <cstdint>

#include "dvt/cohomology.hpp"
#include "dvt/error.hpp"
#include "dvt/gallery.hpp"
#include "generators.hpp"
#include "oracles.hpp"

namespace dvt {
namespace {

// Dense rank modulo a large prime.
std::size_t rank_mod_p(std::vector<std::vector<std::int64_t>> m) {
  constexpr std::int64_t p = 1000000007;
  const auto power = [&](std::int64_t b, std::int64_t e) {
    std::int64_t r = 1;
    b %= p;
    for (; e > 0; e >>= 1, b = b * b % p) {
      if (e & 1) r = r * b % p;
    }
    return r;
  };
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
    std::size_t piv = rank;
    while (piv < m.size() && (m[piv][col] % p + p) % p == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    const std::int64_t inv = power((m[rank][col] % p + p) % p, p - 2);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank) continue;
      const std::int64_t factor = ((m[r][col] % p + p) % p) * inv % p;
      if (factor == 0) continue;
      for (std::size_t k = 0; k < cols; ++k) {
        m[r][k] = ((m[r][k] - factor * ((m[rank][k] % p + p) % p)) % p + p) % p;
      }
    }
    ++rank;
  }
  return rank;
}

struct Bettis {
  std::size_t b0;
  std::size_t b1;
};

// Chains of length <= 2 in the strict order, with dense boundary matrices.
Bettis betti_oracle(const FiniteSpace& s) {
  const std::size_t n = s.size();
  std::vector<std::pair<Cell, Cell>> edges;
  for (Cell a = 0; a < n; ++a) {
    for (Cell b = 0; b < n; ++b) {
      if (a != b && s.leq(a, b)) edges.emplace_back(a, b);
    }
  }
  std::vector<std::vector<std::int64_t>> d1(edges.size(), std::vector<std::int64_t>(n, 0));
  for (std::size_t e = 0; e < edges.size(); ++e) {
    d1[e][edges[e].first] -= 1;
    d1[e][edges[e].second] += 1;
  }
  std::vector<std::vector<std::int64_t>> d2;
  const auto edge_at = [&](Cell a, Cell b) {
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (edges[e] == std::make_pair(a, b)) return e;
    }
    return edges.size();
  };
  for (const auto& [a, b] : edges) {
    for (Cell c = 0; c < n; ++c) {
      if (c == b || !s.leq(b, c)) continue;
      std::vector<std::int64_t> row(edges.size(), 0);
      row[edge_at(b, c)] += 1;
      row[edge_at(a, c)] -= 1;
      row[edge_at(a, b)] += 1;
      d2.push_back(row);
    }
  }
  const std::size_t r1 = rank_mod_p(d1);
  const std::size_t r2 = rank_mod_p(d2);
  return {n - r1, edges.size() - r1 - r2};
}

TEST(Betti, Models) {
  EXPECT_EQ(betti1(path_model(4)), 0u);
  EXPECT_EQ(OrderComplex(path_model(4)).betti0(), 1u);
  for (int d : {3, 5, 7}) EXPECT_EQ(betti1(circle_model(d)), 1u) << d;
  EXPECT_EQ(betti1(product_space(circle_model(3), circle_model(3))), 2u);
  EXPECT_EQ(betti1(grid_model(2, 2)), 0u);
  const FiniteSpace two = FiniteSpace::build({"a", "b"}, {});
  EXPECT_EQ(OrderComplex(two).betti0(), 2u);
  EXPECT_EQ(betti1(two), 0u);
}

TEST(Betti, ComplexShape) {
  const OrderComplex k(circle_model(3));
  EXPECT_EQ(k.vertex_count(), 6u);
  EXPECT_EQ(k.edges().size(), 6u);
  EXPECT_TRUE(k.triangles().empty());
  EXPECT_TRUE(k.boundary_squares_to_zero());
  const OrderComplex g(grid_model(1, 1));
  EXPECT_EQ(g.triangles().size(), 8u);
  EXPECT_TRUE(g.boundary_squares_to_zero());
  const auto& e = g.edges().front();
  EXPECT_EQ(g.edge_index(e[0], e[1]), 0u);
  EXPECT_THROW(g.edge_index(e[1], e[0]), Error);
}

TEST(Betti, RandomAgainstDenseOracle) {
  testgen::Gen gen(51);
  for (int i = 0; i < 1000; ++i) {
    const FiniteSpace s = gen.poset(11);
    const OrderComplex k(s);
    const Bettis want = betti_oracle(s);
    ASSERT_EQ(k.betti0(), want.b0);
    ASSERT_EQ(k.betti1(), want.b1);
    ASSERT_EQ(k.betti0(), s.connected_components(s.full_set()).size());
    ASSERT_TRUE(k.boundary_squares_to_zero());
  }
}

bool gate_fails_at(const FiniteSpace& s, const PointSet& a) {
  const PointSet rest = a.complement();
  return oracle::is_up_set(s, a) && !a.empty() && !rest.empty() && oracle::connected(s, a) &&
         oracle::connected(s, rest) && !oracle::connected(s, oracle::boundary(s, a));
}

TEST(Gate, Models) {
  const FiniteSpace c = circle_model(5);
  const GateReport r = gate_boundary_connectedness(c);
  EXPECT_FALSE(r.holds);
  ASSERT_TRUE(r.counterexample.has_value());
  EXPECT_EQ(r.counterexample->count(), 1u);
  EXPECT_TRUE(gate_fails_at(c, *r.counterexample));
  EXPECT_TRUE(gate_boundary_connectedness(path_model(5)).holds);
  EXPECT_TRUE(gate_boundary_connectedness(grid_model(1, 2)).holds);
  EXPECT_TRUE(gate_boundary_connectedness(FiniteSpace::build({"p"}, {})).holds);
}

TEST(Gate, Caps) {
  const FiniteSpace big = path_model(12);  // 25 cells
  try {
    gate_boundary_connectedness(big);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooLarge);
  }
  EXPECT_TRUE(gate_boundary_connectedness(big, 25).holds);
  // Caps beyond the bitmask width are clamped.
  EXPECT_THROW(gate_boundary_connectedness(path_model(40), 100), Error);
  EXPECT_THROW(enumerate_open_sets(big), Error);
}

TEST(Gate, RandomAgainstOracle) {
  testgen::Gen gen(52);
  std::size_t failing = 0;
  for (int i = 0; i < 1500; ++i) {
    const FiniteSpace s = gen.poset(10);
    const std::vector<PointSet> opens = oracle::all_open_sets(s);
    ASSERT_EQ(enumerate_open_sets(s), opens);
    const PointSet* first = nullptr;
    for (const PointSet& a : opens) {
      if (gate_fails_at(s, a)) {
        first = &a;
        break;
      }
    }
    const GateReport r = gate_boundary_connectedness(s);
    ASSERT_EQ(r.holds, first == nullptr);
    if (first != nullptr) {
      ++failing;
      ASSERT_EQ(*r.counterexample, *first);
    }
  }
  EXPECT_GT(failing, 10u);
}

// On connected spaces the failures seen in practice all carry a loop.
TEST(Gate, AcyclicSpacesHoldEmpirically) {
  testgen::Gen gen(53);
  std::size_t acyclic = 0;
  for (int i = 0; i < 1500; ++i) {
    const FiniteSpace s = gen.poset(10);
    if (!s.is_connected(s.full_set()) || betti1(s) != 0) continue;
    ++acyclic;
    ASSERT_TRUE(gate_boundary_connectedness(s).holds);
  }
  EXPECT_GT(acyclic, 100u);
}

}  // namespace
}  // namespace dvt
