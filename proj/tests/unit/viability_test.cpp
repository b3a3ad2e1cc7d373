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

#include "dvt/error.hpp"
#include "dvt/gallery.hpp"
#include "dvt/viability.hpp"
#include "generators.hpp"
#include "oracles.hpp"

namespace dvt {
namespace {

std::vector<std::string> names(const FiniteSpace& s, const std::vector<Cell>& cells) {
  std::vector<std::string> out;
  for (Cell c : cells) out.push_back(s.name(c));
  return out;
}

TEST(Iter, ParseAndOrder) {
  EXPECT_EQ(Iter::parse("inf"), Iter::infinity());
  EXPECT_EQ(Iter::parse("12"), Iter(12));
  EXPECT_FALSE(Iter::parse("x").has_value());
  EXPECT_FALSE(Iter::parse("").has_value());
  EXPECT_LT(Iter(1000), Iter::infinity());
  EXPECT_EQ(Iter::infinity().to_string(), "inf");
  EXPECT_TRUE(Iter::infinity().at_least(5));
}

TEST(Filtration, CircleArc) {
  const GalleryInstance g = build_example("ex_circle_d(5)");
  const ViabilityReport r = viability_sequence(g.space, g.map);
  const FiniteSpace& s = g.space;
  EXPECT_EQ(r.c(1), domain_of(g.map));
  EXPECT_EQ(r.c(2), s.set_of({"v1", "e1", "v2", "v4"}));
  EXPECT_EQ(r.c(3), s.set_of({"v2", "v4"}));
  EXPECT_EQ(r.c(4), s.set_of({"v2"}));
  EXPECT_TRUE(r.c(5).empty());
  EXPECT_EQ(r.iter, Iter(4));
  EXPECT_EQ(r.layers.size(), 5u);
  EXPECT_EQ(r.a(4), s.set_of({"v2"}));
  EXPECT_EQ(names(s, r.witness.prefix),
            (std::vector<std::string>{"v2", "v4", "v1", "v3", "v0"}));
  EXPECT_TRUE(r.witness.cycle.empty());
  EXPECT_EQ(r.witness.steps(), 4u);
  EXPECT_EQ(max_orbit_bruteforce(s, g.map), Iter(4));
}

TEST(Filtration, FixedCellGivesInfinity) {
  const FiniteSpace s = path_model(2);
  const PointSet c = s.full_set();
  std::vector<Cell> img(s.size());
  for (Cell x = 0; x < s.size(); ++x) img[x] = s.index("v1");
  const CellMap f(s, c, img);
  const ViabilityReport r = viability_sequence(s, f);
  EXPECT_TRUE(r.iter.is_infinite());
  EXPECT_TRUE(r.core().contains(s.index("v1")));
  ASSERT_TRUE(r.stabilized_at.has_value());
  EXPECT_EQ(r.c(*r.stabilized_at), r.c(*r.stabilized_at + 1));
  EXPECT_EQ(r.witness.cycle, std::vector<Cell>{s.index("v1")});
  EXPECT_TRUE(max_orbit_bruteforce(s, f).is_infinite());
}

TEST(Filtration, WholeSpaceIsInfiniteImmediately) {
  const FiniteSpace s = circle_model(5);
  const ViabilityReport r = viability_sequence(s, CellMap::identity(s, s.full_set()));
  EXPECT_TRUE(r.iter.is_infinite());
  EXPECT_EQ(r.stabilized_at, std::optional<std::size_t>(0));
}

TEST(Filtration, ImageMissesC) {
  const FiniteSpace s = path_model(2);
  const PointSet c = s.set_of({"v0"});
  std::vector<Cell> img(s.size(), s.index("v2"));
  const CellMap f(s, c, img);
  EXPECT_EQ(viability_sequence(s, f).iter, Iter(1));
  EXPECT_EQ(max_orbit_bruteforce(s, f), Iter(1));
}

TEST(Filtration, DisconnectedImages) {
  const GalleryInstance g = build_example("ex_trivial_corr");
  const ViabilityReport r = viability_sequence(g.space, g.map);
  EXPECT_EQ(r.iter, Iter(2));
  ASSERT_EQ(r.witness.steps(), 2u);
  EXPECT_FALSE(domain_of(g.map).contains(r.witness.prefix.back()));
  EXPECT_TRUE(orbit_is_valid(g.map, r.witness));
  EXPECT_EQ(extract_orbit(r, g.map).prefix, r.witness.prefix);
}

TEST(Filtration, Errors) {
  const FiniteSpace s = path_model(1);
  try {
    viability_sequence(s, CellMap::identity(s, s.empty_set()));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyC);
  }
  const FiniteSpace t = path_model(2);
  try {
    viability_sequence(s, CellMap::identity(t, t.full_set()));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDomainMismatch);
  }
}

TEST(Decomposition, Examples) {
  const FiniteSpace p = path_model(3);
  const PointSet u = p.set_of({"e2", "v3"});
  const Decomposition d = decompose_open_set(p, u, p.set_of({"v2"}), p.set_of({"v0"}));
  EXPECT_EQ(d.u1, u);
  EXPECT_TRUE(d.u2.empty());
  const Decomposition e = decompose_open_set(p, p.empty_set(), p.set_of({"v0"}), p.set_of({"v3"}));
  EXPECT_TRUE(e.u1.empty());
  EXPECT_TRUE(e.u2.empty());

  const FiniteSpace s = circle_model(5);
  PointSet witness = s.empty_set();
  try {
    decompose_open_set(s, s.set_of({"e0"}), s.set_of({"v0"}), s.set_of({"v1"}), &witness);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::kGateFailure);
  }
  EXPECT_EQ(witness, s.set_of({"e0"}));
}

TEST(Decomposition, Preconditions) {
  const FiniteSpace p = path_model(3);
  const auto clause = [&](const PointSet& u, const PointSet& k1, const PointSet& k2) {
    try {
      decompose_open_set(p, u, k1, k2);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kPreconditionViolated);
      const std::string what = e.what();
      const std::size_t open = what.find('(') + 1;
      return what.substr(open, what.find(')') - open);
    }
    return std::string("none");
  };
  EXPECT_EQ(clause(p.set_of({"e0"}), p.set_of({"v0"}), p.set_of({"v0"})), "i");
  EXPECT_EQ(clause(p.set_of({"v1"}), p.set_of({"v0"}), p.set_of({"v3"})), "ii");
  EXPECT_EQ(clause(p.set_of({"e1"}), p.set_of({"v0"}), p.set_of({"v3"})), "ii");
  EXPECT_EQ(clause(p.set_of({"e2", "v3"}), p.set_of({"v0"}), p.set_of({"v1"})), "iii");
  EXPECT_EQ(clause(p.set_of({"e2", "v3"}), p.set_of({"v2"}), p.empty_set()), "none");
}

TEST(Decomposition, RandomSplitsAreValid) {
  testgen::Gen g(31);
  std::size_t done = 0;
  for (int i = 0; i < 20000 && done < 300; ++i) {
    const FiniteSpace s = g.poset(10);
    const PointSet u = s.interior(g.subset(s, 0.5));
    if (!s.is_connected(u.complement())) continue;
    const PointSet bd = s.boundary(u);
    const PointSet k1 = s.closure(g.subset(s, 0.4)) & bd;
    const PointSet k2 = bd - k1;
    if (!s.is_closed(k2)) continue;
    try {
      const Decomposition d = decompose_open_set(s, u, k1, k2);
      EXPECT_EQ(d.u1 | d.u2, u);
      EXPECT_FALSE(d.u1.intersects(d.u2));
      EXPECT_FALSE(s.boundary(d.u1).intersects(k2));
      EXPECT_FALSE(s.boundary(d.u2).intersects(k1));
      ++done;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kGateFailure);
    }
  }
  EXPECT_GE(done, 300u);
}

TEST(Oracle, FiltrationMatchesOrbitSearches) {
  testgen::Gen g(32);
  for (int i = 0; i < 3000; ++i) {
    const FiniteSpace s = g.poset(12);
    const PointSet c = g.nonempty_closed(s);
    Dynamics f;
    if (g.chance(0.5)) {
      f = g.any_function(s, c);
    } else {
      f = g.any_setvalued(s, c);
    }
    const ViabilityReport r = viability_sequence(s, f);
    ASSERT_EQ(r.iter, oracle::longest_run(f));
    ASSERT_EQ(r.iter, max_orbit_bruteforce(s, f));
    ASSERT_TRUE(orbit_is_valid(f, r.witness));
    if (!r.iter.is_infinite()) EXPECT_EQ(r.witness.steps(), r.iter.value());
  }
}

TEST(Oracle, RestrictionIdentity) {
  testgen::Gen g(33);
  std::size_t checked = 0;
  for (int i = 0; i < 2000; ++i) {
    const FiniteSpace s = g.poset(12);
    const PointSet c = g.nonempty_closed(s);
    const auto f = g.monotone(s, c, true);
    if (!f) continue;
    const ViabilityReport r = viability_sequence(s, *f);
    for (std::size_t n = 0; !r.c(n + 1).empty() && n < 6; ++n) {
      const Iter sub = restricted_iter(s, *f, r, n);
      if (r.iter.is_infinite()) {
        EXPECT_TRUE(sub.is_infinite());
      } else {
        EXPECT_EQ(r.iter.value(), n + sub.value());
      }
      ++checked;
    }
  }
  EXPECT_GT(checked, 1000u);
}

TEST(FixedPoints, PropertyOfSmallSpaces) {
  EXPECT_EQ(has_fixed_point_property(path_model(2), path_model(2).full_set()), true);
  const FiniteSpace c = circle_model(3);
  EXPECT_EQ(has_fixed_point_property(c, c.full_set()), false);
  EXPECT_FALSE(has_fixed_point_property(circle_model(5), circle_model(5).full_set()).has_value());
}

TEST(FixedPoints, ViaRetractionOnPath) {
  const FiniteSpace x = path_model(6);
  const PointSet c = x.set_of({"v2", "e2", "v3", "e3", "v4"});
  // r collapses each side onto the nearer endpoint of C.
  std::vector<Cell> r_img(x.size());
  const PointSet outside = x.full_set() - x.interior(c);
  outside.for_each([&](Cell y) {
    r_img[y] = y <= x.index("v2") ? x.index("v2") : x.index("v4");
  });
  const CellMap r(x, outside, r_img);
  // A reflection of C: v2 <-> v4, e2 <-> e3.
  std::vector<Cell> f_img(x.size());
  f_img[x.index("v2")] = x.index("v4");
  f_img[x.index("e2")] = x.index("e3");
  f_img[x.index("v3")] = x.index("v3");
  f_img[x.index("e3")] = x.index("e2");
  f_img[x.index("v4")] = x.index("v2");
  const CellMap f(x, c, f_img);
  const FixedPointResult res = fixed_point_via_retraction(x, f, r);
  ASSERT_TRUE(res.cell.has_value());
  EXPECT_EQ(f(*res.cell), *res.cell);
  // A direct fixed point short-circuits the retraction argument.
  EXPECT_FALSE(res.c_has_fpp.has_value());

  // Direct enumeration of the fixed points of g = f or r o f.
  std::size_t g_fixed = 0;
  c.for_each([&](Cell y) {
    const Cell fy = f(y);
    const Cell gy = c.contains(fy) ? fy : r(fy);
    g_fixed += gy == y ? 1 : 0;
  });
  EXPECT_GE(g_fixed, 1u);
}

TEST(FixedPoints, RotationOfTriangleHasNone) {
  const FiniteSpace s = circle_model(3);
  std::vector<Cell> img(s.size());
  for (std::size_t k = 0; k < 3; ++k) {
    img[s.index("v" + std::to_string(k))] = s.index("v" + std::to_string((k + 1) % 3));
    img[s.index("e" + std::to_string(k))] = s.index("e" + std::to_string((k + 1) % 3));
  }
  const CellMap f(s, s.full_set(), img);
  const CellMap r(s, s.empty_set(), std::vector<Cell>(s.size(), 0));
  const FixedPointResult res = fixed_point_via_retraction(s, f, r);
  EXPECT_FALSE(res.cell.has_value());
  EXPECT_EQ(res.c_has_fpp, std::optional<bool>(false));
}

TEST(FixedPoints, ConeAlwaysHasOne) {
  const FiniteSpace s = product_space(path_model(1), path_model(1));
  const PointSet c = s.full_set();
  testgen::Gen g(34);
  std::vector<Cell> r_img(s.size());
  const PointSet outside = s.full_set() - s.interior(c);
  outside.for_each([&](Cell y) { r_img[y] = y; });
  const CellMap r(s, outside, r_img);
  for (int i = 0; i < 50; ++i) {
    const auto f = g.monotone(s, c, true);
    if (!f) continue;
    const FixedPointResult res = fixed_point_via_retraction(s, *f, r);
    ASSERT_TRUE(res.cell.has_value());
    EXPECT_EQ((*f)(*res.cell), *res.cell);
  }
}

}  // namespace
}  // namespace dvt
