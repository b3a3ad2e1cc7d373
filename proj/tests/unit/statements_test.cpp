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

#include <map>

#include "dvt/gallery.hpp"
#include "dvt/viability.hpp"
#include "generators.hpp"
#include "oracles.hpp"

namespace dvt {
namespace {

// Filtration straight from the recursion, up to index `len`.
std::vector<PointSet> recursive_filtration(const FiniteSpace& s, const Dynamics& f,
                                           std::size_t len) {
  const PointSet& c = domain_of(f);
  std::vector<PointSet> out{s.full_set(), c};
  while (out.size() < len) {
    PointSet next = s.empty_set();
    c.for_each([&](Cell x) {
      if (oracle::images(f, x).intersects(out.back())) next.insert(x);
    });
    out.push_back(next);
  }
  return out;
}

PointSet rel_boundary(const FiniteSpace& s, const PointSet& a, const PointSet& y) {
  return oracle::closure(s, a) & oracle::closure(s, y - a) & y;
}

bool closed(const FiniteSpace& s, const PointSet& a) { return oracle::closure(s, a) == a; }
bool open(const FiniteSpace& s, const PointSet& a) { return oracle::is_up_set(s, a); }

std::map<std::string, Status> by_id(const std::vector<StatementCheck>& checks) {
  std::map<std::string, Status> out;
  for (const auto& c : checks) out[c.id] = c.status;
  return out;
}

bool fn_hypotheses(const FiniteSpace& s, const CellMap& f) {
  const PointSet& c = f.domain();
  if (!closed(s, c) || !oracle::continuous(s, f)) return false;
  bool ok = true;
  oracle::boundary(s, c).for_each([&](Cell x) { ok = ok && c.contains(f(x)); });
  return ok;
}

bool sv_hypotheses(const FiniteSpace& s, const SetValuedMap& f, bool strong) {
  const PointSet& c = f.domain();
  if (!closed(s, c) || !oracle::usc(s, f)) return false;
  bool ok = true;
  c.for_each([&](Cell x) { ok = ok && oracle::connected(s, f(x)); });
  oracle::boundary(s, c).for_each([&](Cell x) {
    ok = ok && (strong ? f(x).subset_of(c) : f(x).intersects(c));
  });
  return ok;
}

bool gate_oracle(const FiniteSpace& s) {
  for (const PointSet& a : oracle::all_open_sets(s)) {
    const PointSet rest = a.complement();
    if (a.empty() || rest.empty()) continue;
    if (!oracle::connected(s, a) || !oracle::connected(s, rest)) continue;
    if (!oracle::connected(s, oracle::boundary(s, a))) return false;
  }
  return true;
}

TEST(Propositions, GalleryHasNoFailures) {
  for (const std::string& name : catalogue()) {
    const GalleryInstance g = build_example(name);
    const ViabilityReport r = viability_sequence(g.space, g.map);
    for (const StatementCheck& c : verify_propositions(g.space, g.map, r)) {
      EXPECT_NE(c.status, Status::kFails) << name << " " << c.id;
    }
  }
}

TEST(Propositions, KindsSelectTheirFamilies) {
  const GalleryInstance circ = build_example("ex_circle_d(5)");
  const auto a = by_id(verify_propositions(circ.space, circ.map,
                                           viability_sequence(circ.space, circ.map)));
  EXPECT_EQ(a.at("fn.3"), Status::kHolds);
  EXPECT_EQ(a.at("seq.4"), Status::kHolds);
  EXPECT_EQ(a.count("sv.1"), 0u);

  const GalleryInstance corr = build_example("ex_corr_main");
  const auto b = by_id(verify_propositions(corr.space, corr.map,
                                           viability_sequence(corr.space, corr.map)));
  EXPECT_EQ(b.at("sv.7"), Status::kHolds);
  EXPECT_EQ(b.at("seq.5'"), Status::kHolds);
  EXPECT_EQ(b.count("fn.1"), 0u);
}

TEST(Propositions, SkippedWithoutHypotheses) {
  const FiniteSpace s = path_model(2);
  std::vector<Cell> img(s.size(), 0);
  img[s.index("v0")] = s.index("v0");
  img[s.index("e0")] = s.index("v2");  // v0 <= e0 but v0 is not <= v2
  const CellMap f(s, s.set_of({"v0", "e0", "v1"}), img);
  const auto m = by_id(verify_propositions(s, f, viability_sequence(s, f)));
  EXPECT_EQ(m.at("fn.1"), Status::kNotApplicable);
  EXPECT_EQ(m.at("seq.2"), Status::kHolds);
}

TEST(Propositions, TamperedFiltrationIsCaught) {
  const GalleryInstance g = build_example("ex_circle_d(5)");
  ViabilityReport r = viability_sequence(g.space, g.map);
  r.filtration[3] = r.filtration[2];
  const auto m = by_id(verify_propositions(g.space, g.map, r));
  EXPECT_EQ(m.at("seq.def"), Status::kFails);
}

TEST(Propositions, RandomFunctionsAgainstOracles) {
  testgen::Gen g(41);
  std::size_t applicable = 0;
  for (int i = 0; i < 4000 && applicable < 1200; ++i) {
    const FiniteSpace s = g.poset(12);
    const PointSet c = g.nonempty_closed(s);
    const auto f = g.monotone(s, c, true);
    if (!f || !fn_hypotheses(s, *f)) continue;
    ++applicable;
    const ViabilityReport r = viability_sequence(s, *f);
    const auto checks = verify_propositions(s, *f, r);
    for (const auto& chk : checks) ASSERT_NE(chk.status, Status::kFails) << chk.id;
    EXPECT_EQ(by_id(checks).at("fn.2"), Status::kHolds);

    const std::size_t len = s.size() + 4;
    const auto cs = recursive_filtration(s, *f, len);
    for (std::size_t n = 0; n + 2 < len; ++n) {
      ASSERT_EQ(r.c(n), cs[n]);
      ASSERT_TRUE(closed(s, cs[n]));
      const PointSet bn = rel_boundary(s, cs[n + 1], cs[n]);
      const PointSet bn1 = rel_boundary(s, cs[n + 2], cs[n + 1]);
      ASSERT_TRUE(bn.subset_of(cs[n + 2]));
      bn1.for_each([&](Cell x) { ASSERT_TRUE(bn.contains((*f)(x))); });
      ASSERT_TRUE(closed(s, (cs[n] - cs[n + 1]) | cs[n + 2]));
    }
  }
  EXPECT_GE(applicable, 1000u);
}

TEST(Propositions, RandomSetValuedAgainstOracles) {
  testgen::Gen g(42);
  std::size_t applicable = 0;
  for (int i = 0; i < 8000 && applicable < 1200; ++i) {
    const FiniteSpace s = g.poset(12);
    const PointSet c = g.nonempty_closed(s);
    const SetValuedMap f = g.usc(s, c, true);
    if (!sv_hypotheses(s, f, false)) continue;
    ++applicable;
    const ViabilityReport r = viability_sequence(s, f);
    for (const auto& chk : verify_propositions(s, f, r)) {
      ASSERT_NE(chk.status, Status::kFails) << chk.id;
    }
    const auto cs = recursive_filtration(s, f, 6);
    const auto a = [&](std::size_t n) { return cs[n] - cs[n + 1]; };
    ASSERT_TRUE(open(s, a(0)));
    ASSERT_TRUE(open(s, a(1)));
    ASSERT_TRUE(rel_boundary(s, cs[2], cs[1]).subset_of(cs[3]));
    ASSERT_TRUE(closed(s, a(1) | cs[3]));
    ASSERT_TRUE(open(s, a(0) | a(2)));
    ASSERT_TRUE(rel_boundary(s, cs[3], cs[2]).subset_of(cs[4]));
    ASSERT_TRUE(closed(s, a(2) | cs[4]));
    ASSERT_TRUE(open(s, a(0) | a(1) | a(3)));
    (rel_boundary(s, cs[4], cs[3]) & a(4)).for_each([&](Cell x) {
      ASSERT_TRUE(f(x).intersects(a(2)));
      ASSERT_TRUE(f(x).intersects(a(3)));
    });
  }
  EXPECT_GE(applicable, 1000u);
}

TEST(Bounds, Examples) {
  const GalleryInstance circ = build_example("ex_circle_d(5)");
  const ViabilityReport r = viability_sequence(circ.space, circ.map);
  const BoundReport b = check_theorem_bounds(circ.space, circ.map, r, false);
  EXPECT_TRUE(b.x_connected);
  EXPECT_TRUE(b.c_connected);
  EXPECT_EQ(b.asserted, 4u);
  EXPECT_TRUE(b.all_satisfied());
  ASSERT_EQ(b.checks.size(), 4u);
  EXPECT_FALSE(b.checks[3].applicable);

  const BoundReport unknown = check_theorem_bounds(circ.space, circ.map, r, std::nullopt);
  EXPECT_FALSE(unknown.checks[3].applicable);

  ViabilityReport shortened = r;
  shortened.iter = Iter(3);
  EXPECT_FALSE(check_theorem_bounds(circ.space, circ.map, shortened, false).all_satisfied());
}

// Lower bounds on the longest orbit under the connectivity hypotheses,
// verified with the orbit search and a brute-force gate check.
template <typename MakeMap, typename Hyp>
void bound_sweep(std::uint64_t seed, MakeMap make, Hyp hyp, std::size_t want) {
  testgen::Gen g(seed);
  std::size_t applicable = 0;
  std::size_t gated = 0;
  for (int i = 0; i < 20000 && applicable < want; ++i) {
    const FiniteSpace s = g.poset(9);
    const PointSet c = g.nonempty_closed(s);
    const auto f = make(g, s, c);
    if (!f) continue;
    const bool weak = hyp(s, *f, false);
    if (!weak) continue;
    ++applicable;
    const bool strong = hyp(s, *f, true);
    const bool xc = oracle::connected(s, s.full_set());
    const bool cc = oracle::connected(s, c);
    const bool bd = !oracle::boundary(s, c).empty();
    const bool gate = xc && cc && gate_oracle(s);
    const Iter run = oracle::longest_run(*f);
    std::size_t expect = 0;
    if (bd) expect = 2;
    if (xc) expect = std::max<std::size_t>(expect, 3);
    if (xc && cc) expect = std::max<std::size_t>(expect, 4);
    if (gate && strong) {
      expect = 5;
      ++gated;
    }
    ASSERT_TRUE(run.at_least(expect)) << "iter " << run.to_string() << " bound " << expect;
    const ViabilityReport r = viability_sequence(s, *f);
    const BoundReport b = check_theorem_bounds(s, *f, r, gate);
    EXPECT_EQ(b.asserted, expect);
    EXPECT_TRUE(b.all_satisfied());
  }
  EXPECT_GE(applicable, want);
  EXPECT_GT(gated, 0u);
}

TEST(Bounds, RandomFunctions) {
  bound_sweep(
      43,
      [](testgen::Gen& g, const FiniteSpace& s, const PointSet& c) {
        return g.monotone(s, c, true);
      },
      [](const FiniteSpace& s, const CellMap& f, bool) { return fn_hypotheses(s, f); }, 1000);
}

TEST(Bounds, RandomSetValued) {
  bound_sweep(
      44,
      [](testgen::Gen& g, const FiniteSpace& s, const PointSet& c) {
        return std::optional<SetValuedMap>(g.usc(s, c, true));
      },
      [](const FiniteSpace& s, const SetValuedMap& f, bool strong) {
        return sv_hypotheses(s, f, strong);
      },
      1000);
}

}  // namespace
}  // namespace dvt
