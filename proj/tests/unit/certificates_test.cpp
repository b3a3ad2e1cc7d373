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

#include "dvt/certificates.hpp"
#include "dvt/error.hpp"
#include "dvt/gallery.hpp"
#include "dvt/search.hpp"
#include "generators.hpp"
#include "oracles.hpp"

namespace dvt {
namespace {

// Interval v0 < e0 > v1 with C = X, so the boundary of C is empty.
class Interval : public ::testing::Test {
 protected:
  const FiniteSpace s = path_model(1);
  const Cell v0 = s.index("v0");
  const Cell e0 = s.index("e0");
  const Cell v1 = s.index("v1");

  CellMap map(Cell a, Cell b, Cell c) const {
    std::vector<Cell> img(s.size());
    img[v0] = a;
    img[e0] = b;
    img[v1] = c;
    return CellMap(s, s.full_set(), img);
  }
  CellMap id() const { return CellMap::identity(s, s.full_set()); }
  CellMap squeeze() const { return map(v0, e0, e0); }
  CellMap constant() const { return map(v0, v0, v0); }
};

TEST_F(Interval, TwoStepFenceToAConstant) {
  const HomotopyCertificate cert{{id(), squeeze(), constant()}};
  const CertificateVerdict v = verify_certificate(s, cert, constant());
  EXPECT_TRUE(v.ok()) << v.describe(s);
}

TEST_F(Interval, FailingClauses) {
  const auto clause = [&](std::vector<CellMap> stages, const CellMap& f) {
    return verify_certificate(s, HomotopyCertificate{std::move(stages)}, f).clause;
  };
  EXPECT_EQ(clause({}, constant()), CertificateClause::kEmpty);
  EXPECT_EQ(clause({id()}, constant()), CertificateClause::kEnd);
  EXPECT_EQ(clause({squeeze(), constant()}, constant()), CertificateClause::kStart);
  const CertificateVerdict jump =
      verify_certificate(s, HomotopyCertificate{{id(), constant()}}, constant());
  EXPECT_EQ(jump.clause, CertificateClause::kComparability);
  EXPECT_EQ(jump.stage, std::optional<std::size_t>(0));
  EXPECT_EQ(jump.cell, std::optional<Cell>(v1));
  EXPECT_EQ(clause({id(), map(v0, v0, e0), map(v0, v0, e0)}, map(v0, v0, e0)),
            CertificateClause::kContinuity);
  const CellMap partial = CellMap::identity(s, s.set_of({"v0"}));
  EXPECT_EQ(clause({id(), partial}, constant()), CertificateClause::kDomain);
  EXPECT_FALSE(to_string(CertificateClause::kBoundary).empty());
}

TEST(Certificates, BoundaryClause) {
  const FiniteSpace s = path_model(2);
  const PointSet c = s.set_of({"v0", "e0", "v1"});  // boundary {v1}
  const auto constant = [&](const char* name) {
    return CellMap(s, c, std::vector<Cell>(s.size(), s.index(name)));
  };
  const HomotopyCertificate cert{
      {CellMap::identity(s, c), constant("e0"), constant("v1"), constant("e1")}};
  const CertificateVerdict v = verify_certificate(s, cert, constant("e1"));
  EXPECT_EQ(v.clause, CertificateClause::kBoundary);
  EXPECT_EQ(v.stage, std::optional<std::size_t>(3));
  EXPECT_EQ(v.cell, std::optional<Cell>(s.index("v1")));
}

TEST_F(Interval, Concatenation) {
  const HomotopyCertificate a{{id(), squeeze()}};
  const HomotopyCertificate b{{squeeze(), constant()}};
  const HomotopyCertificate ab = concatenate(a, b);
  ASSERT_EQ(ab.stages.size(), 3u);
  EXPECT_TRUE(verify_certificate(s, ab, constant()).ok());
  try {
    concatenate(a, HomotopyCertificate{{constant()}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCertificateInvalid);
  }
}

TEST_F(Interval, BoundCheck) {
  const CellMap f = id();
  const HomotopyFinding h =
      homotopy_bound_check(s, f, HomotopyCertificate{{id()}}, viability_sequence(s, f));
  EXPECT_TRUE(h.iter.is_infinite());
  EXPECT_TRUE(h.bound_met);
  EXPECT_EQ(h.stages, 1u);

  const CellMap g = constant();
  try {
    homotopy_bound_check(s, g, HomotopyCertificate{{id(), g}}, viability_sequence(s, g));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCertificateInvalid);
  }
}

TEST(Certificates, GalleryVerdicts) {
  for (const std::string& name : catalogue()) {
    const GalleryInstance g = build_example(name);
    if (!g.certificate) continue;
    const CellMap& f = std::get<CellMap>(g.map);
    // Recorded certificates are kept whether or not they verify; the
    // verdict must name a real violation when it fails.
    const CertificateVerdict v = verify_certificate(g.space, *g.certificate, f);
    if (!v.ok()) {
      EXPECT_FALSE(v.describe(g.space).empty()) << name;
      EXPECT_TRUE(v.stage.has_value()) << name;
    }
  }
}

// Clause-by-clause re-check of a fence.
bool fence_ok(const FiniteSpace& s, const HomotopyCertificate& cert, const CellMap& f) {
  const PointSet& c = f.domain();
  if (cert.stages.empty()) return false;
  const PointSet bd = oracle::boundary(s, c);
  for (std::size_t i = 0; i < cert.stages.size(); ++i) {
    const CellMap& g = cert.stages[i];
    if (g.domain() != c || !oracle::continuous(s, g)) return false;
    for (Cell x : c.members()) {
      if (i == 0 && g(x) != x) return false;
      if (i + 1 == cert.stages.size() && g(x) != f(x)) return false;
      if (bd.contains(x) && !c.contains(g(x))) return false;
      if (i > 0) {
        const Cell p = cert.stages[i - 1](x);
        if (!s.leq(p, g(x)) && !s.leq(g(x), p)) return false;
      }
    }
  }
  return true;
}

TEST(Certificates, RandomAgainstReCheck) {
  testgen::Gen g(61);
  std::size_t valid = 0;
  std::size_t invalid = 0;
  for (int i = 0; i < 3000; ++i) {
    const FiniteSpace s = g.poset(8);
    const PointSet c = g.nonempty_closed(s);
    HomotopyCertificate cert;
    cert.stages.push_back(g.chance(0.9) ? CellMap::identity(s, c) : g.any_function(s, c));
    const std::size_t steps = g.between(0, 4);
    for (std::size_t k = 0; k < steps; ++k) {
      std::vector<Cell> img(s.size(), 0);
      c.for_each([&](Cell x) { img[x] = cert.stages.back()(x); });
      const Cell x = g.one_of(c.members());
      const PointSet near = s.up(img[x]) | s.down(img[x]);
      img[x] = g.chance(0.8) ? g.one_of(near.members()) : static_cast<Cell>(g.below(s.size()));
      cert.stages.emplace_back(s, c, img);
    }
    const CellMap f = g.chance(0.9) ? cert.stages.back() : g.any_function(s, c);
    const bool want = fence_ok(s, cert, f);
    const CertificateVerdict v = verify_certificate(s, cert, f);
    ASSERT_EQ(v.ok(), want) << v.describe(s);
    (want ? valid : invalid) += 1;
  }
  EXPECT_GT(valid, 300u);
  EXPECT_GT(invalid, 300u);
}

TEST(Certificates, GeneratedFencesVerify) {
  Rng rng(62);
  testgen::Gen g(63);
  std::size_t made = 0;
  for (int i = 0; i < 1000; ++i) {
    const FiniteSpace s = g.poset(10);
    const PointSet c = g.nonempty_closed(s);
    const auto cert = gen::random_fence(rng, s, c, 1 + g.below(6));
    if (!cert) continue;
    ++made;
    ASSERT_TRUE(fence_ok(s, *cert, cert->stages.back()));
    ASSERT_TRUE(verify_certificate(s, *cert, cert->stages.back()).ok());
  }
  EXPECT_GT(made, 500u);
}

}  // namespace
}  // namespace dvt
