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

#include "dvt/maps.hpp"

#include "dvt/error.hpp"

namespace dvt {

namespace {
constexpr Cell kNone = ~Cell{0};
}

CellMap::CellMap(const FiniteSpace& space, PointSet domain,
                 std::vector<Cell> image)
    : domain_(std::move(domain)), image_(std::move(image)) {
  if (domain_.universe() != space.size()) {
    throw Error(ErrorCode::kBadParameter, "domain universe mismatch");
  }
  image_.resize(space.size(), kNone);
  for (Cell c = 0; c < space.size(); ++c) {
    if (!domain_.contains(c)) {
      image_[c] = kNone;
      continue;
    }
    if (image_[c] == kNone) {
      throw Error(ErrorCode::kPartialMap, "no image for '" + space.name(c) + "'");
    }
    if (image_[c] >= space.size()) {
      throw Error(ErrorCode::kUnknownCell,
                  "image of '" + space.name(c) + "' is not a cell");
    }
  }
}

CellMap CellMap::identity(const FiniteSpace& space, const PointSet& domain) {
  std::vector<Cell> img(space.size());
  for (Cell c = 0; c < space.size(); ++c) img[c] = c;
  return CellMap(space, domain, std::move(img));
}

Cell CellMap::operator()(Cell c) const {
  if (!domain_.contains(c)) {
    throw Error(ErrorCode::kNotInDomain, "cell " + std::to_string(c));
  }
  return image_[c];
}

SetValuedMap::SetValuedMap(const FiniteSpace& space, PointSet domain,
                           std::vector<PointSet> image)
    : domain_(std::move(domain)), image_(std::move(image)) {
  if (domain_.universe() != space.size()) {
    throw Error(ErrorCode::kBadParameter, "domain universe mismatch");
  }
  image_.resize(space.size());
  for (Cell c = 0; c < space.size(); ++c) {
    if (!domain_.contains(c)) {
      image_[c] = PointSet(space.size());
      continue;
    }
    if (image_[c].universe() != space.size()) {
      throw Error(ErrorCode::kPartialMap, "no image for '" + space.name(c) + "'");
    }
    if (image_[c].empty()) {
      throw Error(ErrorCode::kEmptyImage, "image of '" + space.name(c) + "'");
    }
  }
}

SetValuedMap SetValuedMap::from_function(const CellMap& f) {
  SetValuedMap m;
  m.domain_ = f.domain();
  m.image_.assign(f.universe(), PointSet(f.universe()));
  f.domain().for_each([&](Cell c) { m.image_[c].insert(f(c)); });
  return m;
}

const PointSet& SetValuedMap::operator()(Cell c) const {
  if (!domain_.contains(c)) {
    throw Error(ErrorCode::kNotInDomain, "cell " + std::to_string(c));
  }
  return image_[c];
}

const PointSet& domain_of(const Dynamics& f) {
  return std::visit([](const auto& m) -> const PointSet& { return m.domain(); }, f);
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::kHolds: return "holds";
    case Status::kFails: return "fails";
    case Status::kNotApplicable: return "n/a";
  }
  return "?";
}

Check check_continuous(const FiniteSpace& space, const CellMap& f) {
  const PointSet& dom = f.domain();
  for (Cell x : dom.members()) {
    std::optional<Cell> bad;
    (space.up(x) & dom).for_each([&](Cell y) {
      if (!bad && !space.leq(f(x), f(y))) bad = y;
    });
    if (bad) return Check::fail({x, *bad});
  }
  return Check::pass();
}

PointSet open_hull(const FiniteSpace& space, const PointSet& s) {
  PointSet out(space.size());
  s.for_each([&](Cell z) { out |= space.up(z); });
  return out;
}

Check check_usc(const FiniteSpace& space, const SetValuedMap& f) {
  const PointSet& dom = f.domain();
  for (Cell x : dom.members()) {
    const PointSet hull = open_hull(space, f(x));
    std::optional<Cell> bad;
    (space.up(x) & dom).for_each([&](Cell y) {
      if (!bad && !f(y).subset_of(hull)) bad = y;
    });
    if (bad) return Check::fail({x, *bad});
  }
  return Check::pass();
}

Check check_conn(const FiniteSpace& space, const SetValuedMap& f) {
  for (Cell x : f.domain().members()) {
    if (!space.is_connected(f(x))) return Check::fail({x});
  }
  return Check::pass();
}

Check check_boundary_condition(const FiniteSpace& space, const CellMap& f) {
  const PointSet bd = space.boundary(f.domain());
  for (Cell x : bd.members()) {
    if (!f.domain().contains(f(x))) return Check::fail({x});
  }
  return Check::pass();
}

BoundaryChecks check_boundary_conditions(const FiniteSpace& space,
                                         const SetValuedMap& f) {
  const PointSet& c = f.domain();
  const PointSet bd = space.boundary(c);
  BoundaryChecks out{Check::pass(), Check::pass()};
  for (Cell x : bd.members()) {
    if (out.weak.holds() && !f(x).intersects(c)) out.weak = Check::fail({x});
    if (out.strong.holds() && !f(x).subset_of(c)) out.strong = Check::fail({x});
  }
  return out;
}

HypothesisReport check_hypotheses(const FiniteSpace& space, const Dynamics& f) {
  HypothesisReport r;
  const PointSet& c = domain_of(f);
  if (space.is_closed(c)) {
    r.c_closed = Check::pass();
  } else {
    PointSet missing = space.closure(c) - c;
    r.c_closed = Check::fail({*missing.first()});
  }
  if (const auto* fn = std::get_if<CellMap>(&f)) {
    r.continuous = check_continuous(space, *fn);
    r.bdr_function = check_boundary_condition(space, *fn);
  } else {
    const auto& m = std::get<SetValuedMap>(f);
    r.usc = check_usc(space, m);
    r.conn = check_conn(space, m);
    auto b = check_boundary_conditions(space, m);
    r.bdr_w = b.weak;
    r.bdr_s = b.strong;
  }
  return r;
}

PointSet image(const CellMap& f, const PointSet& a) {
  if (!a.subset_of(f.domain())) {
    throw Error(ErrorCode::kNotInDomain, "set is not inside the domain");
  }
  PointSet out(f.universe());
  a.for_each([&](Cell c) { out.insert(f(c)); });
  return out;
}

PointSet image(const SetValuedMap& f, const PointSet& a) {
  if (!a.subset_of(f.domain())) {
    throw Error(ErrorCode::kNotInDomain, "set is not inside the domain");
  }
  PointSet out(f.universe());
  a.for_each([&](Cell c) { out |= f(c); });
  return out;
}

PointSet image(const Dynamics& f, const PointSet& a) {
  return std::visit([&](const auto& m) { return image(m, a); }, f);
}

}  // namespace dvt
