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

#include "dvt/viability.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>

#include "dvt/error.hpp"

namespace dvt {

namespace {

// x can take one step landing in `target`.
bool reaches(const Dynamics& f, Cell x, const PointSet& target) {
  if (const auto* fn = std::get_if<CellMap>(&f)) return target.contains((*fn)(x));
  return std::get<SetValuedMap>(f)(x).intersects(target);
}

PointSet successors(const Dynamics& f, Cell x, std::size_t universe) {
  if (const auto* fn = std::get_if<CellMap>(&f)) {
    PointSet s(universe);
    s.insert((*fn)(x));
    return s;
  }
  return std::get<SetValuedMap>(f)(x);
}

PointSet next_level(const Dynamics& f, const PointSet& c, const PointSet& cur) {
  PointSet out(c.universe());
  c.for_each([&](Cell x) {
    if (reaches(f, x, cur)) out.insert(x);
  });
  return out;
}

}  // namespace

std::string Iter::to_string() const {
  return infinite_ ? "inf" : std::to_string(value_);
}

std::optional<Iter> Iter::parse(const std::string& s) {
  if (s == "inf") return Iter::infinity();
  std::size_t v = 0;
  const char* end = s.data() + s.size();
  auto [p, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || p != end) return std::nullopt;
  return Iter(v);
}

const PointSet& ViabilityReport::c(std::size_t n) const {
  return n < filtration.size() ? filtration[n] : filtration.back();
}

PointSet ViabilityReport::a(std::size_t n) const {
  return n < layers.size() ? layers[n] : PointSet(filtration.front().universe());
}

PointSet ViabilityReport::core() const {
  return stabilized_at ? filtration.back() : PointSet(filtration.front().universe());
}

ViabilityReport viability_sequence(const FiniteSpace& space, const Dynamics& f) {
  const PointSet& c = domain_of(f);
  if (c.universe() != space.size()) {
    throw Error(ErrorCode::kDomainMismatch, "map and space have different cell counts");
  }
  if (c.empty()) throw Error(ErrorCode::kEmptyC, "C is empty");

  ViabilityReport r;
  r.hypotheses = check_hypotheses(space, f);
  PointSet cur = space.full_set();
  r.filtration.push_back(cur);
  for (std::size_t n = 0;; ++n) {
    if (cur.empty()) {
      r.iter = Iter(n - 1);
      break;
    }
    PointSet next = next_level(f, c, cur);
    if (next == cur) {
      r.stabilized_at = n;
      r.iter = Iter::infinity();
      break;
    }
    r.layers.push_back(cur - next);
    r.filtration.push_back(next);
    cur = std::move(next);
  }
  r.witness = extract_orbit(r, f);
  return r;
}

Orbit extract_orbit(const ViabilityReport& report, const Dynamics& f) {
  Orbit o;
  const std::size_t u = report.filtration.front().universe();
  if (!report.iter.is_infinite()) {
    const std::size_t k = report.iter.value();
    Cell x = *report.c(k).first();
    o.prefix.push_back(x);
    for (std::size_t i = 0; i < k; ++i) {
      auto next = (successors(f, x, u) & report.c(k - i - 1)).first();
      if (!next) throw Error(ErrorCode::kInternalInvariant, "orbit has no successor");
      x = *next;
      o.prefix.push_back(x);
    }
    return o;
  }
  const PointSet core = report.core();
  std::map<Cell, std::size_t> seen;
  Cell x = *core.first();
  for (;;) {
    seen.emplace(x, o.prefix.size());
    o.prefix.push_back(x);
    auto next = (successors(f, x, u) & core).first();
    if (!next) throw Error(ErrorCode::kInternalInvariant, "core is not invariant");
    if (auto it = seen.find(*next); it != seen.end()) {
      o.cycle.assign(o.prefix.begin() + static_cast<std::ptrdiff_t>(it->second),
                     o.prefix.end());
      return o;
    }
    x = *next;
  }
}

Iter max_orbit_bruteforce(const FiniteSpace& space, const Dynamics& f) {
  const PointSet& c = domain_of(f);
  const std::size_t n = space.size();
  std::vector<std::vector<Cell>> adj(n);
  c.for_each([&](Cell x) { adj[x] = successors(f, x, n).members(); });

  // Longest walk (in edges) from each node; 0 outside C.
  enum Color : char { kWhite, kGrey, kBlack };
  std::vector<Color> color(n, kWhite);
  std::vector<std::size_t> longest(n, 0);
  bool cycle = false;
  std::function<void(Cell)> visit = [&](Cell x) {
    color[x] = kGrey;
    for (Cell y : adj[x]) {
      if (color[y] == kGrey) {
        cycle = true;
      } else if (color[y] == kWhite) {
        visit(y);
      }
      if (cycle) return;
      longest[x] = std::max(longest[x], longest[y] + 1);
    }
    color[x] = kBlack;
  };
  std::size_t best = 0;
  for (Cell x = 0; x < n && !cycle; ++x) {
    if (!c.contains(x)) continue;
    if (color[x] == kWhite) visit(x);
    best = std::max(best, longest[x]);
  }
  return cycle ? Iter::infinity() : Iter(best);
}

bool orbit_is_valid(const Dynamics& f, const Orbit& orbit) {
  const PointSet& c = domain_of(f);
  const std::size_t u = c.universe();
  if (orbit.prefix.empty()) return false;
  for (std::size_t i = 0; i + 1 < orbit.prefix.size(); ++i) {
    const Cell x = orbit.prefix[i];
    if (!c.contains(x) || !successors(f, x, u).contains(orbit.prefix[i + 1])) return false;
  }
  if (orbit.cycle.empty()) return true;
  if (orbit.cycle.size() > orbit.prefix.size() ||
      !std::equal(orbit.cycle.rbegin(), orbit.cycle.rend(), orbit.prefix.rbegin())) {
    return false;
  }
  const Cell last = orbit.cycle.back();
  return c.contains(last) && successors(f, last, u).contains(orbit.cycle.front());
}

Decomposition decompose_open_set(const FiniteSpace& space, const PointSet& u,
                                 const PointSet& k1, const PointSet& k2,
                                 PointSet* gate_witness) {
  const auto violated = [](const char* clause, const std::string& what) {
    return Error(ErrorCode::kPreconditionViolated,
                 std::string("precondition (") + clause + "): " + what);
  };
  if (k1.intersects(k2)) throw violated("i", "K1 and K2 intersect");
  if (!space.is_open(u)) throw violated("ii", "U is not open");
  if (!space.is_connected(u.complement())) throw violated("ii", "X \\ U is not connected");
  const PointSet bd = space.boundary(u);
  if (!bd.subset_of(k1 | k2)) throw violated("iii", "boundary of U not inside K1 u K2");
  if (!space.is_closed(bd & k1) || !space.is_closed(bd & k2)) {
    throw violated("iv", "boundary parts are not closed");
  }

  Decomposition d{space.empty_set(), space.empty_set()};
  for (const PointSet& comp : space.connected_components(u)) {
    const PointSet b = space.boundary(comp);
    if (!b.intersects(k2)) {
      d.u1 |= comp;
    } else if (!b.intersects(k1)) {
      d.u2 |= comp;
    } else {
      if (gate_witness != nullptr) *gate_witness = comp;
      throw Error(ErrorCode::kGateFailure,
                  "component boundary meets both K1 and K2");
    }
  }
  return d;
}

Iter restricted_iter(const FiniteSpace& space, const CellMap& f,
                     const ViabilityReport& report, std::size_t n) {
  const PointSet& cn = report.c(n);
  const PointSet& cn1 = report.c(n + 1);
  if (cn1.empty()) throw Error(ErrorCode::kBadParameter, "C_{n+1} is empty");
  const SubspaceView view = SubspaceView::of(space, cn);
  std::vector<Cell> img(view.to_ambient.size());
  cn1.for_each([&](Cell x) {
    const auto target = view.from_ambient[f(x)];
    if (!target) throw Error(ErrorCode::kInternalInvariant, "f(C_{n+1}) leaves C_n");
    img[*view.from_ambient[x]] = *target;
  });
  const CellMap local(view.space, view.to_local(cn1), std::move(img));
  return viability_sequence(view.space, local).iter;
}

std::optional<bool> has_fixed_point_property(const FiniteSpace& space,
                                             const PointSet& c,
                                             std::size_t max_cells) {
  if (c.count() > max_cells) return std::nullopt;
  if (c.empty()) return false;
  const SubspaceView view = SubspaceView::of(space, c);
  const FiniteSpace& s = view.space;
  const std::size_t n = s.size();
  const std::vector<Cell>& order = s.linear_extension();
  std::vector<Cell> g(n, 0);

  // Search for a fixed-point-free monotone self-map. Faces come first in
  // the linear extension, so every face of the current cell is assigned.
  std::function<bool(std::size_t)> search = [&](std::size_t i) -> bool {
    if (i == n) return true;
    const Cell x = order[i];
    for (Cell y = 0; y < n; ++y) {
      if (y == x) continue;
      bool ok = true;
      for (Cell face : s.faces(x)) {
        if (!s.leq(g[face], y)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      g[x] = y;
      if (search(i + 1)) return true;
    }
    return false;
  };
  return !search(0);
}

FixedPointResult fixed_point_via_retraction(const FiniteSpace& space,
                                            const CellMap& f, const CellMap& r,
                                            std::optional<bool> fpp_flag) {
  const PointSet& c = f.domain();
  if (!check_continuous(space, f).holds() || !check_boundary_condition(space, f).holds()) {
    throw Error(ErrorCode::kPreconditionViolated,
                "f must be continuous with f(boundary C) inside C");
  }
  FixedPointResult result;
  for (Cell x : c.members()) {
    if (f(x) == x) {
      result.cell = x;
      return result;
    }
  }

  const PointSet bd = space.boundary(c);
  const PointSet rest = space.interior(c).complement();
  if (r.universe() != space.size() || r.domain() != rest) {
    throw Error(ErrorCode::kNotARetraction, "r must be defined on X \\ Int C");
  }
  if (!check_continuous(space, r).holds()) {
    throw Error(ErrorCode::kNotARetraction, "r is not continuous");
  }
  for (Cell x : rest.members()) {
    if (!bd.contains(r(x))) throw Error(ErrorCode::kNotARetraction, "r leaves the boundary");
  }
  for (Cell x : bd.members()) {
    if (r(x) != x) throw Error(ErrorCode::kNotARetraction, "r moves a boundary cell");
  }

  std::vector<Cell> gimg(space.size());
  for (Cell x : c.members()) gimg[x] = c.contains(f(x)) ? f(x) : r(f(x));
  const CellMap g(space, c, std::move(gimg));
  if (!check_continuous(space, g).holds()) {
    throw Error(ErrorCode::kInternalInvariant, "glued map is not continuous");
  }

  result.c_has_fpp = has_fixed_point_property(space, c);
  if (!result.c_has_fpp) result.c_has_fpp = fpp_flag;
  if (!result.c_has_fpp) {
    throw Error(ErrorCode::kFppUndecidable, "C too large and no flag supplied");
  }
  for (Cell x : c.members()) {
    if (g(x) != x) continue;
    // g(x) = x forces f(x) = x: otherwise f(x) is outside C, so x = r(f(x))
    // is a boundary cell and the boundary condition is violated.
    if (f(x) != x) throw Error(ErrorCode::kInternalInvariant, "fixed point of g not fixed by f");
    result.cell = x;
    return result;
  }
  if (*result.c_has_fpp) {
    throw Error(ErrorCode::kInternalInvariant, "C has the fixed point property but g has none");
  }
  return result;
}

}  // namespace dvt
