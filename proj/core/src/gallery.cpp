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

#include "dvt/gallery.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <regex>
#include <set>

#include "dvt/error.hpp"

namespace dvt {

HypothesisProfile profile_of(const HypothesisReport& h, bool is_function) {
  HypothesisProfile p;
  if (is_function) {
    p.continuous = h.continuous.holds();
    p.bdr_function = h.bdr_function.holds();
  } else {
    p.usc = h.usc.holds();
    p.conn = h.conn.holds();
    p.bdr_w = h.bdr_w.holds();
    p.bdr_s = h.bdr_s.holds();
  }
  return p;
}

namespace {

// ------------------------------------------------------- cubical models

// Cells of a cubical complex in doubled coordinates: an even coordinate is
// a vertex position, an odd one the open unit interval around it.
using Coord = std::array<int, 2>;

std::string half(int k) {
  if (k % 2 == 0) return std::to_string(k / 2);
  return std::string(k < 0 ? "-" : "") + std::to_string(std::abs(k) / 2) + ".5";
}

struct CubeModel {
  FiniteSpace space;
  std::vector<Coord> coord;
  std::map<Coord, Cell> index;

  Cell at(int a, int b = 0) const { return index.at({a, b}); }
};

class CubeBuilder {
 public:
  explicit CubeBuilder(int dim) : dim_(dim) {}

  void add(Coord c) {
    if (!cells_.insert(c).second) return;
    for (int axis = 0; axis < dim_; ++axis) {
      if (c[axis] % 2 == 0) continue;
      for (int d : {-1, 1}) {
        Coord f = c;
        f[axis] += d;
        add(f);
      }
    }
  }

  // All cells with doubled coordinates in [x0,x1] x [y0,y1].
  void add_box(int x0, int x1, int y0 = 0, int y1 = 0) {
    for (int a = x0; a <= x1; ++a) {
      for (int b = y0; b <= y1; ++b) add({a, b});
    }
  }

  CubeModel build() const {
    CubeModel m;
    std::vector<std::string> names;
    for (const Coord& c : cells_) {
      m.index[c] = static_cast<Cell>(m.coord.size());
      m.coord.push_back(c);
      names.push_back(dim_ == 1 ? half(c[0]) : "[" + half(c[0]) + "," + half(c[1]) + "]");
    }
    std::vector<std::pair<Cell, Cell>> hasse;
    for (const Coord& c : cells_) {
      for (int axis = 0; axis < dim_; ++axis) {
        if (c[axis] % 2 == 0) continue;
        for (int d : {-1, 1}) {
          Coord f = c;
          f[axis] += d;
          hasse.emplace_back(m.index.at(f), m.index.at(c));
        }
      }
    }
    m.space = FiniteSpace::build_indexed(std::move(names), hasse);
    return m;
  }

 private:
  int dim_;
  std::set<Coord> cells_;
};

PointSet cells_where(const CubeModel& m, const std::function<bool(const Coord&)>& pred) {
  PointSet s = m.space.empty_set();
  for (Cell c = 0; c < m.coord.size(); ++c) {
    if (pred(m.coord[c])) s.insert(c);
  }
  return s;
}

CellMap function_on(const FiniteSpace& space, const PointSet& c,
                    const std::function<Cell(Cell)>& f) {
  std::vector<Cell> img(space.size());
  c.for_each([&](Cell x) { img[x] = f(x); });
  return CellMap(space, c, std::move(img));
}

SetValuedMap setvalued_on(const FiniteSpace& space, const PointSet& c,
                          const std::function<std::vector<Cell>(Cell)>& f) {
  std::vector<PointSet> img(space.size());
  c.for_each([&](Cell x) {
    img[x] = space.empty_set();
    for (Cell y : f(x)) img[x].insert(y);
  });
  return SetValuedMap(space, c, std::move(img));
}

HypothesisProfile function_profile(bool continuous, bool bdr) {
  HypothesisProfile p;
  p.continuous = continuous;
  p.bdr_function = bdr;
  return p;
}

HypothesisProfile setvalued_profile(bool usc, bool conn, bool bdr_w, bool bdr_s) {
  HypothesisProfile p;
  p.usc = usc;
  p.conn = conn;
  p.bdr_w = bdr_w;
  p.bdr_s = bdr_s;
  return p;
}

// -------------------------------------------------------- line examples

GalleryInstance ex_4_1() {
  CubeBuilder b(1);
  b.add({0, 0});
  b.add_box(4, 8);
  CubeModel m = b.build();
  const PointSet c = m.space.set_of({"0", "4"});
  GalleryInstance g;
  g.name = "ex_4_1";
  g.title = "two-point C in {0} u [2,4]";
  g.map = function_on(m.space, c, [&](Cell x) { return m.coord[x][0] == 0 ? m.at(6) : m.at(0); });
  g.space = std::move(m.space);
  g.expected_iter = Iter(2);
  g.expected_hypotheses = function_profile(true, true);
  g.expected_levels[2] = {"4"};
  g.notes = "f(0) = 3, f(4) = 0; the boundary of C is {4}";
  return g;
}

GalleryInstance ex_4_2() {
  CubeBuilder b(1);
  b.add_box(-2, 10);
  CubeModel m = b.build();
  const PointSet c = cells_where(m, [](const Coord& p) {
    return p[0] == 0 || (p[0] >= 4 && p[0] <= 8);
  });
  GalleryInstance g;
  g.name = "ex_4_2";
  g.title = "parabola-like map on {0} u [2,4]";
  // f(x) = (x-2)(x-4)/3: f(0) = 8/3, f(2) = f(4) = 0, f((2,4)) = [-1/3, 0).
  g.map = function_on(m.space, c, [&](Cell x) {
    const int a = m.coord[x][0];
    if (a == 0) return m.at(5);
    if (a == 4 || a == 8) return m.at(0);
    return m.at(-1);
  });
  g.space = std::move(m.space);
  g.expected_iter = Iter(3);
  g.expected_hypotheses = function_profile(true, true);
  g.expected_levels[2] = {"0", "2", "4"};
  g.expected_levels[3] = {"2", "4"};
  g.notes = "X connected, C not connected; C_2 is the boundary of C";
  return g;
}

GalleryInstance ex_trivial_corr() {
  CubeBuilder b(1);
  b.add_box(-2, 12);
  CubeModel m = b.build();
  const PointSet c = cells_where(m, [](const Coord& p) { return p[0] >= 0 && p[0] <= 8; });
  GalleryInstance g;
  g.name = "ex_trivial_corr";
  g.title = "disconnected images";
  g.map = setvalued_on(m.space, c, [&](Cell x) -> std::vector<Cell> {
    const int a = m.coord[x][0];
    if (a == 2 || a == 6) return {m.at(4), m.at(10)};
    if (a > 2 && a < 6) return {m.at(10)};
    return {m.at(4)};
  });
  g.space = std::move(m.space);
  g.expected_iter = Iter(2);
  g.expected_hypotheses = setvalued_profile(true, false, true, true);
  g.notes = "images {2}, {2,5}, {5} on [0,4]; the images at 1 and 3 are disconnected";
  return g;
}

// ------------------------------------------------------ planar examples

GalleryInstance ex_corr_main() {
  CubeBuilder b(2);
  b.add_box(-2, 8, -2, 6);
  CubeModel m = b.build();
  const auto in_q = [](const Coord& p) {
    return p[0] >= 0 && p[0] <= 4 && p[1] >= 0 && p[1] <= 4;
  };
  const auto in_s = [](const Coord& p) { return p[1] == 0 && p[0] >= 4 && p[0] <= 6; };
  const PointSet c = cells_where(m, [&](const Coord& p) { return in_q(p) || in_s(p); });
  GalleryInstance g;
  g.name = "ex_corr_main";
  g.title = "square plus handle segment";
  g.map = setvalued_on(m.space, c, [&](Cell x) -> std::vector<Cell> {
    const Coord p = m.coord[x];
    // The corner (2,0): the segment from (1,1) to (3,0).
    if (p == Coord{4, 0}) return {m.at(2, 2), m.at(3, 1), m.at(4, 1), m.at(5, 1), m.at(6, 0)};
    if (!in_q(p)) return {m.at(2, 2)};
    // (3, d) with d the distance to the boundary of the square.
    const bool on_edge = p[0] == 0 || p[0] == 4 || p[1] == 0 || p[1] == 4;
    if (on_edge) return {m.at(6, 0)};
    if (p == Coord{2, 2}) return {m.at(6, 2)};
    return {m.at(6, 1)};
  });
  g.space = std::move(m.space);
  g.expected_iter = Iter(4);
  g.expected_hypotheses = setvalued_profile(true, true, true, false);
  g.expected_levels[4] = {"[2,0]"};
  g.notes = "Q = [0,2]^2, S = [2,3] x {0}; single-valued except at (2,0)";
  return g;
}

}  // namespace

GalleryInstance stripes_window(int periods) {
  if (periods < 1) throw Error(ErrorCode::kBadParameter, "periods must be >= 1");
  const int axis_end = 2 * (5 * periods + 2);
  CubeBuilder b(2);
  b.add_box(0, axis_end, 0, 0);
  for (int k = 0; k <= periods; ++k) b.add_box(10 * k, 10 * k + 4, -2, 2);
  CubeModel m = b.build();
  const PointSet c = cells_where(m, [&](const Coord& p) {
    return p[1] == 0 && p[0] >= 0 && p[0] <= 10 * periods;
  });
  GalleryInstance g;
  g.name = periods == 3 ? "ex_stripes" : "ex_stripes(" + std::to_string(periods) + ")";
  g.title = "periodic vertical stripes";
  // Translation by 2, bent down inside the next stripe on [5k+3, 5k+5].
  g.map = function_on(m.space, c, [&](Cell x) {
    const int a = m.coord[x][0];
    const int r = ((a % 2 == 0 ? a : a - 1) / 2) % 5;
    if (a % 2 == 0) return r == 4 ? m.at(a + 4, -2) : m.at(a + 4, 0);
    return (r == 3 || r == 4) ? m.at(a + 4, -1) : m.at(a + 4, 0);
  });
  g.space = std::move(m.space);
  g.expected_iter = Iter(5);
  // The right end of the window lies in a stripe and is sent past C.
  g.expected_hypotheses = function_profile(true, false);
  std::vector<std::string> c5;
  for (int k = 0; k + 1 < periods; ++k) c5.push_back("[" + std::to_string(5 * k + 1) + ",0]");
  g.expected_levels[5] = c5;
  g.notes = "window of " + std::to_string(periods) +
            " periods; f(boundary C) inside C fails only at the right end of the window";
  return g;
}

namespace {

GalleryInstance ex_circle_d(int d) {
  if (d < 5 || d % 2 == 0) throw Error(ErrorCode::kBadParameter, "d must be odd and >= 5");
  FiniteSpace s = circle_model(d);
  PointSet c = s.empty_set();
  for (Cell x = 2; x <= static_cast<Cell>(2 * d - 2); ++x) c.insert(x);
  GalleryInstance g;
  g.name = "ex_circle_d(" + std::to_string(d) + ")";
  g.title = "arc of the circle, rotation by two sectors";
  const Cell n = static_cast<Cell>(2 * d);
  g.map = function_on(s, c, [&](Cell x) { return (x + 4) % n; });
  g.space = std::move(s);
  g.expected_iter = Iter(static_cast<std::size_t>(d - 1));
  g.expected_hypotheses = function_profile(true, true);
  if (d == 5) {
    g.expected_levels[2] = {"v1", "e1", "v2", "v4"};
    g.expected_levels[3] = {"v2", "v4"};
    g.expected_levels[4] = {"v2"};
  }
  g.notes = "C is the closed arc v1 .. v" + std::to_string(d - 1);
  return g;
}

GalleryInstance ex_ndim_torus(int d1, int d2) {
  for (int d : {d1, d2}) {
    if (d < 5 || d % 2 == 0) throw Error(ErrorCode::kBadParameter, "d must be odd and >= 5");
  }
  if (std::gcd(d1, d2) != 1) throw Error(ErrorCode::kBadParameter, "periods must be coprime");
  const FiniteSpace p = circle_model(d1);
  const FiniteSpace q = circle_model(d2);
  FiniteSpace s = product_space(p, q);
  const Cell nq = static_cast<Cell>(q.size());
  // O = {e0, v1, e1}^2: points with both angles strictly inside (0, 4pi/d).
  const auto in_o = [](Cell i) { return i >= 1 && i <= 3; };
  PointSet c = s.empty_set();
  for (Cell x = 0; x < s.size(); ++x) {
    if (!(in_o(x / nq) && in_o(x % nq))) c.insert(x);
  }
  GalleryInstance g;
  g.name = "ex_ndim_torus(" + std::to_string(d1) + "," + std::to_string(d2) + ")";
  g.title = "product rotation on a torus";
  g.map = function_on(s, c, [&](Cell x) {
    return ((x / nq + 4) % p.size()) * nq + (x % nq + 4) % q.size();
  });
  g.space = std::move(s);
  // Orbit count on the torus model: the vertex pairs form a single cycle of
  // length d1 d2 under the rotation, and exactly one of them lies in O.
  g.expected_iter = Iter(static_cast<std::size_t>(d1 * d2 - 1));
  g.expected_hypotheses = function_profile(true, true);
  g.notes = "torus model of the product construction";
  return g;
}

// ------------------------------------------------------- polar examples

const char* angular_name(int j) {
  static const char* kNames[] = {"v0", "e0", "v1", "e1", "v2", "e2", "v3", "e3", "v4", "e4"};
  return kNames[j];
}

// Radial path cells "r1", "r1-2", "r2", ... from the vertex labels.
std::vector<std::string> radial_cells(const std::vector<std::string>& labels) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i > 0) out.push_back("r" + labels[i - 1] + "-" + labels[i]);
    out.push_back("r" + labels[i]);
  }
  return out;
}

std::string polar(const std::string& r, int j) {
  return "(" + r + "," + angular_name(j) + ")";
}

// Annulus cells (radial x circle_model(5)), with the Hasse pairs.
void add_annulus(const std::vector<std::string>& radial, std::vector<std::string>& cells,
                 std::vector<FiniteSpace::Pair>& hasse) {
  for (std::size_t i = 0; i < radial.size(); ++i) {
    for (int j = 0; j < 10; ++j) {
      cells.push_back(polar(radial[i], j));
      if (i % 2 == 1) {
        hasse.emplace_back(polar(radial[i - 1], j), polar(radial[i], j));
        hasse.emplace_back(polar(radial[i + 1], j), polar(radial[i], j));
      }
      if (j % 2 == 1) {
        hasse.emplace_back(polar(radial[i], j - 1), polar(radial[i], j));
        hasse.emplace_back(polar(radial[i], (j + 1) % 10), polar(radial[i], j));
      }
    }
  }
}

// C: the ring 1 <= rho <= 2 plus the sector 2 <= rho <= 3 over the arc
// v1 .. v4. `r2` is the radial index of rho = 2 and `r3` of rho = 3.
PointSet stargate_c(const FiniteSpace& s, const std::vector<std::string>& radial,
                    std::size_t r2, std::size_t r3) {
  PointSet c = s.empty_set();
  for (std::size_t i = 0; i <= r3; ++i) {
    for (int j = 0; j < 10; ++j) {
      if (i <= r2 || (j >= 2 && j <= 8)) c.insert(s.index(polar(radial[i], j)));
    }
  }
  return c;
}

// A fence on the product: radial part clamped into a window of half-width
// `w` around radial index `level`, angular part rotated by `shift` cells.
CellMap polar_stage(const FiniteSpace& s, const PointSet& c,
                    const std::vector<std::string>& radial,
                    const std::vector<std::size_t>& radial_map, std::size_t level,
                    std::size_t w, int shift) {
  std::map<Cell, std::pair<std::size_t, int>> where;
  for (std::size_t i = 0; i < radial.size(); ++i) {
    for (int j = 0; j < 10; ++j) {
      if (auto x = s.find(polar(radial[i], j))) where[*x] = {i, j};
    }
  }
  return function_on(s, c, [&](Cell x) {
    const auto [i, j] = where.at(x);
    const std::size_t lo = level >= w ? level - w : 0;
    const std::size_t r = std::clamp(radial_map[i], lo, level + w);
    return s.index(polar(radial[r], (j + shift) % 10));
  });
}

// Identity -> radial collapse onto `level` -> rotation one sector at a time
// at that level -> radial expansion to `radial_map`.
HomotopyCertificate three_phase(const FiniteSpace& s, const PointSet& c,
                                const std::vector<std::string>& radial,
                                const std::vector<std::size_t>& radial_map,
                                std::size_t level, std::size_t span) {
  std::vector<std::size_t> id(radial.size());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
  HomotopyCertificate cert;
  for (std::size_t w = span + 1; w-- > 0;) {
    cert.stages.push_back(polar_stage(s, c, radial, id, level, w, 0));
  }
  for (int shift = 2; shift <= 4; shift += 2) {
    cert.stages.push_back(polar_stage(s, c, radial, id, level, 0, shift));
  }
  for (std::size_t w = 1; w <= span; ++w) {
    cert.stages.push_back(polar_stage(s, c, radial, radial_map, level, w, 4));
  }
  return cert;
}

GalleryInstance ex_stargate_bis() {
  const std::vector<std::string> radial = radial_cells({"1", "2", "2.25", "2.5", "3"});
  std::vector<std::string> cells;
  std::vector<FiniteSpace::Pair> hasse;
  add_annulus(radial, cells, hasse);
  FiniteSpace s = FiniteSpace::build(std::move(cells), hasse);
  const PointSet c = stargate_c(s, radial, 2, 8);
  const std::vector<std::size_t> to_level(radial.size(), 6);  // rho -> 5/2
  GalleryInstance g;
  g.name = "ex_stargate_bis";
  g.title = "annulus, inner ring plus 3/5 outer ring, rigid spiral";
  g.map = polar_stage(s, c, radial, to_level, 6, 0, 4);
  g.certificate = three_phase(s, c, radial, to_level, 2, 6);
  g.space = std::move(s);
  g.expected_iter = Iter(5);
  g.expected_hypotheses = function_profile(true, true);
  g.expected_levels[5] = {"(r1,v0)", "(r1-2,v0)", "(r2,v0)"};
  g.notes = "X is the annulus 1 <= rho <= 3; f(rho, theta) = (5/2, theta + 4pi/5)";
  return g;
}

GalleryInstance ex_stargate() {
  // rho = 1.5 is the preimage of 2.25 under the radial fold; with it every
  // open cell is sent into a single cell.
  const std::vector<std::string> radial =
      radial_cells({"1", "1.5", "2", "2.25", "2.5", "3", "4"});
  std::vector<std::string> cells;
  std::vector<FiniteSpace::Pair> hasse;
  add_annulus(radial, cells, hasse);
  // The disk rho < 1: a centre, five spokes and five sectors.
  cells.push_back("o");
  for (int j = 0; j < 10; ++j) {
    const std::string inner = polar("r0-1", j);
    cells.push_back(inner);
    hasse.emplace_back(polar("r1", j), inner);
    if (j % 2 == 0) {
      hasse.emplace_back("o", inner);
    } else {
      hasse.emplace_back(polar("r0-1", j - 1), inner);
      hasse.emplace_back(polar("r0-1", (j + 1) % 10), inner);
    }
  }
  FiniteSpace s = FiniteSpace::build(std::move(cells), hasse);
  const PointSet c = stargate_c(s, radial, 4, 10);
  // rho -> (5 - |rho - 2|) / 2 on radial indices r1 .. r3.
  const std::vector<std::size_t> fold = {4, 5, 6, 7, 8, 7, 7, 7, 6, 5, 4, 11, 12};
  GalleryInstance g;
  g.name = "ex_stargate";
  g.title = "same C in the plane, folded radial map";
  g.map = polar_stage(s, c, radial, fold, 8, 8, 4);
  g.certificate = three_phase(s, c, radial, fold, 4, 6);
  g.space = std::move(s);
  g.expected_iter = Iter(6);
  g.expected_hypotheses = function_profile(true, true);
  g.expected_levels[6] = {"(r1,v3)", "(r3,v3)"};
  g.notes = "X is the disk rho <= 4 standing in for the plane; "
            "f(rho, theta) = ((5 - |rho - 2|) / 2, theta + 4pi/5)";
  return g;
}

}  // namespace

const std::vector<std::string>& catalogue() {
  static const std::vector<std::string> kNames = {
      "ex_4_1",          "ex_4_2",      "ex_circle_d(5)",  "ex_circle_d(7)",
      "ex_stripes",      "ex_stargate_bis", "ex_stargate", "ex_ndim_torus(5,7)",
      "ex_trivial_corr", "ex_corr_main",
  };
  return kNames;
}

GalleryInstance build_example(const std::string& name) {
  static const std::regex kOne(R"(ex_circle_d\((\d+)\))");
  static const std::regex kTwo(R"(ex_ndim_torus\((\d+),(\d+)\))");
  static const std::regex kStripes(R"(ex_stripes\((\d+)\))");
  std::smatch m;
  if (name == "ex_4_1") return ex_4_1();
  if (name == "ex_4_2") return ex_4_2();
  if (name == "ex_stripes") return stripes_window(3);
  if (name == "ex_stargate_bis") return ex_stargate_bis();
  if (name == "ex_stargate") return ex_stargate();
  if (name == "ex_trivial_corr") return ex_trivial_corr();
  if (name == "ex_corr_main") return ex_corr_main();
  if (std::regex_match(name, m, kOne)) return ex_circle_d(std::stoi(m[1]));
  if (std::regex_match(name, m, kTwo)) return ex_ndim_torus(std::stoi(m[1]), std::stoi(m[2]));
  if (std::regex_match(name, m, kStripes)) return stripes_window(std::stoi(m[1]));
  throw Error(ErrorCode::kUnknownExample, name);
}

}  // namespace dvt
