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

#include "dvt/topology.hpp"

#include <algorithm>
#include <bit>

#include "dvt/error.hpp"

namespace dvt {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDuplicateCell: return "DuplicateCell";
    case ErrorCode::kUnknownCell: return "UnknownCell";
    case ErrorCode::kCyclicOrder: return "CyclicOrder";
    case ErrorCode::kNotASubset: return "NotASubset";
    case ErrorCode::kBadParameter: return "BadParameter";
    case ErrorCode::kNotInDomain: return "NotInDomain";
    case ErrorCode::kDomainMismatch: return "DomainMismatch";
    case ErrorCode::kEmptyC: return "EmptyC";
    case ErrorCode::kEmptyImage: return "EmptyImage";
    case ErrorCode::kPartialMap: return "PartialMap";
    case ErrorCode::kInternalInvariant: return "InternalInvariant";
    case ErrorCode::kPreconditionViolated: return "PreconditionViolated";
    case ErrorCode::kGateFailure: return "GateFailure";
    case ErrorCode::kNotARetraction: return "NotARetraction";
    case ErrorCode::kFppUndecidable: return "FPPUndecidable";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kCertificateInvalid: return "CertificateInvalid";
    case ErrorCode::kUnknownExample: return "UnknownExample";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

// ---------------------------------------------------------------- PointSet

PointSet::PointSet(std::size_t universe)
    : universe_(universe), words_((universe + 63) / 64, 0) {}

PointSet::PointSet(std::size_t universe, std::initializer_list<Cell> cells)
    : PointSet(universe) {
  for (Cell c : cells) insert(c);
}

PointSet PointSet::full(std::size_t universe) {
  PointSet s(universe);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  if (universe % 64 != 0 && !s.words_.empty()) {
    s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
  }
  return s;
}

std::size_t PointSet::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool PointSet::empty() const {
  return std::all_of(words_.begin(), words_.end(),
                     [](std::uint64_t w) { return w == 0; });
}

PointSet& PointSet::insert(Cell c) {
  if (c >= universe_) {
    throw Error(ErrorCode::kUnknownCell,
                "cell index " + std::to_string(c) + " out of range");
  }
  words_[c >> 6] |= std::uint64_t{1} << (c & 63);
  return *this;
}

PointSet& PointSet::erase(Cell c) {
  if (c < universe_) words_[c >> 6] &= ~(std::uint64_t{1} << (c & 63));
  return *this;
}

void PointSet::check_universe(const PointSet& other) const {
  if (other.universe_ != universe_) {
    throw Error(ErrorCode::kBadParameter,
                "point sets over different spaces (" +
                    std::to_string(universe_) + " vs " +
                    std::to_string(other.universe_) + " cells)");
  }
}

PointSet& PointSet::operator|=(const PointSet& other) {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

PointSet& PointSet::operator&=(const PointSet& other) {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

PointSet& PointSet::operator-=(const PointSet& other) {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

PointSet PointSet::complement() const { return full(universe_) - *this; }

bool PointSet::subset_of(const PointSet& other) const {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

bool PointSet::intersects(const PointSet& other) const {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

std::optional<Cell> PointSet::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) {
      return static_cast<Cell>(w * 64 + static_cast<std::size_t>(
                                            __builtin_ctzll(words_[w])));
    }
  }
  return std::nullopt;
}

std::vector<Cell> PointSet::members() const {
  std::vector<Cell> out;
  out.reserve(count());
  for_each([&](Cell c) { out.push_back(c); });
  return out;
}

bool PointSet::operator<(const PointSet& other) const {
  if (universe_ != other.universe_) return universe_ < other.universe_;
  for (std::size_t i = words_.size(); i-- > 0;) {
    if (words_[i] != other.words_[i]) return words_[i] < other.words_[i];
  }
  return false;
}

// ------------------------------------------------------------- FiniteSpace

FiniteSpace FiniteSpace::build(std::vector<std::string> cells,
                               const std::vector<Pair>& hasse) {
  std::unordered_map<std::string, Cell> index;
  for (Cell i = 0; i < cells.size(); ++i) {
    if (!index.emplace(cells[i], i).second) {
      throw Error(ErrorCode::kDuplicateCell, "cell '" + cells[i] + "'");
    }
  }
  std::vector<std::pair<Cell, Cell>> pairs;
  pairs.reserve(hasse.size());
  for (const auto& [lo, hi] : hasse) {
    auto a = index.find(lo);
    auto b = index.find(hi);
    if (a == index.end()) throw Error(ErrorCode::kUnknownCell, "'" + lo + "'");
    if (b == index.end()) throw Error(ErrorCode::kUnknownCell, "'" + hi + "'");
    pairs.emplace_back(a->second, b->second);
  }
  return build_indexed(std::move(cells), pairs);
}

FiniteSpace FiniteSpace::build_indexed(
    std::vector<std::string> cells,
    const std::vector<std::pair<Cell, Cell>>& hasse) {
  FiniteSpace s;
  const std::size_t n = cells.size();
  for (Cell i = 0; i < n; ++i) {
    if (!s.index_.emplace(cells[i], i).second) {
      throw Error(ErrorCode::kDuplicateCell, "cell '" + cells[i] + "'");
    }
  }
  s.names_ = std::move(cells);

  std::vector<std::vector<Cell>> below(n);  // direct relation lo -> hi
  std::vector<std::size_t> indegree(n, 0);
  for (auto [lo, hi] : hasse) {
    if (lo >= n || hi >= n) {
      throw Error(ErrorCode::kUnknownCell, "hasse pair index out of range");
    }
    if (lo == hi) continue;
    below[hi].push_back(lo);
    ++indegree[hi];
  }
  // Kahn's algorithm from the minimal cells upward. Ties are broken by
  // index so the extension is deterministic.
  std::vector<std::vector<Cell>> above(n);
  for (Cell hi = 0; hi < n; ++hi) {
    for (Cell lo : below[hi]) above[lo].push_back(hi);
  }
  std::vector<Cell> ready;
  for (Cell i = 0; i < n; ++i) {
    if (indegree[i] == 0) ready.push_back(i);
  }
  std::make_heap(ready.begin(), ready.end(), std::greater<>());
  while (!ready.empty()) {
    std::pop_heap(ready.begin(), ready.end(), std::greater<>());
    Cell c = ready.back();
    ready.pop_back();
    s.linear_.push_back(c);
    for (Cell hi : above[c]) {
      if (--indegree[hi] == 0) {
        ready.push_back(hi);
        std::push_heap(ready.begin(), ready.end(), std::greater<>());
      }
    }
  }
  if (s.linear_.size() != n) {
    std::string where;
    for (Cell i = 0; i < n; ++i) {
      if (indegree[i] != 0) {
        where = s.names_[i];
        break;
      }
    }
    throw Error(ErrorCode::kCyclicOrder, "cycle through '" + where + "'");
  }

  s.down_.assign(n, PointSet(n));
  for (Cell c : s.linear_) {
    s.down_[c].insert(c);
    for (Cell lo : below[c]) s.down_[c] |= s.down_[lo];
  }
  s.up_.assign(n, PointSet(n));
  for (Cell hi = 0; hi < n; ++hi) {
    s.down_[hi].for_each([&](Cell lo) { s.up_[lo].insert(hi); });
  }

  // Transitive reduction: lo is covered by hi iff no z strictly between.
  s.lower_covers_.assign(n, {});
  s.upper_covers_.assign(n, {});
  for (Cell hi = 0; hi < n; ++hi) {
    PointSet strict = s.down_[hi];
    strict.erase(hi);
    strict.for_each([&](Cell lo) {
      PointSet between = strict & s.up_[lo];
      between.erase(lo);
      if (between.empty()) {
        s.hasse_.emplace_back(lo, hi);
        s.lower_covers_[hi].push_back(lo);
        s.upper_covers_[lo].push_back(hi);
      }
    });
  }
  std::sort(s.hasse_.begin(), s.hasse_.end());
  for (auto& v : s.upper_covers_) std::sort(v.begin(), v.end());
  return s;
}

std::optional<Cell> FiniteSpace::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Cell FiniteSpace::index(std::string_view name) const {
  auto c = find(name);
  if (!c) throw Error(ErrorCode::kUnknownCell, "'" + std::string(name) + "'");
  return *c;
}

PointSet FiniteSpace::minimal_open(std::string_view name) const {
  return up(index(name));
}

PointSet FiniteSpace::set_of(std::initializer_list<std::string_view> names) const {
  PointSet s(size());
  for (auto n : names) s.insert(index(n));
  return s;
}

PointSet FiniteSpace::set_of(const std::vector<std::string>& names) const {
  PointSet s(size());
  for (const auto& n : names) s.insert(index(n));
  return s;
}

std::vector<std::string> FiniteSpace::names_of(const PointSet& s) const {
  check(s);
  std::vector<std::string> out;
  s.for_each([&](Cell c) { out.push_back(names_[c]); });
  return out;
}

void FiniteSpace::check(const PointSet& a) const {
  if (a.universe() != size()) {
    throw Error(ErrorCode::kBadParameter,
                "point set has universe " + std::to_string(a.universe()) +
                    ", space has " + std::to_string(size()) + " cells");
  }
}

PointSet FiniteSpace::closure(const PointSet& a) const {
  check(a);
  PointSet out(size());
  a.for_each([&](Cell c) { out |= down_[c]; });
  return out;
}

PointSet FiniteSpace::interior(const PointSet& a) const {
  check(a);
  PointSet out(size());
  a.for_each([&](Cell c) {
    if (up_[c].subset_of(a)) out.insert(c);
  });
  return out;
}

PointSet FiniteSpace::boundary(const PointSet& a) const {
  return closure(a) - interior(a);
}

bool FiniteSpace::is_open(const PointSet& a) const { return interior(a) == a; }

bool FiniteSpace::is_closed(const PointSet& a) const { return closure(a) == a; }

PointSet FiniteSpace::relative_closure(const PointSet& a,
                                       const PointSet& y) const {
  if (!a.subset_of(y)) throw Error(ErrorCode::kNotASubset, "A is not inside Y");
  return closure(a) & y;
}

PointSet FiniteSpace::relative_interior(const PointSet& a,
                                        const PointSet& y) const {
  if (!a.subset_of(y)) throw Error(ErrorCode::kNotASubset, "A is not inside Y");
  PointSet out(size());
  a.for_each([&](Cell c) {
    if ((up_[c] & y).subset_of(a)) out.insert(c);
  });
  return out;
}

PointSet FiniteSpace::relative_boundary(const PointSet& a,
                                        const PointSet& y) const {
  check(a);
  check(y);
  if (!a.subset_of(y)) throw Error(ErrorCode::kNotASubset, "A is not inside Y");
  return relative_closure(a, y) & relative_closure(y - a, y);
}

std::vector<PointSet> FiniteSpace::connected_components(const PointSet& a) const {
  check(a);
  std::vector<PointSet> out;
  PointSet left = a;
  while (auto seed = left.first()) {
    PointSet comp(size());
    comp.insert(*seed);
    PointSet frontier = comp;
    while (!frontier.empty()) {
      PointSet next(size());
      frontier.for_each([&](Cell c) { next |= up_[c]; next |= down_[c]; });
      next &= left;
      next -= comp;
      comp |= next;
      frontier = std::move(next);
    }
    left -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

bool FiniteSpace::is_connected(const PointSet& a) const {
  return connected_components(a).size() <= 1;
}

// ------------------------------------------------------------ SubspaceView

SubspaceView SubspaceView::of(const FiniteSpace& ambient, const PointSet& carrier) {
  SubspaceView v;
  v.from_ambient.assign(ambient.size(), std::nullopt);
  std::vector<std::string> names;
  carrier.for_each([&](Cell c) {
    v.from_ambient[c] = static_cast<Cell>(v.to_ambient.size());
    v.to_ambient.push_back(c);
    names.push_back(ambient.name(c));
  });
  // Induced order: all comparable pairs; build_indexed reduces them.
  std::vector<std::pair<Cell, Cell>> pairs;
  for (Cell hi = 0; hi < v.to_ambient.size(); ++hi) {
    (ambient.down(v.to_ambient[hi]) & carrier).for_each([&](Cell lo) {
      if (lo != v.to_ambient[hi]) pairs.emplace_back(*v.from_ambient[lo], hi);
    });
  }
  v.space = FiniteSpace::build_indexed(std::move(names), pairs);
  return v;
}

PointSet SubspaceView::to_local(const PointSet& ambient_set) const {
  PointSet out(to_ambient.size());
  ambient_set.for_each([&](Cell c) {
    if (c < from_ambient.size() && from_ambient[c]) out.insert(*from_ambient[c]);
  });
  return out;
}

PointSet SubspaceView::to_ambient_set(const PointSet& local_set,
                                      std::size_t ambient_size) const {
  PointSet out(ambient_size);
  local_set.for_each([&](Cell c) { out.insert(to_ambient.at(c)); });
  return out;
}

// ---------------------------------------------------------------- builders

FiniteSpace product_space(const FiniteSpace& p, const FiniteSpace& q) {
  const auto np = static_cast<Cell>(p.size());
  const auto nq = static_cast<Cell>(q.size());
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(np) * nq);
  for (Cell i = 0; i < np; ++i) {
    for (Cell j = 0; j < nq; ++j) {
      names.push_back("(" + p.name(i) + "," + q.name(j) + ")");
    }
  }
  std::vector<std::pair<Cell, Cell>> pairs;
  for (Cell i = 0; i < np; ++i) {
    for (Cell j = 0; j < nq; ++j) {
      for (auto [lo, hi] : p.hasse()) {
        if (hi == i) pairs.emplace_back(lo * nq + j, i * nq + j);
      }
      for (auto [lo, hi] : q.hasse()) {
        if (hi == j) pairs.emplace_back(i * nq + lo, i * nq + j);
      }
    }
  }
  return FiniteSpace::build_indexed(std::move(names), pairs);
}

FiniteSpace circle_model(int d) {
  if (d < 3) throw Error(ErrorCode::kBadParameter, "circle_model needs d >= 3");
  std::vector<std::string> names;
  std::vector<std::pair<Cell, Cell>> pairs;
  const auto n = static_cast<Cell>(d);
  for (Cell i = 0; i < n; ++i) {
    names.push_back("v" + std::to_string(i));
    names.push_back("e" + std::to_string(i));
    pairs.emplace_back(2 * i, 2 * i + 1);
    pairs.emplace_back(2 * ((i + 1) % n), 2 * i + 1);
  }
  return FiniteSpace::build_indexed(std::move(names), pairs);
}

FiniteSpace path_model(int n) {
  if (n < 1) throw Error(ErrorCode::kBadParameter, "path_model needs n >= 1");
  std::vector<std::string> names;
  std::vector<std::pair<Cell, Cell>> pairs;
  const auto m = static_cast<Cell>(n);
  for (Cell i = 0; i < m; ++i) {
    names.push_back("v" + std::to_string(i));
    names.push_back("e" + std::to_string(i));
    pairs.emplace_back(2 * i, 2 * i + 1);
    pairs.emplace_back(2 * i + 2, 2 * i + 1);
  }
  names.push_back("v" + std::to_string(m));
  return FiniteSpace::build_indexed(std::move(names), pairs);
}

FiniteSpace grid_model(int nx, int ny) {
  if (nx < 1 || ny < 1) {
    throw Error(ErrorCode::kBadParameter, "grid_model needs nx, ny >= 1");
  }
  return product_space(path_model(nx), path_model(ny));
}

}  // namespace dvt
