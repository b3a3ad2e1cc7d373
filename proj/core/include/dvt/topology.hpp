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

// Finite topological spaces encoded by their specialization order.
//
// Convention used everywhere in dvt: p <= q means that p lies in the closure
// of {q} (a vertex lies below the edges it bounds). Open sets are exactly the
// up-sets, closed sets the down-sets, and the smallest open set containing x
// is up(x) = {y : y >= x}.

#ifndef DVT_TOPOLOGY_HPP_
#define DVT_TOPOLOGY_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace dvt {

using Cell = std::uint32_t;

// A subset of the cells of a space. The universe size is fixed at
// construction; binary operations require equal universes.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::size_t universe);
  PointSet(std::size_t universe, std::initializer_list<Cell> cells);

  static PointSet full(std::size_t universe);

  std::size_t universe() const { return universe_; }
  std::size_t count() const;
  bool empty() const;
  bool contains(Cell c) const {
    return c < universe_ && ((words_[c >> 6] >> (c & 63)) & 1U) != 0;
  }

  PointSet& insert(Cell c);
  PointSet& erase(Cell c);

  PointSet& operator|=(const PointSet& other);
  PointSet& operator&=(const PointSet& other);
  PointSet& operator-=(const PointSet& other);

  friend PointSet operator|(PointSet a, const PointSet& b) { return a |= b; }
  friend PointSet operator&(PointSet a, const PointSet& b) { return a &= b; }
  friend PointSet operator-(PointSet a, const PointSet& b) { return a -= b; }

  PointSet complement() const;
  bool subset_of(const PointSet& other) const;
  bool intersects(const PointSet& other) const;

  // Smallest member, if any.
  std::optional<Cell> first() const;

  // Members in ascending index order.
  std::vector<Cell> members() const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = __builtin_ctzll(bits);
        fn(static_cast<Cell>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

  bool operator==(const PointSet& other) const = default;
  // Orders by universe, then by the members read as a binary number
  // (cell 0 is the least significant bit).
  bool operator<(const PointSet& other) const;

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  void check_universe(const PointSet& other) const;

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

// A finite T0 space. Immutable after construction.
class FiniteSpace {
 public:
  using Pair = std::pair<std::string, std::string>;

  FiniteSpace() = default;

  // Builds the space whose order is the reflexive-transitive closure of
  // `hasse` (pairs (face, cell) meaning face <= cell). Throws
  // kDuplicateCell, kUnknownCell or kCyclicOrder.
  static FiniteSpace build(std::vector<std::string> cells,
                           const std::vector<Pair>& hasse);
  // Same, with pairs given by index.
  static FiniteSpace build_indexed(std::vector<std::string> cells,
                                   const std::vector<std::pair<Cell, Cell>>& hasse);

  std::size_t size() const { return names_.size(); }
  const std::string& name(Cell c) const { return names_.at(c); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Cell> find(std::string_view name) const;
  // Throws kUnknownCell.
  Cell index(std::string_view name) const;

  bool leq(Cell p, Cell q) const { return down_[q].contains(p); }
  bool comparable(Cell p, Cell q) const { return leq(p, q) || leq(q, p); }

  // up(x): the minimal open neighbourhood of x.
  const PointSet& up(Cell c) const { return up_.at(c); }
  // down(x): the closure of {x}.
  const PointSet& down(Cell c) const { return down_.at(c); }
  // Throws kUnknownCell.
  PointSet minimal_open(std::string_view name) const;

  // Covering pairs (face, cell) of the order, sorted.
  const std::vector<std::pair<Cell, Cell>>& hasse() const { return hasse_; }
  // Cells ordered so that every face precedes the cells above it.
  const std::vector<Cell>& linear_extension() const { return linear_; }

  PointSet empty_set() const { return PointSet(size()); }
  PointSet full_set() const { return PointSet::full(size()); }
  // Throws kUnknownCell.
  PointSet set_of(std::initializer_list<std::string_view> names) const;
  PointSet set_of(const std::vector<std::string>& names) const;
  std::vector<std::string> names_of(const PointSet& s) const;

  PointSet closure(const PointSet& a) const;
  PointSet interior(const PointSet& a) const;
  PointSet boundary(const PointSet& a) const;
  bool is_open(const PointSet& a) const;
  bool is_closed(const PointSet& a) const;

  // Boundary of `a` relative to the subspace `y`; throws kNotASubset.
  PointSet relative_boundary(const PointSet& a, const PointSet& y) const;
  PointSet relative_closure(const PointSet& a, const PointSet& y) const;
  PointSet relative_interior(const PointSet& a, const PointSet& y) const;

  // Components of the subspace `a`, ordered by smallest member.
  std::vector<PointSet> connected_components(const PointSet& a) const;
  // The empty set counts as connected.
  bool is_connected(const PointSet& a) const;

  // Cells covered by / covering c.
  const std::vector<Cell>& faces(Cell c) const { return lower_covers_.at(c); }
  const std::vector<Cell>& cofaces(Cell c) const { return upper_covers_.at(c); }

 private:
  void check(const PointSet& a) const;

  std::vector<std::string> names_;
  std::unordered_map<std::string, Cell> index_;
  std::vector<PointSet> up_;
  std::vector<PointSet> down_;
  std::vector<std::pair<Cell, Cell>> hasse_;
  std::vector<std::vector<Cell>> lower_covers_;
  std::vector<std::vector<Cell>> upper_covers_;
  std::vector<Cell> linear_;
};

// The subspace topology on a subset of an Alexandrov space is the
// Alexandrov topology of the induced order.
struct SubspaceView {
  FiniteSpace space;              // induced order on the carrier
  std::vector<Cell> to_ambient;   // local index -> ambient index
  std::vector<std::optional<Cell>> from_ambient;

  static SubspaceView of(const FiniteSpace& ambient, const PointSet& carrier);

  PointSet to_local(const PointSet& ambient_set) const;
  PointSet to_ambient_set(const PointSet& local_set,
                          std::size_t ambient_size) const;
};

// Product order: (p,q) <= (p',q') iff p <= p' and q <= q'. Cell names are
// "(p,q)"; cell (i,j) has index i * |Q| + j.
FiniteSpace product_space(const FiniteSpace& p, const FiniteSpace& q);

// d vertices v0..v{d-1} and d edges e0..e{d-1}, e_i spanning v_i and
// v_{i+1 mod d}. Cell 2i is v_i, cell 2i+1 is e_i. Requires d >= 3.
FiniteSpace circle_model(int d);
// n edges in a line: v0 e0 v1 ... e{n-1} vn, interleaved. Requires n >= 1.
FiniteSpace path_model(int n);
// product_space(path_model(nx), path_model(ny)).
FiniteSpace grid_model(int nx, int ny);

}  // namespace dvt

#endif  // DVT_TOPOLOGY_HPP_
