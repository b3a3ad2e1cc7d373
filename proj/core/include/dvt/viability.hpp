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

// The viability filtration of a map f on a closed set C of a finite space X:
//
//   C_0 = X,  C_{n+1} = {x in C : f(x) in C_n}        (functions)
//             C_{n+1} = {x in C : f(x) meets C_n}     (set-valued maps)
//
// with layers A_n = C_n \ C_{n+1} and Iter(f, C, X) = sup{n : C_n nonempty}.
// C_n is the set of cells from which n applications of f are possible while
// every point before the last one stays in C.

#ifndef DVT_VIABILITY_HPP_
#define DVT_VIABILITY_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dvt/maps.hpp"
#include "dvt/topology.hpp"

namespace dvt {

// A count in N u {+infinity}.
class Iter {
 public:
  constexpr Iter() = default;
  constexpr explicit Iter(std::size_t n) : value_(n) {}
  static constexpr Iter infinity() {
    Iter i;
    i.infinite_ = true;
    return i;
  }

  constexpr bool is_infinite() const { return infinite_; }
  // Undefined for infinity.
  constexpr std::size_t value() const { return value_; }

  constexpr bool operator==(const Iter& o) const {
    return infinite_ == o.infinite_ && (infinite_ || value_ == o.value_);
  }
  constexpr std::strong_ordering operator<=>(const Iter& o) const {
    if (infinite_ || o.infinite_) return infinite_ <=> o.infinite_;
    return value_ <=> o.value_;
  }
  constexpr bool at_least(std::size_t n) const { return infinite_ || value_ >= n; }

  std::string to_string() const;
  // Accepts a decimal count or "inf".
  static std::optional<Iter> parse(const std::string& s);

 private:
  std::size_t value_ = 0;
  bool infinite_ = false;
};

// x_0 -> x_1 -> ... with x_i = f(x_{i-1}) (or x_i in f(x_{i-1})). For an
// infinite orbit, `cycle` is a suffix of `prefix` whose last element maps
// back to its first one.
struct Orbit {
  std::vector<Cell> prefix;
  std::vector<Cell> cycle;

  // Number of applications of f along the prefix.
  std::size_t steps() const { return prefix.empty() ? 0 : prefix.size() - 1; }
};

struct ViabilityReport {
  // C_0 = X, C_1 = C, ... . Ends with the empty set when Iter is finite, or
  // with the stabilized core C_s (C_{s+1} = C_s) when infinite.
  std::vector<PointSet> filtration;
  // A_n = C_n \ C_{n+1} for every n with C_{n+1} computed.
  std::vector<PointSet> layers;
  Iter iter;
  // Index s with C_{s+1} = C_s nonempty, when iter is infinite.
  std::optional<std::size_t> stabilized_at;
  Orbit witness;
  HypothesisReport hypotheses;

  // C_n for any n, extending the stored filtration.
  const PointSet& c(std::size_t n) const;
  // A_n for any n (empty beyond the filtration).
  PointSet a(std::size_t n) const;
  // The infinite core (empty set when iter is finite).
  PointSet core() const;
};

// Throws kEmptyC; kDomainMismatch if the map's universe differs from the
// space. Hypotheses are recorded but never block the computation.
ViabilityReport viability_sequence(const FiniteSpace& space, const Dynamics& f);

// Deterministic witness (smallest cell index at every choice).
Orbit extract_orbit(const ViabilityReport& report, const Dynamics& f);

// Independent oracle: longest walk in the step graph x -> f(x) restricted to
// starting points in C, with cycle detection. Does not look at the
// filtration.
Iter max_orbit_bruteforce(const FiniteSpace& space, const Dynamics& f);

// True when the orbit follows f, keeps every point but the last in C, and
// (for lassos) closes its cycle.
bool orbit_is_valid(const Dynamics& f, const Orbit& orbit);

// ------------------------------------------------- open-set decomposition

enum class DecompositionPrecondition {
  kDisjoint,              // (i)   K1 and K2 disjoint
  kOpenWithConnectedRest, // (ii)  U open and X \ U connected
  kBoundaryCovered,       // (iii) boundary(U) inside K1 u K2
  kClosedParts,           // (iv)  boundary(U) n K1 and boundary(U) n K2 closed
};

struct Decomposition {
  PointSet u1;
  PointSet u2;
};

// Splits the open set U into unions of its components whose boundaries lie
// in K1 resp. K2. Throws kPreconditionViolated (message names the clause)
// or kGateFailure when some component has a boundary meeting both K1 and
// K2; `gate_witness` receives that component.
Decomposition decompose_open_set(const FiniteSpace& space, const PointSet& u,
                                 const PointSet& k1, const PointSet& k2,
                                 PointSet* gate_witness = nullptr);

// ------------------------------------------------------ statement checks

struct StatementCheck {
  std::string id;       // e.g. "seq.2" or "fn.1"
  std::string text;     // the statement in words
  Status status = Status::kNotApplicable;
  std::vector<Cell> witness;
};

// Evaluates every applicable structural statement on the computed
// filtration. Set-theoretic statements always apply; topological ones need
// a closed C and, for functions, continuity with f(boundary C) inside C,
// for set-valued maps (usc), (Bdr-w) and (Conn).
std::vector<StatementCheck> verify_propositions(const FiniteSpace& space,
                                                const Dynamics& f,
                                                const ViabilityReport& report);

struct BoundCheck {
  std::string id;          // "bound.1" .. "bound.4"
  std::string hypotheses;  // what was required
  bool applicable = false;
  std::size_t bound = 0;
  bool satisfied = true;   // iter >= bound, or not applicable
};

struct BoundReport {
  bool boundary_nonempty = false;
  bool x_connected = false;
  bool c_connected = false;
  std::optional<bool> gate;  // unknown when not enumerated
  std::vector<BoundCheck> checks;
  // Largest bound asserted under the recorded hypotheses (0 if none).
  std::size_t asserted = 0;
  bool all_satisfied() const;
};

// `gate` is the result of the boundary-connectedness enumeration on X, or
// nullopt if it was not (or could not be) computed; the fifth-iteration
// bound is only asserted when it is known to hold.
BoundReport check_theorem_bounds(const FiniteSpace& space, const Dynamics& f,
                                 const ViabilityReport& report,
                                 std::optional<bool> gate);

// Iter(f, C_{n+1}, C_n) for a function, computed on the subspace C_n.
Iter restricted_iter(const FiniteSpace& space, const CellMap& f,
                     const ViabilityReport& report, std::size_t n);

// ------------------------------------------- fixed point via retraction

struct FixedPointResult {
  std::optional<Cell> cell;
  // Whether the fixed point property of C was decided, and its value.
  std::optional<bool> c_has_fpp;
};

// Decides the fixed point property of the subspace `c` by enumerating its
// monotone self-maps. Returns nullopt when |c| > max_cells.
std::optional<bool> has_fixed_point_property(const FiniteSpace& space,
                                             const PointSet& c,
                                             std::size_t max_cells = 8);

// `r` must be a continuous map from X \ Int C onto boundary(C) fixing the
// boundary (kNotARetraction otherwise); f must be continuous with
// f(boundary C) inside C (kPreconditionViolated). Returns a fixed cell of f
// found through g = f on f^{-1}(C), r o f elsewhere. `fpp_flag` supplies the
// fixed point property of C when |C| > 8 (kFPPUndecidable otherwise).
FixedPointResult fixed_point_via_retraction(const FiniteSpace& space,
                                            const CellMap& f,
                                            const CellMap& r,
                                            std::optional<bool> fpp_flag = {});

}  // namespace dvt

#endif  // DVT_VIABILITY_HPP_
