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

// Cell maps f: C -> X and set-valued maps f: C -> P*(X), plus decision
// procedures for the hypotheses the iteration bounds depend on.

#ifndef DVT_MAPS_HPP_
#define DVT_MAPS_HPP_

#include <string>
#include <variant>
#include <vector>

#include "dvt/topology.hpp"

namespace dvt {

// A total function from the cells of `domain` to cells of the space.
class CellMap {
 public:
  CellMap() = default;
  // `image[c]` is read for every c in domain; other entries are ignored.
  // Throws kPartialMap / kUnknownCell.
  CellMap(const FiniteSpace& space, PointSet domain, std::vector<Cell> image);

  static CellMap identity(const FiniteSpace& space, const PointSet& domain);

  const PointSet& domain() const { return domain_; }
  // Throws kNotInDomain.
  Cell operator()(Cell c) const;
  std::size_t universe() const { return domain_.universe(); }

  bool operator==(const CellMap& other) const = default;

 private:
  PointSet domain_;
  std::vector<Cell> image_;
};

// A total map from the cells of `domain` to nonempty sets of cells.
class SetValuedMap {
 public:
  SetValuedMap() = default;
  // Throws kPartialMap / kEmptyImage.
  SetValuedMap(const FiniteSpace& space, PointSet domain,
               std::vector<PointSet> image);

  static SetValuedMap from_function(const CellMap& f);

  const PointSet& domain() const { return domain_; }
  // Throws kNotInDomain.
  const PointSet& operator()(Cell c) const;
  std::size_t universe() const { return domain_.universe(); }

  bool operator==(const SetValuedMap& other) const = default;

 private:
  PointSet domain_;
  std::vector<PointSet> image_;
};

using Dynamics = std::variant<CellMap, SetValuedMap>;

const PointSet& domain_of(const Dynamics& f);

enum class Status { kHolds, kFails, kNotApplicable };

std::string_view to_string(Status s);

struct Check {
  Status status = Status::kNotApplicable;
  // On kFails: the cell (or cell pair, first <= second) violating the
  // condition.
  std::vector<Cell> witness;

  bool holds() const { return status == Status::kHolds; }
  bool fails() const { return status == Status::kFails; }

  static Check pass() { return {Status::kHolds, {}}; }
  static Check na() { return {Status::kNotApplicable, {}}; }
  static Check fail(std::vector<Cell> w) { return {Status::kFails, std::move(w)}; }
};

struct HypothesisReport {
  Check continuous;      // functions only
  Check usc;             // set-valued only
  Check conn;            // set-valued only
  Check bdr_w;           // set-valued only
  Check bdr_s;           // set-valued only
  Check bdr_function;    // functions only: f(boundary C) inside C
  Check c_closed;        // the domain is a closed set
};

// Continuity in the Alexandrov sense: monotone on the induced order of the
// domain. Witness on failure: x <= y with f(x) not <= f(y).
Check check_continuous(const FiniteSpace& space, const CellMap& f);

// Upper semicontinuity via minimal open neighbourhoods: for x <= y in the
// domain, f(y) must lie in the union of up(z) over z in f(x). Witness: (x, y).
Check check_usc(const FiniteSpace& space, const SetValuedMap& f);

// Every image is connected. Witness: the first cell with a disconnected image.
Check check_conn(const FiniteSpace& space, const SetValuedMap& f);

// f(x) in C for every x in the boundary of C = domain(f).
Check check_boundary_condition(const FiniteSpace& space, const CellMap& f);

struct BoundaryChecks {
  Check weak;    // f(x) meets C on the boundary
  Check strong;  // f(x) inside C on the boundary
};
BoundaryChecks check_boundary_conditions(const FiniteSpace& space,
                                         const SetValuedMap& f);

// Runs every applicable check for the map's kind.
HypothesisReport check_hypotheses(const FiniteSpace& space, const Dynamics& f);

// Union of images over A; throws kNotInDomain if A is not inside the domain.
PointSet image(const CellMap& f, const PointSet& a);
PointSet image(const SetValuedMap& f, const PointSet& a);
PointSet image(const Dynamics& f, const PointSet& a);

// Union of minimal open neighbourhoods of the members of s: the smallest
// open set containing s.
PointSet open_hull(const FiniteSpace& space, const PointSet& s);

}  // namespace dvt

#endif  // DVT_MAPS_HPP_
