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

// Instance files: one JSON document holding the space, C, the map and
// optional certificate and expectations.
//
//   {
//     "name": "ex_circle_d(5)",
//     "points": ["v0", "e0", ...],
//     "hasse": [["v0", "e0"], ...],           // (face, cell) pairs
//     "C": ["v1", ...],
//     "map_kind": "function",                 // or "setvalued"
//     "map": {"v1": ["v3"], ...},
//     "certificate": [{"v1": "v1", ...}, ...],
//     "expected": {"iter": 4, "hypotheses": {"continuous": true},
//                  "levels": {"2": ["v1", ...]}}
//   }
//
// "iter" is an integer or the string "inf".

#ifndef DVT_INSTANCE_IO_HPP_
#define DVT_INSTANCE_IO_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dvt/certificates.hpp"
#include "dvt/gallery.hpp"
#include "dvt/maps.hpp"
#include "dvt/topology.hpp"
#include "dvt/viability.hpp"

namespace dvt {

struct Expectations {
  std::optional<Iter> iter;
  HypothesisProfile hypotheses;
  std::map<std::size_t, std::vector<std::string>> levels;
};

struct Instance {
  std::string name;
  FiniteSpace space;
  Dynamics map;
  std::optional<HomotopyCertificate> certificate;
  std::optional<Expectations> expected;
  // Non-fatal findings of the parser (e.g. C not closed).
  std::vector<std::string> warnings;

  bool is_function() const { return std::holds_alternative<CellMap>(map); }
};

// Throws kParseError for malformed documents; referential errors keep their
// own codes (kUnknownCell, kPartialMap, kEmptyImage, ...) and carry
// "<source>:<line>: " in the message.
Instance parse_instance_text(const std::string& text,
                             const std::string& source = "<input>");
Instance parse_instance(const std::string& path);

// Deterministic: the same instance always yields the same bytes.
std::string emit_instance(const Instance& instance);
void write_instance(const Instance& instance, const std::string& path);

Instance to_instance(const GalleryInstance& g);

}  // namespace dvt

#endif  // DVT_INSTANCE_IO_HPP_
