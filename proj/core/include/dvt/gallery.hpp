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

// Cell-exact model instances with known iteration counts.
//
// Naming: cells of line models are named by their centre coordinate ("2",
// "2.5"); planar cells by "[x,y]" ("[1.5,0]" is the open edge from (1,0) to
// (2,0)); polar models by "(radial,angular)" with angular cells of
// circle_model(5) and radial cells "r2" / "r2-2.25".

#ifndef DVT_GALLERY_HPP_
#define DVT_GALLERY_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dvt/certificates.hpp"
#include "dvt/maps.hpp"
#include "dvt/topology.hpp"
#include "dvt/viability.hpp"

namespace dvt {

// Expected outcome of each hypothesis check; nullopt = not applicable to
// the map kind.
struct HypothesisProfile {
  std::optional<bool> continuous;
  std::optional<bool> usc;
  std::optional<bool> conn;
  std::optional<bool> bdr_w;
  std::optional<bool> bdr_s;
  std::optional<bool> bdr_function;

  bool operator==(const HypothesisProfile&) const = default;
};

HypothesisProfile profile_of(const HypothesisReport& h, bool is_function);

struct GalleryInstance {
  std::string name;
  std::string title;
  FiniteSpace space;
  Dynamics map;
  Iter expected_iter;
  HypothesisProfile expected_hypotheses;
  // Selected C_n, by cell name.
  std::map<std::size_t, std::vector<std::string>> expected_levels;
  std::optional<HomotopyCertificate> certificate;
  std::string notes;
};

// Accepts the catalogue names, including parameterised ones such as
// "ex_circle_d(9)" (odd d >= 5) and "ex_ndim_torus(5,7)" (coprime odd
// periods >= 5). Throws kUnknownExample (kBadParameter for invalid
// parameters).
GalleryInstance build_example(const std::string& name);

// The fixed catalogue, in presentation order.
const std::vector<std::string>& catalogue();

// The stripes model on a window of `periods` periods; the catalogue
// instance uses 3.
GalleryInstance stripes_window(int periods);

}  // namespace dvt

#endif  // DVT_GALLERY_HPP_
