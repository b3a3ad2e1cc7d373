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

// Randomized falsification harness and the generators behind it.

#ifndef DVT_SEARCH_HPP_
#define DVT_SEARCH_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "dvt/certificates.hpp"
#include "dvt/instance_io.hpp"
#include "dvt/maps.hpp"
#include "dvt/topology.hpp"
#include "dvt/viability.hpp"

namespace dvt {

using Rng = std::mt19937_64;

// Seed of the i-th instance of a run.
std::uint64_t instance_seed(std::uint64_t run_seed, std::size_t i);

namespace gen {

// A graded poset on exactly `cells` cells: rank-0 cells have no faces, every
// other cell gets one to three faces from the rank below. Names "c0", ...
FiniteSpace graded_space(Rng& rng, std::size_t cells);

// The closure of a few random cells; never empty.
PointSet closed_subset(Rng& rng, const FiniteSpace& space);

// Images assigned along a linear extension, each chosen above the images of
// the cell's faces. With `boundary_bias` the boundary cells prefer images
// in C. Returns nullopt when `retries` attempts dead-end.
std::optional<CellMap> monotone_map(Rng& rng, const FiniteSpace& space, const PointSet& c,
                                    bool boundary_bias = true, int retries = 16);

// Images assigned top-down so that f(y) lies in the open hull of f(x)
// whenever x <= y; hence always usc. Images are usually connected.
SetValuedMap usc_map(Rng& rng, const FiniteSpace& space, const PointSet& c,
                     bool boundary_bias = true);

// A fence starting at the identity: each step changes one image to a
// comparable cell while keeping the stage monotone with f(boundary C) in C.
std::optional<HomotopyCertificate> random_fence(Rng& rng, const FiniteSpace& space,
                                                const PointSet& c, std::size_t steps);

}  // namespace gen

enum class SearchMode { kProps, kTheorem4, kHomotopy };

std::string_view to_string(SearchMode m);
std::optional<SearchMode> parse_search_mode(std::string_view s);

struct SearchOptions {
  std::uint64_t seed = 1;
  std::size_t instances = 1000;
  std::size_t max_cells = 12;  // at most 16 unless `allow_large`
  bool allow_large = false;
  SearchMode mode = SearchMode::kProps;
  unsigned threads = 0;  // 0: hardware concurrency
  std::string dump_dir;  // counterexample files are written here if set
};

struct Finding {
  std::uint64_t seed = 0;
  std::string kind;  // "statement", "oracle", "bound", "homotopy"
  std::string detail;
  Instance instance;
};

struct SearchSummary {
  SearchOptions options;
  std::size_t evaluated = 0;  // instances whose hypotheses were met
  std::size_t skipped = 0;
  std::size_t gate_holding = 0;
  std::size_t violations = 0;  // failures of proven statements
  std::map<Iter, std::size_t> iter_histogram;
  std::vector<Finding> findings;  // ordered by seed
};

// Deterministic in `options` (the thread count does not affect the result).
// Throws kBadParameter on zero counts or max_cells above 16 without
// allow_large.
SearchSummary run_search(const SearchOptions& options);

std::string render_summary(const SearchSummary& summary);

// Writes one instance file per finding; returns the paths.
std::vector<std::string> dump_findings(const SearchSummary& summary, const std::string& dir);

}  // namespace dvt

#endif  // DVT_SEARCH_HPP_
