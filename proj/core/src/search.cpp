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

#include "dvt/search.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <sstream>
#include <thread>

#include "dvt/cohomology.hpp"
#include "dvt/error.hpp"

namespace dvt {

namespace {

// rng() % n keeps streams identical across standard libraries, unlike the
// distribution classes.
std::size_t pick(Rng& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }
bool coin(Rng& rng, unsigned num, unsigned den) { return rng() % den < num; }

template <typename T>
const T& pick_from(Rng& rng, const std::vector<T>& v) {
  return v[pick(rng, v.size())];
}

}  // namespace

std::uint64_t instance_seed(std::uint64_t run_seed, std::size_t i) {
  // splitmix64 finalizer
  std::uint64_t z = run_seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(i) + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace gen {

FiniteSpace graded_space(Rng& rng, std::size_t cells) {
  if (cells == 0) throw Error(ErrorCode::kBadParameter, "cells must be positive");
  const std::size_t max_rank = std::min<std::size_t>(3, cells - 1);
  std::vector<std::vector<Cell>> by_rank(max_rank + 1);
  std::vector<std::string> names;
  std::vector<std::pair<Cell, Cell>> hasse;
  for (Cell i = 0; i < cells; ++i) {
    names.push_back("c" + std::to_string(i));
    std::size_t top = 0;
    while (top < max_rank && !by_rank[top].empty()) ++top;
    // Rank 0 is favoured so that higher cells have faces to choose from.
    const std::size_t rank = coin(rng, 1, 3) ? 0 : pick(rng, top + 1);
    if (rank > 0) {
      std::vector<Cell> pool = by_rank[rank - 1];
      const std::size_t k = std::min<std::size_t>(pool.size(), 1 + pick(rng, 3));
      for (std::size_t j = 0; j < k; ++j) {
        const std::size_t at = pick(rng, pool.size());
        hasse.emplace_back(pool[at], i);
        pool.erase(pool.begin() + static_cast<long>(at));
      }
    }
    by_rank[rank].push_back(i);
  }
  return FiniteSpace::build_indexed(std::move(names), hasse);
}

PointSet closed_subset(Rng& rng, const FiniteSpace& space) {
  // A proper subset when one turns up within a few draws.
  PointSet c = space.full_set();
  for (int attempt = 0; attempt < 4 && c == space.full_set(); ++attempt) {
    PointSet seeds = space.empty_set();
    const std::size_t k = 1 + pick(rng, 3);
    for (std::size_t i = 0; i < k; ++i) seeds.insert(static_cast<Cell>(pick(rng, space.size())));
    c = space.closure(seeds);
  }
  return c;
}

std::optional<CellMap> monotone_map(Rng& rng, const FiniteSpace& space, const PointSet& c,
                                    bool boundary_bias, int retries) {
  const PointSet bd = space.boundary(c);
  const std::size_t n = space.size();
  // Chance (in eighths) that an interior cell stays in C; varied per map so
  // that both short and long orbits are common.
  const unsigned stay = 2 + static_cast<unsigned>(pick(rng, 6));
  for (int attempt = 0; attempt < retries; ++attempt) {
    std::vector<Cell> img(n, 0);
    bool ok = true;
    for (Cell x : space.linear_extension()) {
      if (!c.contains(x)) continue;
      PointSet lower = space.empty_set();
      (space.down(x) & c).for_each([&](Cell y) {
        if (y != x) lower.insert(img[y]);
      });
      std::vector<Cell> all;
      std::vector<Cell> inside;
      for (Cell z = 0; z < n; ++z) {
        if (!lower.subset_of(space.down(z))) continue;
        all.push_back(z);
        if (c.contains(z)) inside.push_back(z);
      }
      if (all.empty()) {
        ok = false;
        break;
      }
      const bool on_boundary = boundary_bias && bd.contains(x);
      const bool prefer_inside =
          !inside.empty() && (on_boundary ? !coin(rng, 1, 8) : coin(rng, stay, 8));
      img[x] = pick_from(rng, prefer_inside ? inside : all);
    }
    if (ok) return CellMap(space, c, std::move(img));
  }
  return std::nullopt;
}

SetValuedMap usc_map(Rng& rng, const FiniteSpace& space, const PointSet& c,
                     bool boundary_bias) {
  const PointSet bd = space.boundary(c);
  const std::size_t n = space.size();
  std::vector<PointSet> img(n, space.empty_set());
  const std::vector<Cell>& order = space.linear_extension();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Cell x = *it;
    if (!c.contains(x)) continue;
    // Everything later assigned above x must be reachable upward from f(x).
    PointSet target = space.empty_set();
    (space.up(x) & c).for_each([&](Cell y) {
      if (y != x) target = target | img[y];
    });
    PointSet s = space.empty_set();
    if (target.empty()) {
      const Cell z = static_cast<Cell>(pick(rng, n));
      s.insert(z);
      if (coin(rng, 1, 3)) s.insert(pick_from(rng, space.up(z).members()));
    } else {
      PointSet common = space.full_set();
      target.for_each([&](Cell t) { common = common & space.down(t); });
      if (!common.empty() && coin(rng, 3, 4)) {
        const Cell z = pick_from(rng, common.members());
        s.insert(z);
        if (coin(rng, 1, 3)) s.insert(pick_from(rng, target.members()));
      } else {
        target.for_each([&](Cell t) { s.insert(pick_from(rng, space.down(t).members())); });
      }
    }
    if (boundary_bias && bd.contains(x) && !s.intersects(c) && !coin(rng, 1, 8)) {
      // A face of the image inside C keeps the image connected.
      std::vector<Cell> near;
      s.for_each([&](Cell z) {
        (space.down(z) & c).for_each([&](Cell w) { near.push_back(w); });
      });
      if (!near.empty()) {
        s.insert(pick_from(rng, near));
      } else {
        s.insert(pick_from(rng, c.members()));
      }
    }
    img[x] = s;
  }
  return SetValuedMap(space, c, std::move(img));
}

std::optional<HomotopyCertificate> random_fence(Rng& rng, const FiniteSpace& space,
                                                const PointSet& c, std::size_t steps) {
  const PointSet bd = space.boundary(c);
  const std::vector<Cell> members = c.members();
  HomotopyCertificate cert;
  cert.stages.push_back(CellMap::identity(space, c));
  std::vector<Cell> img(space.size(), 0);
  for (Cell x : members) img[x] = x;
  for (std::size_t step = 0; step < steps; ++step) {
    bool moved = false;
    for (int attempt = 0; attempt < 32 && !moved; ++attempt) {
      const Cell x = pick_from(rng, members);
      const PointSet around = space.up(img[x]) | space.down(img[x]);
      const Cell z = pick_from(rng, around.members());
      if (z == img[x]) continue;
      if (bd.contains(x) && !c.contains(z)) continue;
      bool monotone = true;
      for (Cell y : members) {
        if (y == x) continue;
        if (space.leq(y, x) && !space.leq(img[y], z)) monotone = false;
        if (space.leq(x, y) && !space.leq(z, img[y])) monotone = false;
        if (!monotone) break;
      }
      if (!monotone) continue;
      img[x] = z;
      cert.stages.emplace_back(space, c, img);
      moved = true;
    }
    if (!moved) break;
  }
  if (cert.stages.size() < 2) return std::nullopt;
  return cert;
}

}  // namespace gen

std::string_view to_string(SearchMode m) {
  switch (m) {
    case SearchMode::kProps: return "props";
    case SearchMode::kTheorem4: return "theorem4";
    case SearchMode::kHomotopy: return "homotopy";
  }
  return "?";
}

std::optional<SearchMode> parse_search_mode(std::string_view s) {
  for (SearchMode m : {SearchMode::kProps, SearchMode::kTheorem4, SearchMode::kHomotopy}) {
    if (to_string(m) == s) return m;
  }
  return std::nullopt;
}

namespace {

struct Outcome {
  bool evaluated = false;
  bool gate_holds = false;
  bool violation = false;
  std::optional<Iter> iter;
  std::vector<Finding> findings;
};

Instance make_instance(std::uint64_t seed, FiniteSpace space, Dynamics map,
                       std::optional<HomotopyCertificate> cert = {}) {
  Instance inst;
  inst.name = "seed-" + std::to_string(seed);
  inst.space = std::move(space);
  inst.map = std::move(map);
  inst.certificate = std::move(cert);
  return inst;
}

std::string failed_ids(const std::vector<StatementCheck>& checks) {
  std::string out;
  for (const StatementCheck& c : checks) {
    if (c.status != Status::kFails) continue;
    if (!out.empty()) out += ", ";
    out += c.id;
  }
  return out;
}

bool hypotheses_met(const Dynamics& f, const HypothesisReport& h) {
  if (std::holds_alternative<CellMap>(f)) {
    return h.c_closed.holds() && h.continuous.holds() && h.bdr_function.holds();
  }
  return h.c_closed.holds() && h.usc.holds() && h.conn.holds() && h.bdr_w.holds();
}

Outcome run_one(const SearchOptions& opt, std::uint64_t seed) {
  Rng rng(seed);
  Outcome out;
  const std::size_t cells = 2 + pick(rng, opt.max_cells - 1);
  FiniteSpace space = gen::graded_space(rng, cells);
  const PointSet c = gen::closed_subset(rng, space);

  if (opt.mode == SearchMode::kHomotopy) {
    auto fence = gen::random_fence(rng, space, c, 1 + pick(rng, 8));
    if (!fence) return out;
    const CellMap f = fence->stages.back();
    const ViabilityReport r = viability_sequence(space, f);
    out.iter = r.iter;
    std::optional<bool> gate;
    if (space.size() <= 16) gate = gate_boundary_connectedness(space, 16).holds;
    out.gate_holds = gate.value_or(false);
    const BoundReport b = check_theorem_bounds(space, f, r, gate);
    if (!(b.boundary_nonempty && b.x_connected && b.c_connected && gate.value_or(false))) {
      return out;
    }
    out.evaluated = true;
    const HomotopyFinding h = homotopy_bound_check(space, f, *fence, r);
    if (!h.bound_met) {
      out.findings.push_back({seed, "homotopy",
                              "fence of " + std::to_string(h.stages) + " stages, iter " +
                                  r.iter.to_string(),
                              make_instance(seed, std::move(space), f, std::move(fence))});
    }
    return out;
  }

  Dynamics f;
  if (coin(rng, 1, 2)) {
    auto m = gen::monotone_map(rng, space, c);
    if (!m) return out;
    f = std::move(*m);
  } else {
    f = gen::usc_map(rng, space, c);
  }
  const ViabilityReport r = viability_sequence(space, f);
  out.iter = r.iter;

  if (opt.mode == SearchMode::kProps) {
    out.evaluated = hypotheses_met(f, r.hypotheses);
    const std::vector<StatementCheck> checks = verify_propositions(space, f, r);
    const std::string failed = failed_ids(checks);
    const Iter oracle = max_orbit_bruteforce(space, f);
    if (!failed.empty()) {
      out.violation = true;
      out.findings.push_back({seed, "statement", failed, make_instance(seed, space, f)});
    }
    if (oracle != r.iter) {
      out.violation = true;
      out.findings.push_back({seed, "oracle",
                              "filtration " + r.iter.to_string() + ", orbit search " +
                                  oracle.to_string(),
                              make_instance(seed, space, f)});
    }
    return out;
  }

  // theorem4
  std::optional<bool> gate;
  if (space.size() <= 16) gate = gate_boundary_connectedness(space, 16).holds;
  out.gate_holds = gate.value_or(false);
  const BoundReport b = check_theorem_bounds(space, f, r, gate);
  out.evaluated = std::any_of(b.checks.begin(), b.checks.end(),
                              [](const BoundCheck& k) { return k.id == "bound.4" && k.applicable; });
  if (!b.all_satisfied()) {
    std::string ids;
    for (const BoundCheck& k : b.checks) {
      if (k.applicable && !k.satisfied) ids += (ids.empty() ? "" : ", ") + k.id;
    }
    out.violation = true;
    out.findings.push_back({seed, "bound", ids + " with iter " + r.iter.to_string(),
                            make_instance(seed, std::move(space), std::move(f))});
  }
  return out;
}

}  // namespace

SearchSummary run_search(const SearchOptions& opt) {
  if (opt.instances == 0) throw Error(ErrorCode::kBadParameter, "instances must be positive");
  if (opt.max_cells < 2) throw Error(ErrorCode::kBadParameter, "max cells must be at least 2");
  if (opt.max_cells > 16 && !opt.allow_large) {
    throw Error(ErrorCode::kBadParameter, "max cells above 16 needs allow_large");
  }
  std::vector<Outcome> outcomes(opt.instances);
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < opt.instances; i = next++) {
      outcomes[i] = run_one(opt, instance_seed(opt.seed, i));
    }
  };
  unsigned threads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, opt.instances));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();

  SearchSummary s;
  s.options = opt;
  for (Outcome& o : outcomes) {
    if (o.evaluated) {
      ++s.evaluated;
    } else {
      ++s.skipped;
    }
    if (o.gate_holds) ++s.gate_holding;
    if (o.violation) ++s.violations;
    if (o.iter) ++s.iter_histogram[*o.iter];
    for (Finding& f : o.findings) s.findings.push_back(std::move(f));
  }
  std::stable_sort(s.findings.begin(), s.findings.end(),
                   [](const Finding& a, const Finding& b) { return a.seed < b.seed; });
  return s;
}

std::string render_summary(const SearchSummary& s) {
  std::ostringstream o;
  o << "mode: " << to_string(s.options.mode) << "\n";
  o << "seed: " << s.options.seed << "\n";
  o << "instances: " << s.options.instances << "\n";
  o << "max cells: " << s.options.max_cells << "\n";
  o << "evaluated: " << s.evaluated << "\n";
  o << "skipped: " << s.skipped << "\n";
  if (s.options.mode != SearchMode::kProps) o << "gate holding: " << s.gate_holding << "\n";
  o << "violations: " << s.violations << "\n";
  o << "findings: " << s.findings.size() << "\n";
  o << "iter histogram:";
  for (const auto& [iter, count] : s.iter_histogram) o << " " << iter.to_string() << "=" << count;
  o << "\n";
  for (const Finding& f : s.findings) {
    o << "  seed " << f.seed << " [" << f.kind << "] " << f.detail << "\n";
  }
  return o.str();
}

std::vector<std::string> dump_findings(const SearchSummary& s, const std::string& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::string> paths;
  for (const Finding& f : s.findings) {
    const std::string path = (std::filesystem::path(dir) / (std::string(to_string(s.options.mode)) + "-" +
                                                            f.kind + "-" + std::to_string(f.seed) + ".json"))
                                 .string();
    write_instance(f.instance, path);
    paths.push_back(path);
  }
  return paths;
}

}  // namespace dvt
