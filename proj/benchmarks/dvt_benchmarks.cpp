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

#include <benchmark/benchmark.h>

#include <string>

#include "dvt/cohomology.hpp"
#include "dvt/gallery.hpp"
#include "dvt/search.hpp"
#include "dvt/viability.hpp"

namespace dvt {
namespace {

void BM_Filtration(benchmark::State& state, const std::string& name) {
  const GalleryInstance g = build_example(name);
  for (auto _ : state) {
    benchmark::DoNotOptimize(viability_sequence(g.space, g.map).iter);
  }
  state.counters["cells"] = static_cast<double>(g.space.size());
}
BENCHMARK_CAPTURE(BM_Filtration, circle, std::string("ex_circle_d(7)"));
BENCHMARK_CAPTURE(BM_Filtration, stargate, std::string("ex_stargate"));
BENCHMARK_CAPTURE(BM_Filtration, torus, std::string("ex_ndim_torus(5,7)"));
BENCHMARK_CAPTURE(BM_Filtration, corr_main, std::string("ex_corr_main"));

void BM_OrbitBruteforce(benchmark::State& state) {
  const GalleryInstance g = build_example("ex_ndim_torus(5,7)");
  for (auto _ : state) benchmark::DoNotOptimize(max_orbit_bruteforce(g.space, g.map));
}
BENCHMARK(BM_OrbitBruteforce);

void BM_CircleFamily(benchmark::State& state) {
  const GalleryInstance g =
      build_example("ex_circle_d(" + std::to_string(state.range(0)) + ")");
  for (auto _ : state) benchmark::DoNotOptimize(viability_sequence(g.space, g.map).iter);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CircleFamily)->Arg(5)->Arg(25)->Arg(125)->Arg(625)->Complexity();

void BM_Betti1(benchmark::State& state) {
  const FiniteSpace s = grid_model(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(betti1(s));
  state.counters["cells"] = static_cast<double>(s.size());
}
BENCHMARK(BM_Betti1)->Arg(2)->Arg(4)->Arg(8);

void BM_Gate(benchmark::State& state) {
  const FiniteSpace s = path_model(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gate_boundary_connectedness(s, 64).holds);
  state.counters["cells"] = static_cast<double>(s.size());
}
BENCHMARK(BM_Gate)->Arg(4)->Arg(8)->Arg(11);

void BM_Search(benchmark::State& state) {
  SearchOptions o;
  o.instances = 200;
  o.threads = 1;
  o.mode = static_cast<SearchMode>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_search(o).evaluated);
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * o.instances));
}
BENCHMARK(BM_Search)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace dvt

BENCHMARK_MAIN();
