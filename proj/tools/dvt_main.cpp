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

// dvt: analyze instance files, run the gallery and the random search.
//
// Exit codes: 0 ok, 1 usage or input error, 2 expectation mismatch,
// 3 falsification (a proven statement failed under verified hypotheses).

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "dvt/cohomology.hpp"
#include "dvt/error.hpp"
#include "dvt/gallery.hpp"
#include "dvt/instance_io.hpp"
#include "dvt/report.hpp"
#include "dvt/search.hpp"

namespace {

constexpr int kInputError = 1;

struct AnalyzeArgs {
  std::string path;
  dvt::AnalyzeOptions options;
  std::string dot;
  bool json = false;
};

int emit_run(const dvt::Instance& inst, const AnalyzeArgs& args) {
  for (const std::string& w : inst.warnings) std::cerr << "warning: " << w << "\n";
  const dvt::RunReport report = dvt::analyze(inst, args.options);
  std::cout << (args.json ? dvt::render_json(inst.space, report)
                          : dvt::render_text(inst.space, report));
  if (!args.dot.empty()) {
    std::ofstream out(args.dot, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << args.dot << "\n";
      return kInputError;
    }
    out << dvt::render_dot(inst.space, report.viability);
  }
  return report.exit_code();
}

void add_analysis_flags(CLI::App* cmd, AnalyzeArgs& a) {
  cmd->add_flag("--orbit", a.options.orbit, "Print a longest orbit (or lasso)");
  cmd->add_flag("--propositions", a.options.propositions, "Check the filtration statements");
  cmd->add_flag("--bounds", a.options.bounds, "Check the lower bounds on the iteration count");
  cmd->add_flag("--betti", a.options.betti, "Betti numbers of the order complex");
  cmd->add_flag("--gate", a.options.gate, "Enumerate the boundary-connectedness gate");
  cmd->add_option("--gate-cap", a.options.gate_cap, "Largest space for gate enumeration")
      ->check(CLI::Range(1, 64));
  cmd->add_option("--dot", a.dot, "Write a layered DOT graph to this file");
  cmd->add_flag("--json", a.json, "Structured report instead of text");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete viability filtrations on finite spaces"};
  app.require_subcommand(1);

  AnalyzeArgs analyze_args;
  CLI::App* analyze = app.add_subcommand("analyze", "Analyze an instance file");
  analyze->add_option("path", analyze_args.path, "Instance file")->required();
  add_analysis_flags(analyze, analyze_args);

  dvt::SearchOptions search_opts;
  std::string mode = "props";
  std::string dump_dir;
  CLI::App* search = app.add_subcommand("search", "Randomized falsification search");
  search->add_option("--seed", search_opts.seed, "Run seed");
  search->add_option("--instances", search_opts.instances, "Number of instances")
      ->check(CLI::PositiveNumber);
  search->add_option("--max-cells", search_opts.max_cells, "Largest generated space")
      ->check(CLI::Range(2, 64));
  search->add_flag("--allow-large", search_opts.allow_large, "Permit more than 16 cells");
  search->add_option("--mode", mode, "props | theorem4 | homotopy")
      ->check(CLI::IsMember({"props", "theorem4", "homotopy"}));
  search->add_option("--threads", search_opts.threads, "Worker threads (0: all cores)");
  search->add_option("--dump", dump_dir, "Directory for counterexample instance files");

  CLI::App* gallery = app.add_subcommand("gallery", "Built-in model instances");
  gallery->require_subcommand(1);
  CLI::App* g_list = gallery->add_subcommand("list", "List the catalogue");
  AnalyzeArgs run_args;
  std::string run_name;
  CLI::App* g_run = gallery->add_subcommand("run", "Analyze a catalogue instance");
  g_run->add_option("name", run_name, "Instance name")->required();
  add_analysis_flags(g_run, run_args);
  std::string export_name;
  std::string export_path;
  CLI::App* g_export = gallery->add_subcommand("export", "Write an instance file");
  g_export->add_option("name", export_name, "Instance name")->required();
  g_export->add_option("path", export_path, "Output file")->required();

  std::string coh_path;
  std::size_t coh_cap = dvt::kDefaultGateCap;
  CLI::App* coh = app.add_subcommand("cohomology", "Betti numbers and gate property of a space");
  coh->add_option("path", coh_path, "Instance file")->required();
  coh->add_option("--gate-cap", coh_cap, "Largest space for gate enumeration")
      ->check(CLI::Range(1, 64));

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) {
      return emit_run(dvt::parse_instance(analyze_args.path), analyze_args);
    }
    if (search->parsed()) {
      search_opts.mode = *dvt::parse_search_mode(mode);
      const dvt::SearchSummary summary = dvt::run_search(search_opts);
      std::cout << dvt::render_summary(summary);
      if (!dump_dir.empty()) {
        for (const std::string& p : dvt::dump_findings(summary, dump_dir)) {
          std::cout << "dumped " << p << "\n";
        }
      }
      // Conjecture mode never fails.
      if (search_opts.mode != dvt::SearchMode::kHomotopy && summary.violations > 0) return 3;
      return 0;
    }
    if (g_list->parsed()) {
      for (const std::string& name : dvt::catalogue()) {
        const dvt::GalleryInstance g = dvt::build_example(name);
        std::cout << name << "  " << g.title << "  (iter " << g.expected_iter.to_string() << ")\n";
      }
      return 0;
    }
    if (g_run->parsed()) {
      return emit_run(dvt::to_instance(dvt::build_example(run_name)), run_args);
    }
    if (g_export->parsed()) {
      dvt::write_instance(dvt::to_instance(dvt::build_example(export_name)), export_path);
      return 0;
    }
    if (coh->parsed()) {
      const dvt::Instance inst = dvt::parse_instance(coh_path);
      const dvt::OrderComplex k(inst.space);
      std::cout << "cells: " << inst.space.size() << "\n";
      std::cout << "order complex: " << k.vertex_count() << " vertices, " << k.edges().size()
                << " edges, " << k.triangles().size() << " triangles\n";
      std::cout << "b0: " << k.betti0() << "\nb1: " << k.betti1() << "\n";
      if (inst.space.size() <= coh_cap) {
        const dvt::GateReport g = dvt::gate_boundary_connectedness(inst.space, coh_cap);
        std::cout << "gate: " << (g.holds ? "holds" : "fails");
        if (g.counterexample) {
          std::cout << ", counterexample {";
          bool first = true;
          for (const std::string& n : inst.space.names_of(*g.counterexample)) {
            std::cout << (first ? "" : " ") << n;
            first = false;
          }
          std::cout << "}";
        }
        std::cout << "\n";
      } else {
        std::cout << "gate: not enumerated (" << inst.space.size() << " cells)\n";
      }
      return 0;
    }
  } catch (const dvt::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return 0;
}
